"""Exhaustive and seeded-random generation of small labeled posets."""

from __future__ import annotations

import random
from typing import Iterator

from .order import Poset, validate_poset

# labeled posets on n points, OEIS A001035
KNOWN_LABELED_COUNTS = (1, 1, 3, 19, 219, 4231, 130023)


def default_labels(n: int) -> tuple:
    return tuple(f"e{i}" for i in range(n))


def _relations(n: int) -> Iterator[list]:
    """Up-set bitmasks (reflexive) of every partial order on range(n).

    Grows one point at a time: the new point k gets a down-set D and an
    up-set U among the earlier points, with D downward closed, U upward
    closed, and everything in D below everything in U.
    """
    if n == 0:
        yield []
        return
    k = n - 1
    for up in _relations(k):
        down = [0] * k
        for i in range(k):
            for j in range(k):
                if up[i] >> j & 1:
                    down[j] |= 1 << i
        for dmask in range(1 << k):
            # D must be a down-set
            if any(dmask >> i & 1 and down[i] & ~dmask for i in range(k)):
                continue
            above_d = (1 << k) - 1
            for i in range(k):
                if dmask >> i & 1:
                    above_d &= up[i]
            # candidates for U: elements above all of D, not in D
            free = above_d & ~dmask
            sub = free
            while True:
                if not any(sub >> i & 1 and up[i] & ~sub for i in range(k)):
                    new_up = [
                        up[i] | ((1 << k) if dmask >> i & 1 else 0) for i in range(k)
                    ]
                    yield new_up + [sub | (1 << k)]
                if sub == 0:
                    break
                sub = (sub - 1) & free


def all_posets(n: int, labels: tuple | None = None) -> Iterator[Poset]:
    """Every partial order on ``n`` labeled points, each exactly once."""
    labels = labels or default_labels(n)
    for up in _relations(n):
        leq = {(labels[i], labels[j]) for i in range(n) for j in range(n) if up[i] >> j & 1}
        yield validate_poset(labels, leq, max_carrier=None)


def all_posets_upto(n: int) -> Iterator[Poset]:
    for k in range(n + 1):
        yield from all_posets(k)


def random_poset(n: int, rng: random.Random, edge_prob=0.5, labels: tuple | None = None) -> Poset:
    """Random DAG on a shuffled order, closed reflexively and transitively."""
    labels = list(labels or default_labels(n))
    rng.shuffle(labels)
    edges = {
        (labels[i], labels[j])
        for i in range(n) for j in range(i + 1, n)
        if rng.random() < edge_prob
    }
    return validate_poset(labels, edges, closure=True, max_carrier=None)
