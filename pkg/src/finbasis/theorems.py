"""Executable checks for the theorems about finitary bases.

Each function runs one theorem against a concrete poset and basis and
returns the list of counterexamples it found; an empty list means the
theorem held on every instance examined.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .basis import _subset_masks, bottom_of, check_finitary_basis
from .cover import (
    PreconditionNotDirected, check_union_of_directed_ideals, lub_in_completion,
    union_of,
)
from .ideal import (
    build_completion, bottom_ideal, check_principality, enumerate_ideals,
    is_directed, is_downward_closed_alt, is_downward_closed_orig, is_ideal,
    principal_ideal,
)
from .order import Poset, is_lub, lub_in


def all_subsets(xs: Iterable) -> Iterable[tuple]:
    xs = tuple(xs)
    for k in range(len(xs) + 1):
        yield from itertools.combinations(xs, k)


def lubs_unique(p: Poset, b: Iterable | None = None, subsets=None) -> list:
    """No subset has two distinct elements satisfying the lub predicate,
    and :func:`lub_in` returns the surviving one."""
    b = p.carrier if b is None else tuple(sorted(b))
    bad = []
    for s in (all_subsets(b) if subsets is None else subsets):
        lubs = [x for x in b if is_lub(p, b, s, x)]
        if len(lubs) > 1 or lub_in(p, b, s) != (lubs[0] if lubs else None):
            bad.append((s, lubs))
    return bad


def principal_ideals_are_ideals(p: Poset, b: Iterable) -> list:
    b = tuple(b)
    return [x for x in b if not is_ideal(p, b, principal_ideal(p, b, x).members)]


def bottom_singleton_is_bottom_ideal(p: Poset, b: Iterable) -> list:
    b = tuple(b)
    bot = bottom_ideal(p, b)
    bad = []
    if bot.members != (bottom_of(p, b),) or not is_ideal(p, b, bot.members):
        bad.append(("not an ideal", bot.members))
    for ideal in enumerate_ideals(p, b):
        if not bot.issubset(ideal):
            bad.append(("not below", ideal.members))
    return bad


def dc_formulations_agree(p: Poset, b: Iterable, subsets=None) -> list:
    b = tuple(b)
    bad = []
    for i in (all_subsets(b) if subsets is None else subsets):
        if is_downward_closed_orig(p, b, i).holds != is_downward_closed_alt(p, b, i).holds:
            bad.append(i)
    return bad


def directed_sets_inhabited(p: Poset) -> list:
    return [s for s in all_subsets(p.carrier) if is_directed(p, s) and not s]


def union_of_directed_ideals(p: Poset, b: Iterable) -> tuple[list, int]:
    """Every directed family of ideals has an ideal union equal to its lub.

    Returns ``(violations, families_checked)``; only directed families
    count as checked.
    """
    b = tuple(b)
    c = build_completion(p, b)
    bad = []
    checked = 0
    for fmask in _subset_masks(c.poset.mask(c.ideals)):
        si = c.poset.members(fmask)
        if not is_directed(c.poset, si):
            try:
                check_union_of_directed_ideals(p, b, si, completion=c)
            except PreconditionNotDirected:
                continue
            bad.append(("accepted undirected family", si))
            continue
        checked += 1
        try:
            verdict, union = check_union_of_directed_ideals(p, b, si, completion=c)
        except Exception as exc:  # a theorem failure, recorded not raised
            bad.append((type(exc).__name__, si))
            continue
        if union.members != union_of(si) or lub_in_completion(c, si) != union:
            bad.append(("union is not the lub", si))
    return bad, checked


def principality(p: Poset, b: Iterable) -> list:
    verdict = check_principality(p, b)
    return [] if verdict else [verdict.witness]


def is_basis(p: Poset, b: Iterable | None = None) -> bool:
    return check_finitary_basis(p, p.carrier if b is None else b).is_basis
