"""Finite covering subfamilies and unions of directed families of ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .basis import _subset_masks, require_basis
from .ideal import Completion, Ideal, build_completion, is_directed, is_ideal
from .order import (
    InvariantViolation, OrderError, Poset, SubsetVerdict, _bits, lub_in,
    upper_bounds,
)


class NotCovered(OrderError):
    def __init__(self, x):
        super().__init__(f"{x} lies in no member of the family")
        self.witness = (x,)


class PreconditionNotDirected(OrderError):
    def __init__(self, witness):
        super().__init__(
            f"family is not directed in the completion: {[str(i) for i in witness]} "
            "has no upper bound in the family"
        )
        self.witness = witness


class MemberNotIdeal(OrderError):
    def __init__(self, member, verdict):
        super().__init__(f"{sorted(member)} is not an ideal ({verdict.reason})")
        self.witness = member
        self.verdict = verdict


class UnionNotIdeal(InvariantViolation):
    def __init__(self, union, verdict):
        super().__init__(f"union {list(union)} of a directed family is not an ideal: "
                         f"{verdict.reason} {verdict.witness}")
        self.witness = verdict.witness


def _set_key(s) -> tuple:
    return tuple(sorted(s))


@dataclass(frozen=True)
class Family:
    """A finite family of finite sets, stored in canonical order."""

    sets: tuple

    @classmethod
    def of(cls, sets: Iterable[Iterable]) -> "Family":
        unique = {frozenset(s) for s in sets}
        return cls(tuple(sorted(unique, key=_set_key)))

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


@dataclass(frozen=True)
class CoverWitness:
    subfamily: Family
    assignment: dict  # covered element -> chosen member set


def union_of(f: Iterable[Iterable]) -> tuple:
    out = set()
    for s in f:
        out.update(s)
    return tuple(sorted(out))


# Bitmask kernel. Elements are bit positions, the family is a sequence of
# masks in canonical order, and a cover is a mask over family positions.

def first_match_table(masks, width: int) -> list:
    """For each bit position, the index of the first mask containing it, or -1."""
    table = [-1] * width
    for pos in range(width):
        bit = 1 << pos
        for k, m in enumerate(masks):
            if m & bit:
                table[pos] = k
                break
    return table


def cover_mask(table, target: int) -> int:
    """Family positions chosen by walking ``target`` element by element.

    Returns -1 - position for the first element no member contains.
    """
    chosen = 0
    while target:
        low = target & -target
        pos = low.bit_length() - 1
        k = table[pos]
        if k < 0:
            return -1 - pos
        chosen |= 1 << k
        target ^= low
    return chosen


def finite_cover(f: Family | Iterable[Iterable], su: Iterable) -> CoverWitness:
    """A finite subfamily of ``f`` whose union contains ``su``.

    Builds the cover one element at a time, in canonical order, adding the
    canonically first member set containing each element. The result never
    has more sets than ``su`` has elements; it is not a minimum cover.
    """
    if not isinstance(f, Family):
        f = Family.of(f)
    target = sorted(set(su))
    universe = sorted(set(union_of(f)) | set(target))
    pos = {x: i for i, x in enumerate(universe)}
    masks = [sum(1 << pos[x] for x in s) for s in f.sets]
    table = first_match_table(masks, len(universe))
    chosen = cover_mask(table, sum(1 << pos[x] for x in target))
    if chosen < 0:
        raise NotCovered(universe[-1 - chosen])
    subfamily = Family(tuple(f.sets[k] for k in _bits(chosen)))
    assignment = {x: f.sets[table[pos[x]]] for x in target}
    return CoverWitness(subfamily, assignment)


def minimum_cover(f: Family | Iterable[Iterable], su: Iterable) -> CoverWitness:
    """A smallest covering subfamily, lexicographically first by family position.

    Exponential in the family size. Opt-in only: the covering theorem
    promises finiteness, not minimality.
    """
    if not isinstance(f, Family):
        f = Family.of(f)
    target = set(su)
    missing = target - set(union_of(f))
    if missing:
        raise NotCovered(min(missing))
    for k in range(len(f) + 1):
        for combo in itertools.combinations(range(len(f)), k):
            chosen = [f.sets[c] for c in combo]
            if target <= set(union_of(chosen)):
                assignment = {x: next(s for s in chosen if x in s) for x in sorted(target)}
                return CoverWitness(Family(tuple(chosen)), assignment)
    raise AssertionError("unreachable: the whole family covers the target")


def _union_verdict(p: Poset, b: tuple, c: Completion, si: tuple, union: tuple) -> SubsetVerdict:
    """Check the union is an ideal by the same route as the union theorem's proof."""
    members = set(union)
    if not members <= set(b):
        return SubsetVerdict(False, sorted(members - set(b)), "union escapes basis")
    # downward closure through the member ideal that holds each element
    for e in union:
        holder = next(i for i in si if e in i)
        for x in b:
            if p.le(x, e) and x not in holder:
                return SubsetVerdict(False, (e, x), "not downward closed")
    # directedness: cover F by finitely many members, bound those in si,
    # then bound F inside that upper-bound ideal
    family = Family.of(si)
    bmask = p.mask(union)
    for fmask in _subset_masks(bmask):
        f = p.members(fmask)
        cover = finite_cover(family, f)
        covering = [Ideal.of(s) for s in cover.subfamily]
        bounds = upper_bounds(c.poset, si, covering)
        if not bounds:
            return SubsetVerdict(False, f, "covering members have no bound in the family")
        ub_ideal = bounds[0]
        inner = upper_bounds(p, ub_ideal.members, f)
        if not inner:
            return SubsetVerdict(False, f, "not directed")
    return SubsetVerdict(True)


def check_union_of_directed_ideals(p: Poset, b: Iterable, si: Iterable,
                                   completion: Completion | None = None):
    """Union of a directed family of ideals, verified to be an ideal.

    Returns ``(verdict, ideal)``. Rejects families containing non-ideals or
    not directed under inclusion. Checks the union both by the definition
    and by the proof-shaped route; any failure or disagreement raises
    :class:`UnionNotIdeal`, which would falsify the theorem.
    """
    b = tuple(sorted(b))
    require_basis(p, b)
    si = tuple(sorted({Ideal.of(i) for i in si}))
    for member in si:
        verdict = is_ideal(p, b, member.members)
        if not verdict:
            raise MemberNotIdeal(member.members, verdict)
    c = completion if completion is not None else build_completion(p, b)
    directed = is_directed(c.poset, si)
    if not directed:
        raise PreconditionNotDirected(directed.witness)
    union = union_of(si)
    definitional = is_ideal(p, b, union)
    mirrored = _union_verdict(p, b, c, si, union)
    if not definitional:
        raise UnionNotIdeal(union, definitional)
    if not mirrored:
        raise UnionNotIdeal(union, mirrored)
    return mirrored, Ideal(union)


def lub_in_completion(c: Completion, si: Iterable) -> Ideal | None:
    return lub_in(c.poset, c.ideals, [Ideal.of(i) for i in si])
