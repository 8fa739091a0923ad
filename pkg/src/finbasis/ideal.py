"""Ideals of a finitary basis and the ideal completion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .basis import _subset_masks, require_basis
from .order import (
    ElementNotInBasis, InvariantViolation, Poset, SubsetEscapesBasis,
    SubsetVerdict, _bits, lub_in, ub_mask, validate_poset,
)


@dataclass(frozen=True, order=True)
class Ideal:
    """A downward-closed directed subset of a basis; members kept sorted."""

    members: tuple

    @classmethod
    def of(cls, xs: Iterable) -> "Ideal":
        return cls(tuple(sorted(set(xs))))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def issubset(self, other: "Ideal") -> bool:
        return set(self.members) <= set(other.members)

    def __str__(self):
        return "{" + ", ".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class Completion:
    """All ideals of a basis, ordered by inclusion."""

    ideals: tuple
    poset: Poset

    @property
    def order(self) -> frozenset:
        return self.poset.leq

    @property
    def bottom(self) -> Ideal:
        return lub_in(self.poset, self.ideals, ())


# mask-level predicates; the public wrappers below decode witnesses

def _directed_witness(p: Poset, smask: int) -> int | None:
    for f in _subset_masks(smask):
        if not ub_mask(p, smask, f):
            return f
    return None


def _dc_orig_witness(p: Poset, bmask: int, imask: int):
    for e in _bits(imask):
        for x in _bits(bmask):
            if p.up_mask(x) >> e & 1 and not imask >> x & 1:
                return e, x
    return None


def _dc_alt_witness(p: Poset, bmask: int, imask: int):
    for e in _bits(imask):
        missing = bmask & p.down_mask(e) & ~imask
        if missing:
            return e, next(_bits(missing))
    return None


def _masks(p: Poset, b, i) -> tuple[int, int]:
    bmask = p.mask(b)
    imask = p.mask(i, SubsetEscapesBasis)
    stray = imask & ~bmask
    if stray:
        raise SubsetEscapesBasis(p.members(stray)[0])
    return bmask, imask


def is_directed(p: Poset, s: Iterable) -> SubsetVerdict:
    """Every finite subset of ``s`` has an upper bound inside ``s``.

    On failure the witness is a smallest failing subset, lexicographically
    least among those; an empty ``s`` fails on the empty subset.
    """
    smask = p.mask(s)
    f = _directed_witness(p, smask)
    if f is None:
        return SubsetVerdict(True)
    return SubsetVerdict(False, p.members(f), "not directed")


def is_downward_closed_orig(p: Poset, b: Iterable, i: Iterable) -> SubsetVerdict:
    """For all e in i and x in b, x <= e implies x in i. Witness: (e, x)."""
    bmask, imask = _masks(p, b, i)
    w = _dc_orig_witness(p, bmask, imask)
    if w is None:
        return SubsetVerdict(True)
    return SubsetVerdict(False, (p.carrier[w[0]], p.carrier[w[1]]), "not downward closed")


def is_downward_closed_alt(p: Poset, b: Iterable, i: Iterable) -> SubsetVerdict:
    """The lower set in b of every member of i is contained in i."""
    bmask, imask = _masks(p, b, i)
    w = _dc_alt_witness(p, bmask, imask)
    if w is None:
        return SubsetVerdict(True)
    return SubsetVerdict(False, (p.carrier[w[0]], p.carrier[w[1]]), "not downward closed")


def is_ideal(p: Poset, b: Iterable, i: Iterable) -> SubsetVerdict:
    b = tuple(b)
    require_basis(p, b)
    bmask, imask = _masks(p, b, i)
    w = _dc_orig_witness(p, bmask, imask)
    if w is not None:
        return SubsetVerdict(False, (p.carrier[w[0]], p.carrier[w[1]]), "not downward closed")
    f = _directed_witness(p, imask)
    if f is not None:
        return SubsetVerdict(False, p.members(f), "not directed")
    return SubsetVerdict(True)


def principal_ideal(p: Poset, b: Iterable, x) -> Ideal:
    b = tuple(b)
    require_basis(p, b)
    bmask = p.mask(b)
    if x not in p or not bmask >> p.index(x) & 1:
        raise ElementNotInBasis(x)
    return Ideal(p.members(bmask & p.down_mask(p.index(x))))


def enumerate_ideals(p: Poset, b: Iterable) -> tuple:
    """All ideals of the basis ``b``, in canonical order.

    Filters every subset of ``b`` through the ideal predicate, then checks
    the result against the principal ideals; a finite basis has no others.
    """
    b = tuple(b)
    require_basis(p, b)
    bmask = p.mask(b)
    found = {
        imask for imask in _subset_masks(bmask)
        if imask
        and _dc_orig_witness(p, bmask, imask) is None
        and _directed_witness(p, imask) is None
    }
    principal = {bmask & p.down_mask(x) for x in _bits(bmask)}
    if found != principal:
        raise InvariantViolation(
            f"ideal enumeration disagrees with principal ideals: "
            f"{sorted(map(p.members, found ^ principal))}"
        )
    return tuple(sorted(Ideal(p.members(m)) for m in found))


def bottom_ideal(p: Poset, b: Iterable) -> Ideal:
    report = require_basis(p, tuple(b))
    return Ideal((report.bottom,))


def build_completion(p: Poset, b: Iterable) -> Completion:
    b = tuple(b)
    ideals = enumerate_ideals(p, b)
    pairs = {(i, j) for i in ideals for j in ideals if i.issubset(j)}
    poset = validate_poset(ideals, pairs, max_carrier=None)
    completion = Completion(ideals, poset)
    if completion.bottom != bottom_ideal(p, b):
        raise InvariantViolation("completion bottom is not the bottom singleton")
    return completion


def check_principality(p: Poset, b: Iterable) -> SubsetVerdict:
    """Ideals equal the principal ideals, and x -> principal ideal is an order-isomorphism."""
    b = tuple(sorted(b))
    ideals = set(enumerate_ideals(p, b))
    image = {x: principal_ideal(p, b, x) for x in b}
    if set(image.values()) != ideals:
        return SubsetVerdict(False, sorted(ideals ^ set(image.values())), "not principal")
    for x in b:
        for y in b:
            if p.le(x, y) != image[x].issubset(image[y]):
                return SubsetVerdict(False, (x, y), "order not preserved and reflected")
    return SubsetVerdict(True)
