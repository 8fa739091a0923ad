"""Finite posets, upper bounds and least upper bounds.

Elements may be any hashable, mutually comparable values; the natural
ordering of the values is the canonical order used for every set-valued
result and for tie-breaking. Internally each poset numbers its carrier in
canonical order and keeps up/down sets as bitmasks, which keeps the
exhaustive checks in the other modules fast enough to run at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator

Element = Hashable

DEFAULT_MAX_CARRIER = 24


class OrderError(ValueError):
    """Base class for rejected order-theoretic input."""


class NotReflexive(OrderError):
    def __init__(self, x):
        super().__init__(f"relation is not reflexive: missing ({x}, {x})")
        self.witness = (x,)


class NotAntisymmetric(OrderError):
    def __init__(self, x, y):
        super().__init__(f"relation is not antisymmetric: {x} <= {y} and {y} <= {x}")
        self.witness = (x, y)


class NotTransitive(OrderError):
    def __init__(self, x, y, z):
        super().__init__(
            f"relation is not transitive: {x} <= {y} and {y} <= {z} but not {x} <= {z}"
        )
        self.witness = (x, y, z)


class DanglingElement(OrderError):
    def __init__(self, x):
        super().__init__(f"relation mentions {x}, which is not in the carrier")
        self.witness = (x,)


class CarrierTooLarge(OrderError):
    def __init__(self, size, cap):
        super().__init__(f"carrier has {size} elements; the cap is {cap}")
        self.witness = (size, cap)


class SubsetEscapesUniverse(OrderError):
    def __init__(self, x, what="universe"):
        super().__init__(f"{x} is not in the {what}")
        self.witness = (x,)


class SubsetEscapesCarrier(SubsetEscapesUniverse):
    def __init__(self, x):
        super().__init__(x, "carrier")


class SubsetEscapesBasis(SubsetEscapesUniverse):
    def __init__(self, x):
        super().__init__(x, "basis")


class ElementNotInUniverse(OrderError):
    def __init__(self, x, what="universe"):
        super().__init__(f"{x} is not in the {what}")
        self.witness = (x,)


class ElementNotInBasis(ElementNotInUniverse):
    def __init__(self, x):
        super().__init__(x, "basis")


class InvariantViolation(RuntimeError):
    """A proven theorem failed to hold. Always a defect, never user error."""


@dataclass(frozen=True)
class SubsetVerdict:
    """Outcome of a subset predicate, with a witness when it fails."""

    holds: bool
    witness: Any = None
    reason: str | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class Poset:
    """A validated finite partial order. Build it with :func:`validate_poset`."""

    carrier: tuple
    leq: frozenset
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _up: tuple = field(init=False, repr=False, compare=False, hash=False)
    _down: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {x: i for i, x in enumerate(self.carrier)}
        up = [0] * len(self.carrier)
        down = [0] * len(self.carrier)
        for x, y in self.leq:
            i, j = index[x], index[y]
            up[i] |= 1 << j
            down[j] |= 1 << i
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_down", tuple(down))

    def __len__(self):
        return len(self.carrier)

    def __contains__(self, x):
        return x in self._index

    def le(self, x, y) -> bool:
        return (x, y) in self.leq

    # bitmask helpers shared by the other modules

    def mask(self, xs: Iterable, error=None) -> int:
        m = 0
        for x in xs:
            try:
                m |= 1 << self._index[x]
            except (KeyError, TypeError):
                raise (error or SubsetEscapesCarrier)(x) from None
        return m

    def members(self, m: int) -> tuple:
        return tuple(self.carrier[i] for i in _bits(m))

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def index(self, x) -> int:
        return self._index[x]


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def canonical(xs: Iterable) -> tuple:
    return tuple(sorted(set(xs)))


def reflexive_transitive_closure(carrier: Iterable, leq: Iterable) -> frozenset:
    """Close a generating relation under reflexivity and transitivity."""
    elems = canonical(carrier)
    index = {x: i for i, x in enumerate(elems)}
    reach = [1 << i for i in range(len(elems))]
    for x, y in leq:
        if x not in index:
            raise DanglingElement(x)
        if y not in index:
            raise DanglingElement(y)
        reach[index[x]] |= 1 << index[y]
    # Warshall on bit rows
    for k in range(len(elems)):
        bit = 1 << k
        row = reach[k]
        for i in range(len(elems)):
            if reach[i] & bit:
                reach[i] |= row
    return frozenset((elems[i], elems[j]) for i in range(len(elems)) for j in _bits(reach[i]))


def validate_poset(carrier: Iterable, leq: Iterable, *, closure=False,
                   max_carrier: int | None = DEFAULT_MAX_CARRIER) -> Poset:
    """Check the partial-order axioms and return a :class:`Poset`.

    With ``closure=True`` the relation is first closed reflexively and
    transitively, so only antisymmetry can still fail. Witnesses are the
    canonically least offending elements.
    """
    elems = canonical(carrier)
    if max_carrier is not None and len(elems) > max_carrier:
        raise CarrierTooLarge(len(elems), max_carrier)
    rel = frozenset(leq)
    members = set(elems)
    for x, y in sorted(rel):
        if x not in members:
            raise DanglingElement(x)
        if y not in members:
            raise DanglingElement(y)
    if closure:
        rel = reflexive_transitive_closure(elems, rel)
    for x in elems:
        if (x, x) not in rel:
            raise NotReflexive(x)
    for x, y in sorted(rel):
        if x < y and (y, x) in rel:
            raise NotAntisymmetric(x, y)
    succ = {x: [] for x in elems}
    for x, y in sorted(rel):
        succ[x].append(y)
    for x in elems:
        for y in succ[x]:
            for z in succ[y]:
                if (x, z) not in rel:
                    raise NotTransitive(x, y, z)
    return Poset(elems, rel)


def _check_universe(p: Poset, universe, s) -> tuple[int, int]:
    umask = p.mask(universe)
    smask = p.mask(s, SubsetEscapesUniverse)
    stray = smask & ~umask
    if stray:
        raise SubsetEscapesUniverse(p.members(stray)[0])
    return umask, smask


def ub_mask(p: Poset, umask: int, smask: int) -> int:
    """Upper bounds of ``smask`` inside ``umask``, all as bitmasks."""
    out = umask
    for i in _bits(smask):
        out &= p.up_mask(i)
    return out


def lub_mask(p: Poset, umask: int, smask: int) -> int | None:
    """Index of the lub of ``smask`` in ``umask``, or None."""
    ubs = ub_mask(p, umask, smask)
    found = [i for i in _bits(ubs) if p.up_mask(i) & ubs == ubs]
    if len(found) > 1:
        raise InvariantViolation(
            f"multiple lubs {p.members(sum(1 << i for i in found))} "
            f"for {p.members(smask)}"
        )
    return found[0] if found else None


def upper_bounds(p: Poset, universe: Iterable, s: Iterable) -> tuple:
    """Every element of ``universe`` above all of ``s``, in canonical order."""
    umask, smask = _check_universe(p, universe, s)
    return p.members(ub_mask(p, umask, smask))


def is_upper_bound(p: Poset, universe: Iterable, s: Iterable, b) -> bool:
    return b in set(universe) and all(p.le(x, b) for x in s)


def is_lub(p: Poset, universe: Iterable, s: Iterable, b) -> bool:
    """The definitional LubIn predicate: ``b`` bounds ``s`` and lies below every bound."""
    universe = list(universe)
    s = list(s)
    if not is_upper_bound(p, universe, s, b):
        return False
    return all(p.le(b, c) for c in universe if is_upper_bound(p, universe, s, c))


def lub_in(p: Poset, universe: Iterable, s: Iterable):
    """The least upper bound of ``s`` within ``universe``, or None.

    Raises :class:`InvariantViolation` if two candidates survive, which
    antisymmetry rules out for a valid poset.
    """
    umask, smask = _check_universe(p, universe, s)
    i = lub_mask(p, umask, smask)
    return None if i is None else p.carrier[i]


def lower_set(p: Poset, universe: Iterable, b) -> tuple:
    umask = p.mask(universe)
    if b not in p or not umask >> p.index(b) & 1:
        raise ElementNotInUniverse(b)
    return p.members(umask & p.down_mask(p.index(b)))


def covering_pairs(p: Poset) -> tuple:
    """The covering relation (transitive reduction) in canonical order."""
    out = []
    for i, x in enumerate(p.carrier):
        strict_up = p.up_mask(i) & ~(1 << i)
        for j in _bits(strict_up):
            between = strict_up & p.down_mask(j) & ~(1 << j)
            if not between:
                out.append((x, p.carrier[j]))
    return tuple(sorted(out))
