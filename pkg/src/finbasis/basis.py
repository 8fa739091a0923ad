"""Finitary-basis recognition over finite carriers."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable

from .order import (
    OrderError, Poset, _bits, lub_mask, ub_mask,
)

NOT_INHABITED = "NotInhabited"
BOUNDED_WITHOUT_LUB = "BoundedSubsetWithoutLub"
COUNTABLE_NOTE = "countability holds vacuously: the carrier is finite"


class NotAFinitaryBasis(OrderError):
    def __init__(self, report: "BasisReport"):
        subset, reason = report.failure
        super().__init__(f"not a finitary basis: {reason} at subset {list(subset)}")
        self.report = report
        self.witness = report.failure


@dataclass(frozen=True)
class BasisReport:
    is_basis: bool
    bottom: object = None
    failure: tuple | None = None  # (subset, reason)
    notes: tuple = (COUNTABLE_NOTE,)


def _subset_masks(m: int) -> Iterable[int]:
    """All submasks of ``m``, smallest cardinality first, then lexicographic."""
    idx = list(_bits(m))
    for k in range(len(idx) + 1):
        for combo in itertools.combinations(idx, k):
            yield sum(1 << i for i in combo)


def _basis_mask(p: Poset, bmask: int, fast: bool) -> BasisReport:
    if not bmask:
        return BasisReport(False, None, ((), NOT_INHABITED))
    if fast:
        idx = list(_bits(bmask))
        candidates = itertools.chain(
            [0], ((1 << i) | (1 << j) for i, j in itertools.combinations(idx, 2)))
    else:
        candidates = _subset_masks(bmask)
    for s in candidates:
        if ub_mask(p, bmask, s) and lub_mask(p, bmask, s) is None:
            return BasisReport(False, None, (p.members(s), BOUNDED_WITHOUT_LUB))
    bot = lub_mask(p, bmask, 0)
    return BasisReport(True, p.carrier[bot], None)


@functools.lru_cache(maxsize=4096)
def _cached_basis(p: Poset, bmask: int) -> BasisReport:
    return _basis_mask(p, bmask, fast=False)


def check_finitary_basis(p: Poset, b: Iterable, *, fast=False) -> BasisReport:
    """Decide whether ``b`` is a finitary basis under the order of ``p``.

    Every subset of ``b``, the empty one included, that has an upper bound
    in ``b`` must have a lub in ``b``. The reference path enumerates all
    ``2**len(b)`` subsets, smallest first, so the reported failure is a
    minimal witness. ``fast=True`` checks only the empty set and pairs,
    which is equivalent on finite carriers but is not the reference.
    """
    bmask = p.mask(b)
    if fast:
        return _basis_mask(p, bmask, fast=True)
    return _cached_basis(p, bmask)


def require_basis(p: Poset, b: Iterable) -> BasisReport:
    report = check_finitary_basis(p, b)
    if not report.is_basis:
        raise NotAFinitaryBasis(report)
    return report


def bottom_of(p: Poset, b: Iterable):
    """The least element of ``b`` (the lub of the empty set), or None."""
    bmask = p.mask(b)
    i = lub_mask(p, bmask, 0)
    return None if i is None else p.carrier[i]
