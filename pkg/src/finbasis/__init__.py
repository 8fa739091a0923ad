"""Finitary bases, ideals and ideal completions over finite posets."""

from .basis import BasisReport, NotAFinitaryBasis, bottom_of, check_finitary_basis
from .cover import (
    CoverWitness, Family, check_union_of_directed_ideals, finite_cover,
    lub_in_completion, minimum_cover, union_of,
)
from .dot import export_hasse, hasse_dot
from .dsl import SpecDocument, parse_family, parse_spec, render_spec
from .ideal import (
    Completion, Ideal, bottom_ideal, build_completion, enumerate_ideals,
    is_directed, is_downward_closed_alt, is_downward_closed_orig, is_ideal,
    principal_ideal,
)
from .order import (
    Poset, SubsetVerdict, is_lub, lower_set, lub_in, upper_bounds, validate_poset,
)
from .report import CheckOptions, RunReport, run_checks

__all__ = [
    "BasisReport", "CheckOptions", "Completion", "CoverWitness", "Family",
    "Ideal", "NotAFinitaryBasis", "Poset", "RunReport", "SpecDocument",
    "SubsetVerdict", "bottom_ideal", "bottom_of", "build_completion",
    "check_finitary_basis", "check_union_of_directed_ideals", "enumerate_ideals",
    "export_hasse", "finite_cover", "hasse_dot", "is_directed",
    "is_downward_closed_alt", "is_downward_closed_orig", "is_ideal", "is_lub",
    "lower_set", "lub_in", "lub_in_completion", "minimum_cover", "parse_family",
    "parse_spec", "principal_ideal", "render_spec", "run_checks", "union_of",
    "upper_bounds", "validate_poset",
]
