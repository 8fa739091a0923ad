"""Run the full check battery on a parsed spec and serialize the result."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import theorems
from .basis import check_finitary_basis
from .dsl import SpecDocument
from .generate import all_posets_upto, random_poset
from .ideal import build_completion, enumerate_ideals
from .order import DEFAULT_MAX_CARRIER, OrderError, covering_pairs, validate_poset

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# above these sizes the battery samples instead of enumerating
EXHAUSTIVE_SUBSETS_MAX = 12
UNION_COMPLETION_MAX = 12
SAMPLE_COUNT = 4096


@dataclass
class CheckOptions:
    closure: bool = False
    max_carrier: int = DEFAULT_MAX_CARRIER
    seed: int = 0
    exhaustive_size: int = 0
    random_count: int = 0
    random_size: int = 8


@dataclass
class RunReport:
    spec: dict
    poset: dict
    basis: dict | None = None
    ideals: dict | None = None
    completion: dict | None = None
    oracles: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def ok(self) -> bool:
        return all(o["status"] != FAIL for o in self.oracles.values())

    def to_dict(self) -> dict:
        return {
            "spec": self.spec, "poset": self.poset, "basis": self.basis,
            "ideals": self.ideals, "completion": self.completion,
            "oracles": self.oracles, "witnesses": self.witnesses, "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        lines = [f"{self.spec['name']}: {len(self.spec['elements'])} elements"]
        for name in sorted(self.oracles):
            o = self.oracles[name]
            lines.append(f"  {o['status'].upper():7} {name}  {o['detail']}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines) + "\n"

    def record(self, name, status, detail, witness=None):
        self.oracles[name] = {"status": status, "detail": detail}
        if status == FAIL and witness is not None:
            self.witnesses[name] = _jsonable(witness)


def _jsonable(x):
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=json.dumps) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "members"):
        return list(x.members)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _spec_dict(spec: SpecDocument) -> dict:
    return {
        "name": spec.name,
        "elements": list(spec.elements),
        "order_pairs": [list(pr) for pr in spec.order_pairs],
        "mode": spec.closure_mode,
        "basis_subset": None if spec.basis_subset is None else list(spec.basis_subset),
    }


def build_poset(spec: SpecDocument, options: CheckOptions | None = None):
    options = options or CheckOptions()
    closure = options.closure or spec.closure_mode == "hasse"
    return validate_poset(spec.elements, spec.order_pairs, closure=closure,
                          max_carrier=options.max_carrier)


def _sample_subsets(b: tuple, rng: random.Random):
    if len(b) <= EXHAUSTIVE_SUBSETS_MAX:
        return None, 1 << len(b)
    picks = []
    for _ in range(SAMPLE_COUNT):
        bits = rng.getrandbits(len(b))
        picks.append(tuple(x for k, x in enumerate(b) if bits >> k & 1))
    return picks, len(picks)


def _run(report: RunReport, name: str, fn, detail_fmt: str):
    try:
        bad = fn()
    except (OrderError, RuntimeError) as exc:
        report.record(name, FAIL, f"{type(exc).__name__}: {exc}", getattr(exc, "witness", None))
        return
    if bad:
        report.record(name, FAIL, f"{len(bad)} counterexample(s)", bad[0])
    else:
        report.record(name, PASS, detail_fmt)


def run_checks(spec: SpecDocument, options: CheckOptions | None = None) -> RunReport:
    options = options or CheckOptions()
    report = RunReport(spec=_spec_dict(spec), poset={}, seed=options.seed)
    rng = random.Random(options.seed)

    try:
        p = build_poset(spec, options)
    except OrderError as exc:
        report.poset = {"valid": False, "error": type(exc).__name__, "message": str(exc)}
        report.record("poset_axioms", FAIL, type(exc).__name__, exc.witness)
        return report
    report.poset = {
        "valid": True,
        "size": len(p),
        "relation_size": len(p.leq),
        "covering_pairs": [list(pr) for pr in covering_pairs(p)],
    }
    report.record("poset_axioms", PASS, "reflexive, antisymmetric, transitive")

    b = tuple(sorted(spec.basis))
    basis = check_finitary_basis(p, b)
    report.basis = {
        "is_basis": basis.is_basis,
        "bottom": basis.bottom,
        "failure": None if basis.failure is None else
        {"subset": list(basis.failure[0]), "reason": basis.failure[1]},
        "notes": list(basis.notes),
    }
    subsets, n_subsets = _sample_subsets(b, rng)
    _run(report, "lubs_unique", lambda: theorems.lubs_unique(p, b, subsets),
         f"{n_subsets} subsets")
    if not basis.is_basis:
        report.record("finitary_basis", FAIL, basis.failure[1], basis.failure)
        _run_suites(report, options, rng)
        return report
    report.record("finitary_basis", PASS, f"bottom {basis.bottom}")

    ideals = enumerate_ideals(p, b)
    report.ideals = {"count": len(ideals), "members": [list(i.members) for i in ideals]}
    completion = build_completion(p, b)
    report.completion = {
        "size": len(completion.ideals),
        "bottom": list(completion.bottom.members),
        "covering_pairs": [[list(lo.members), list(hi.members)]
                           for lo, hi in covering_pairs(completion.poset)],
    }
    report.record("completion_is_poset", PASS, f"{len(ideals)} ideals under inclusion")

    _run(report, "principal_ideals_are_ideals",
         lambda: theorems.principal_ideals_are_ideals(p, b), f"{len(b)} principal ideals")
    _run(report, "bottom_singleton_is_bottom_ideal",
         lambda: theorems.bottom_singleton_is_bottom_ideal(p, b), f"below {len(ideals)} ideals")
    _run(report, "downward_closure_formulations_agree",
         lambda: theorems.dc_formulations_agree(p, b, subsets), f"{n_subsets} subsets")
    _run(report, "ideals_are_principal", lambda: theorems.principality(p, b),
         "order-isomorphic to the basis")
    if len(ideals) <= UNION_COMPLETION_MAX:
        counted = {}

        def union_check():
            bad, counted["n"] = theorems.union_of_directed_ideals(p, b)
            return bad
        _run(report, "union_of_directed_ideals", union_check, "")
        if report.oracles["union_of_directed_ideals"]["status"] == PASS:
            report.oracles["union_of_directed_ideals"]["detail"] = \
                f"{counted['n']} directed families"
    else:
        report.record("union_of_directed_ideals", SKIPPED,
                      f"completion has {len(ideals)} ideals (limit {UNION_COMPLETION_MAX})")
    _run_suites(report, options, rng)
    return report


def battery(p, b=None) -> list:
    """All theorem checks on one poset; returns (theorem, witness) failures."""
    b = p.carrier if b is None else tuple(sorted(b))
    bad = [("lubs_unique", w) for w in theorems.lubs_unique(p, b)]
    bad += [("dc_eqv", w) for w in theorems.dc_formulations_agree(p, b)]
    if not theorems.is_basis(p, b):
        return bad
    bad += [("principal_ideals", w) for w in theorems.principal_ideals_are_ideals(p, b)]
    bad += [("bottom_ideal", w) for w in theorems.bottom_singleton_is_bottom_ideal(p, b)]
    bad += [("principality", w) for w in theorems.principality(p, b)]
    bad += [("union", w) for w in theorems.union_of_directed_ideals(p, b)[0]]
    return bad


def _run_suites(report: RunReport, options: CheckOptions, rng: random.Random):
    if options.exhaustive_size > 0:
        def exhaustive():
            bad = []
            for q in all_posets_upto(options.exhaustive_size):
                bad += [(list(q.carrier), sorted(map(list, q.leq)), w) for w in battery(q)]
            return bad
        _run(report, "exhaustive_suite", exhaustive,
             f"all posets up to {options.exhaustive_size} elements")
    if options.random_count > 0:
        def randomized():
            bad = []
            for _ in range(options.random_count):
                q = random_poset(rng.randint(1, options.random_size), rng)
                bad += [(list(q.carrier), sorted(map(list, q.leq)), w) for w in battery(q)]
            return bad
        _run(report, "random_suite", randomized,
             f"{options.random_count} posets up to {options.random_size} elements")
