"""Exit criteria, one test each; a pass/fail line per criterion is printed
in the terminal summary."""

import itertools
import random
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from finbasis.basis import bottom_of, check_finitary_basis
from finbasis.cover import (
    check_union_of_directed_ideals, cover_mask, finite_cover, first_match_table,
    lub_in_completion, union_of,
)
from finbasis.generate import KNOWN_LABELED_COUNTS, all_posets, all_posets_upto, random_poset
from finbasis.ideal import (
    Ideal, bottom_ideal, build_completion, check_principality, enumerate_ideals,
    is_directed, is_downward_closed_alt, is_downward_closed_orig, is_ideal,
    principal_ideal,
)
from finbasis.order import is_lub, lub_in

import oracles
from conftest import GOLDEN, SPECS

RESULTS = {}


@contextmanager
def criterion(number, name, limit=None):
    """Record PASS/FAIL for one criterion and enforce its time budget."""
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.1f}s, budget {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        RESULTS[str(number)] = (status, f"[{number}] {name} ({elapsed:.1f}s)")


def bases(max_n):
    for p in all_posets_upto(max_n):
        if check_finitary_basis(p, p.carrier).is_basis:
            yield p


def test_1_lubs_unique():
    with criterion(1, "lub uniqueness over all posets on <= 4 points", limit=10):
        counts = [sum(1 for _ in all_posets(n)) for n in range(5)]
        assert counts == list(KNOWN_LABELED_COUNTS[:5])
        assert counts[4] == 219
        violations = []
        for p in all_posets_upto(4):
            for universe in oracles.subsets(p.carrier):
                u = tuple(sorted(universe))
                for s in oracles.subsets(u):
                    found = [x for x in u if is_lub(p, u, s, x)]
                    if len(found) > 1 or lub_in(p, u, s) != (found[0] if found else None):
                        violations.append((p.leq, u, s, found))
        assert violations == []


def test_2_principal_ideals_are_ideals():
    with criterion(2, "every principal ideal is an ideal (bases on <= 5 points)", limit=60):
        violations = []
        checked = 0
        for p in bases(5):
            rel = set(p.leq)
            for x in p.carrier:
                i = principal_ideal(p, p.carrier, x)
                checked += 1
                ok = is_ideal(p, p.carrier, i.members).holds
                ok &= oracles.down_closed(rel, set(p.carrier), set(i))
                ok &= oracles.directed(rel, set(i))
                if not ok:
                    violations.append((p.leq, x))
        assert checked > 0 and violations == []


def test_3_bottom_singleton_is_bottom_ideal():
    with criterion(3, "{bottom} is the least ideal (bases on <= 5 points)", limit=60):
        violations = []
        for p in bases(5):
            bot = bottom_ideal(p, p.carrier)
            if bot != Ideal((bottom_of(p, p.carrier),)):
                violations.append((p.leq, "wrong bottom"))
            if not is_ideal(p, p.carrier, bot.members):
                violations.append((p.leq, "not an ideal"))
            for i in enumerate_ideals(p, p.carrier):
                if not bot.issubset(i):
                    violations.append((p.leq, i))
        assert violations == []


def test_4_downward_closure_formulations_agree():
    with criterion(4, "both downward-closure formulations agree"):
        disagreements = []
        for p in all_posets_upto(4):
            for b in oracles.subsets(p.carrier):
                for i in oracles.subsets(b):
                    if (is_downward_closed_orig(p, b, i).holds
                            != is_downward_closed_alt(p, b, i).holds):
                        disagreements.append((p.leq, b, i))
        rng = random.Random(20260101)
        for _ in range(10_000):
            p = random_poset(rng.randint(1, 8), rng)
            b = [x for x in p.carrier if rng.random() < 0.75]
            i = [x for x in b if rng.random() < 0.5]
            if (is_downward_closed_orig(p, b, i).holds
                    != is_downward_closed_alt(p, b, i).holds):
                disagreements.append((p.leq, b, i))
        assert disagreements == []


def _cover_sweep(n):
    """Every family of <= 4 distinct subsets of an n-point carrier, every target
    inside its union, through the kernel that finite_cover runs."""
    bad = 0
    count = 0
    popcount = [bin(m).count("1") for m in range(1 << n)]
    for k in range(5):
        for fam in itertools.combinations(range(1 << n), k):
            table = first_match_table(fam, n)
            union = 0
            for m in fam:
                union |= m
            t = union
            while True:
                chosen = cover_mask(table, t)
                count += 1
                covered = 0
                c = chosen
                while c > 0:
                    low = c & -c
                    covered |= fam[low.bit_length() - 1]
                    c ^= low
                if (chosen < 0 or chosen >> k or t & ~covered
                        or popcount[chosen & 0xF] > popcount[t]
                        or (t == 0 and chosen != 0)):
                    bad += 1
                if t == 0:
                    break
                t = (t - 1) & union
    return bad, count


def test_5_finite_cover():
    with criterion(5, "finite covering subfamilies (carriers <= 6, families <= 4)", limit=120):
        violations = 0
        # the public API, element objects and all, on carriers up to 4
        for n in range(5):
            carrier = [str(i) for i in range(n)]
            sets = [frozenset(s) for s in oracles.subsets(carrier)]
            for k in range(5):
                for fam in itertools.combinations(sets, k):
                    union = set().union(*fam)
                    for target in oracles.subsets(union):
                        w = finite_cover(fam, target)
                        if not (set(w.subfamily) <= set(fam)
                                and target <= set(union_of(w.subfamily))
                                and len(w.subfamily) <= len(target)
                                and (target or len(w.subfamily) == 0)):
                            violations += 1
        # the shared kernel on carriers 5 and 6
        total = 0
        for n in (5, 6):
            bad, count = _cover_sweep(n)
            violations += bad
            total += count
        assert total > 30_000_000
        assert violations == 0


def test_6_union_of_directed_ideals():
    with criterion(6, "union of a directed family of ideals is its lub ideal", limit=120):
        violations = []
        families = 0
        for p in bases(5):
            c = build_completion(p, p.carrier)
            rel = set(c.poset.leq)
            for si in oracles.subsets(c.ideals):
                directed = is_directed(c.poset, si).holds
                if directed != oracles.directed(rel, si):
                    violations.append((p.leq, si, "directedness"))
                if not directed:
                    continue
                families += 1
                _, union = check_union_of_directed_ideals(p, p.carrier, si, completion=c)
                if not is_ideal(p, p.carrier, union.members):
                    violations.append((p.leq, si, "not an ideal"))
                if lub_in_completion(c, si) != union:
                    violations.append((p.leq, si, "not the lub"))
        assert families > 0 and violations == []


def test_7_principality():
    with criterion(7, "ideals are exactly the principal ideals, order-isomorphically"):
        violations = []
        for p in bases(5):
            if not check_principality(p, p.carrier):
                violations.append(p.leq)
            image = {principal_ideal(p, p.carrier, x) for x in p.carrier}
            if image != set(enumerate_ideals(p, p.carrier)):
                violations.append(p.leq)
        assert violations == []


@pytest.mark.parametrize("name, count", [("flat_bool", 3), ("diamond", 4)])
def test_8_determinism(name, count, tmp_path):
    with criterion(f"8-{name}", f"check on {name} is byte-identical and matches golden"):
        outs = []
        for k in range(2):
            path = tmp_path / f"{k}.json"
            r = subprocess.run(
                [sys.executable, "-m", "finbasis", "check", str(SPECS / f"{name}.fb"),
                 "--report", str(path)], capture_output=True, text=True)
            assert r.returncode == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]
        assert outs[0] == (GOLDEN / f"{name}.json").read_bytes()
        import json
        assert json.loads(outs[0])["ideals"]["count"] == count
