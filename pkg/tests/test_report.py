from finbasis.dsl import parse_spec
from finbasis.report import CheckOptions, battery, run_checks
from finbasis.generate import all_posets

from conftest import SPECS


def test_flat_boolean_battery_passes():
    report = run_checks(parse_spec((SPECS / "flat_bool.fb").read_text()))
    assert report.ok and report.ideals["count"] == 3
    assert report.oracles["union_of_directed_ideals"]["status"] == "pass"


def test_invalid_poset_is_reported_not_raised():
    report = run_checks(parse_spec("elements a b\norder a <= b\norder b <= a\n"))
    assert not report.ok
    assert report.poset["error"] == "NotAntisymmetric"
    assert report.witnesses["poset_axioms"] == ["a", "b"]


def test_large_basis_samples_and_skips_union():
    names = [f"n{i:02d}" for i in range(14)]
    text = "elements " + " ".join(names) + "\n"
    text += "".join(f"order {names[i]} <= {names[i + 1]}\n" for i in range(13))
    report = run_checks(parse_spec(text), CheckOptions(seed=3))
    assert report.ok
    assert report.oracles["union_of_directed_ideals"]["status"] == "skipped"
    assert report.oracles["lubs_unique"]["detail"] == "4096 subsets"


def test_exhaustive_and_random_suites():
    spec = parse_spec((SPECS / "singleton.fb").read_text())
    report = run_checks(spec, CheckOptions(exhaustive_size=3, random_count=5, seed=1))
    assert report.oracles["exhaustive_suite"]["status"] == "pass"
    assert report.oracles["random_suite"]["status"] == "pass"


def test_battery_clean_on_three_point_posets():
    for p in all_posets(3):
        assert battery(p) == []


def test_same_input_same_bytes():
    spec = parse_spec((SPECS / "diamond.fb").read_text())
    assert run_checks(spec).to_json() == run_checks(spec).to_json()
