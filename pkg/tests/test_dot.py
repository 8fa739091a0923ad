import pytest

from finbasis.dot import IoFailure, export_hasse, hasse_dot
from finbasis.ideal import build_completion
from finbasis.order import validate_poset


def edges(text):
    return [line.strip() for line in text.splitlines() if "->" in line]


def test_one_point(single):
    assert hasse_dot(single, "One") == "digraph One {\n  x;\n}\n"


def test_flat_booleans(flat):
    text = hasse_dot(flat, "Bool")
    assert edges(text) == ["bot -> ff;", "bot -> tt;"]
    assert text.splitlines()[1:4] == ["  bot;", "  ff;", "  tt;"]


def test_diamond_completion(diamond):
    text = hasse_dot(build_completion(diamond, diamond.carrier), "D")
    assert len(edges(text)) == 4
    assert '[label="{bot}"]' in text


def test_numeric_prefixed_names_are_quoted():
    p = validate_poset({"1a", "2"}, {("1a", "2")}, closure=True)
    assert edges(hasse_dot(p)) == ['"1a" -> 2;']


def test_export_writes_and_reports_failure(tmp_path, flat):
    out = tmp_path / "g.dot"
    text = export_hasse(flat, out, "Bool")
    assert out.read_text() == text
    with pytest.raises(IoFailure):
        export_hasse(flat, tmp_path / "missing" / "g.dot")
