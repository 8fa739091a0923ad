"""Hasse diagrams in Graphviz DOT format."""

from __future__ import annotations

import re
from pathlib import Path

from .ideal import Completion
from .order import Poset, covering_pairs

_BARE_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z|-?(\.[0-9]+|[0-9]+(\.[0-9]*)?)\Z")


class IoFailure(OSError):
    def __init__(self, path, cause):
        super().__init__(f"cannot write {path}: {cause}")
        self.path = path


def _quote(text: str) -> str:
    if _BARE_ID.match(text):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(obj: Poset | Completion, name: str = "P") -> str:
    """DOT text for the covering relation of a poset or an ideal completion.

    Edges run from the lower element to the upper one. Completion nodes are
    numbered ``I0, I1, ...`` in canonical ideal order and labelled with
    their members in braces.
    """
    lines = [f"digraph {_quote(name)} {{"]
    if isinstance(obj, Completion):
        p = obj.poset
        ids = {ideal: f"I{k}" for k, ideal in enumerate(p.carrier)}
        for ideal in p.carrier:
            lines.append(f'  {ids[ideal]} [label="{ideal}"];')
    else:
        p = obj
        ids = {x: _quote(str(x)) for x in p.carrier}
        for x in p.carrier:
            lines.append(f"  {ids[x]};")
    for lo, hi in covering_pairs(p):
        lines.append(f"  {ids[lo]} -> {ids[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_hasse(obj: Poset | Completion, sink, name: str = "P") -> str:
    text = hasse_dot(obj, name)
    try:
        Path(sink).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoFailure(sink, exc) from exc
    return text
