"""Line-oriented text format for poset specs and covering families.

Poset spec::

    # comment
    basis Bool
    elements bot tt ff
    order bot <= tt
    order bot <= ff
    mode hasse          # or strict; hasse closes the relation
    subset bot tt ff    # optional basis restriction

Family spec (for the ``cover`` command)::

    set 1 2
    set 2 3
    target 1 3
"""

from __future__ import annotations

import re
from dataclasses import dataclass

TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")
_WORD = re.compile(r"\S+")


class SpecError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class SpecSyntaxError(SpecError):
    def __init__(self, line, col, expected, found=None):
        found_text = "end of line" if found is None else repr(found)
        super().__init__(f"expected {expected}, found {found_text}", line, col)
        self.expected = expected


class DuplicateElement(SpecError):
    def __init__(self, name, line, col):
        super().__init__(f"duplicate element {name!r}", line, col)
        self.name = name


class UnknownElement(SpecError):
    def __init__(self, name, line, col):
        super().__init__(f"unknown element {name!r}", line, col)
        self.name = name


@dataclass(frozen=True)
class SpecDocument:
    name: str
    elements: tuple
    order_pairs: tuple = ()
    closure_mode: str = "hasse"
    basis_subset: tuple | None = None

    @property
    def basis(self) -> tuple:
        return self.elements if self.basis_subset is None else self.basis_subset


@dataclass(frozen=True)
class FamilySpec:
    sets: tuple
    target: tuple = ()


@dataclass
class _Word:
    text: str
    line: int
    col: int


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        words = [_Word(m.group(), lineno, m.start() + 1) for m in _WORD.finditer(body)]
        if words:
            yield lineno, len(body.rstrip()) + 1, words


def _tokens(words, expected="element name"):
    for w in words:
        if not TOKEN.match(w.text):
            raise SpecSyntaxError(w.line, w.col, expected, w.text)
    return words


def _need_args(keyword: _Word, args, end_col, what):
    if not args:
        raise SpecSyntaxError(keyword.line, end_col, what)


def parse_spec(text: str) -> SpecDocument:
    """Parse a poset spec, raising on the first error with its line and column."""
    name = None
    elements: list[str] = []
    declared: dict[str, _Word] = {}
    pairs: list[tuple[_Word, _Word]] = []
    mode = "hasse"
    subset: list[_Word] | None = None

    for lineno, end_col, words in _lines(text):
        kw, args = words[0], words[1:]
        if kw.text == "basis":
            if name is not None:
                raise SpecSyntaxError(lineno, kw.col, "a single basis declaration", kw.text)
            if len(args) != 1:
                where = args[1] if len(args) > 1 else None
                raise SpecSyntaxError(lineno, where.col if where else end_col,
                                      "one basis name", where.text if where else None)
            name = _tokens(args, "basis name")[0].text
        elif kw.text == "elements":
            _need_args(kw, args, end_col, "element name")
            for w in _tokens(args):
                if w.text in declared:
                    raise DuplicateElement(w.text, w.line, w.col)
                declared[w.text] = w
                elements.append(w.text)
        elif kw.text == "order":
            if len(args) < 3:
                expected = ["element name", "'<='", "element name"][len(args)]
                raise SpecSyntaxError(lineno, end_col, expected)
            lo, op, hi = args[:3]
            _tokens([lo])
            if op.text != "<=":
                raise SpecSyntaxError(lineno, op.col, "'<='", op.text)
            _tokens([hi])
            if len(args) > 3:
                raise SpecSyntaxError(lineno, args[3].col, "end of line", args[3].text)
            pairs.append((lo, hi))
        elif kw.text == "mode":
            if len(args) != 1 or args[0].text not in ("strict", "hasse"):
                bad = args[0] if args else None
                if len(args) > 1:
                    bad = args[1]
                raise SpecSyntaxError(lineno, bad.col if bad else end_col,
                                      "'strict' or 'hasse'", bad.text if bad else None)
            mode = args[0].text
        elif kw.text == "subset":
            if subset is not None:
                raise SpecSyntaxError(lineno, kw.col, "a single subset declaration", kw.text)
            _need_args(kw, args, end_col, "element name")
            subset = _tokens(args)
        else:
            raise SpecSyntaxError(lineno, kw.col,
                                  "one of basis, elements, order, mode, subset", kw.text)

    if not elements:
        raise SpecSyntaxError(max(1, len(text.splitlines())), 1, "an elements declaration")
    for lo, hi in pairs:
        for w in (lo, hi):
            if w.text not in declared:
                raise UnknownElement(w.text, w.line, w.col)
    if subset is not None:
        seen = set()
        for w in subset:
            if w.text not in declared:
                raise UnknownElement(w.text, w.line, w.col)
            if w.text in seen:
                raise DuplicateElement(w.text, w.line, w.col)
            seen.add(w.text)

    return SpecDocument(
        name=name or "P",
        elements=tuple(elements),
        order_pairs=tuple((lo.text, hi.text) for lo, hi in pairs),
        closure_mode=mode,
        basis_subset=None if subset is None else tuple(w.text for w in subset),
    )


def render_spec(spec: SpecDocument) -> str:
    lines = [f"basis {spec.name}", "elements " + " ".join(spec.elements)]
    lines += [f"order {lo} <= {hi}" for lo, hi in spec.order_pairs]
    lines.append(f"mode {spec.closure_mode}")
    if spec.basis_subset is not None:
        lines.append("subset " + " ".join(spec.basis_subset))
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> FamilySpec:
    sets = []
    target = None
    for lineno, end_col, words in _lines(text):
        kw, args = words[0], words[1:]
        if kw.text == "set":
            _need_args(kw, args, end_col, "element name")
            sets.append(tuple(w.text for w in _tokens(args)))
        elif kw.text == "target":
            if target is not None:
                raise SpecSyntaxError(lineno, kw.col, "a single target declaration", kw.text)
            target = tuple(w.text for w in _tokens(args))
        else:
            raise SpecSyntaxError(lineno, kw.col, "one of set, target", kw.text)
    return FamilySpec(tuple(sets), target or ())
