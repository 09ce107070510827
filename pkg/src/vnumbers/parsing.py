"""Reading ideal descriptions.

Two encodings are accepted. The text form::

    # the worked example
    vars: x, y
    gens: x^5, x^4*y^3, x^2*y^4

where ``gens`` may also list exponent vectors (``[5, 0], [4, 3]``) and may
continue over several lines; ``vars`` must fit on one. The machine form is a JSON object with a
``vars`` array and a ``gens`` array of monomial strings or exponent vectors.
Whitespace is insignificant in both.
"""

from __future__ import annotations

import json
import re
import warnings
from typing import List, Optional, Sequence, Tuple

from .errors import InputError
from .ideal import EXP_MAX, MonomialIdeal, RingContext, format_monomial, minimize_generators


class NonMinimalInputWarning(UserWarning):
    """The input listed redundant generators; they were dropped."""


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*,\[\]()-]))"
)


def _position(text: str, offset: int) -> Tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


class _Scanner:
    def __init__(self, source: str, text: str, base: int):
        # ``text`` is a slice of ``source`` starting at offset ``base``
        self.source = source
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if not match:
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                self.fail(f"unexpected character {text[bad]!r}", base + bad)
            kind = match.lastgroup
            self.tokens.append((kind, match.group(kind), base + match.start(kind)))
            pos = match.end()
        self.end = base + len(text)
        self.i = 0

    def fail(self, message: str, offset: int):
        line, column = _position(self.source, offset)
        raise InputError(message, line, column)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None:
            self.fail("unexpected end of input", tok[2])
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            self.fail(f"expected {want!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def exponent(self) -> int:
        kind, value, offset = self.peek()
        if kind == "op" and value == "-":
            self.fail("negative exponent", offset)
        _, value, offset = self.take("int")
        e = int(value)
        if e > EXP_MAX:
            self.fail(f"exponent {e} is too large", offset)
        return e


def _monomial(sc: _Scanner, ctx: RingContext) -> List[int]:
    exps = [0] * ctx.n
    kind, value, offset = sc.peek()
    if kind == "int":
        sc.take()
        if value != "1":
            sc.fail(f"coefficients are not allowed (found {value})", offset)
        return exps
    while True:
        _, name, offset = sc.take("name")
        if name not in ctx.var_names:
            sc.fail(f"unknown variable {name!r}", offset)
        e = 1
        if sc.peek()[1] == "^":
            sc.take()
            e = sc.exponent()
        exps[ctx.var_names.index(name)] += e
        if sc.peek()[1] != "*":
            return exps
        sc.take()


def _vector(sc: _Scanner, ctx: RingContext) -> List[int]:
    _, opener, offset = sc.take("op")
    closer = "]" if opener == "[" else ")"
    exps = [sc.exponent()]
    while sc.peek()[1] == ",":
        sc.take()
        exps.append(sc.exponent())
    sc.take("op", closer)
    if len(exps) != ctx.n:
        sc.fail(f"exponent vector has {len(exps)} entries, expected {ctx.n}", offset)
    return exps


def _gens_list(sc: _Scanner, ctx: RingContext) -> List[List[int]]:
    gens = []
    if sc.peek()[0] is None:
        return gens
    while True:
        if sc.peek()[1] in ("[", "("):
            gens.append(_vector(sc, ctx))
        else:
            gens.append(_monomial(sc, ctx))
        kind, value, offset = sc.peek()
        if kind is None:
            return gens
        if value != ",":
            sc.fail(f"expected ',' between generators, found {value!r}", offset)
        sc.take()


def _names(source: str, text: str, base: int) -> Tuple[str, ...]:
    names = []
    offset = base
    for part in text.split(","):
        stripped = part.strip()
        if not stripped:
            line, column = _position(source, offset)
            raise InputError("empty variable name", line, column)
        names.append(stripped)
        offset += len(part) + 1
    return tuple(names)


def _build(ctx: RingContext, gens: Sequence[Sequence[int]]) -> MonomialIdeal:
    ideal = minimize_generators(ctx, gens)
    distinct = {tuple(g) for g in gens}
    if len(distinct) != len(gens) or len(ideal.gens) != len(distinct):
        warnings.warn(
            f"input generators were not minimal; using {ideal}",
            NonMinimalInputWarning,
            stacklevel=3,
        )
    return ideal


def parse_gens(text: str, ctx: RingContext) -> MonomialIdeal:
    """Parse a generator list such as ``"x^5, x^4*y^3, x^2*y^4"``."""
    return _build(ctx, _gens_list(_Scanner(text, text, 0), ctx))


def _parse_machine(text: str) -> MonomialIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "vars" not in doc or "gens" not in doc:
        raise InputError("machine format needs an object with 'vars' and 'gens'")
    names = doc["vars"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise InputError("'vars' must be a list of strings")
    ctx = RingContext(tuple(names))
    raw = doc["gens"]
    if isinstance(raw, str):
        return parse_gens(raw, ctx)
    if not isinstance(raw, list):
        raise InputError("'gens' must be a list or a string")
    gens = []
    for item in raw:
        if isinstance(item, str):
            gens.extend(_gens_list(_Scanner(item, item, 0), ctx))
        elif isinstance(item, list):
            gens.append(item)
        else:
            raise InputError(f"cannot read generator {item!r}")
    return _build(ctx, gens)


def parse_ideal(text: str, var_names: Optional[Sequence[str]] = None) -> MonomialIdeal:
    """Parse either input format. ``var_names`` supplies the ring when the
    text form omits its ``vars:`` line."""
    if text.lstrip().startswith("{"):
        return _parse_machine(text)
    fields = {}
    current = None
    offset = 0
    for raw_line in text.splitlines(keepends=True):
        line = raw_line.split("#", 1)[0]
        match = re.match(r"\s*(vars|gens)\s*:", line)
        if match:
            current = match.group(1)
            if current in fields:
                lineno, _ = _position(text, offset)
                raise InputError(f"duplicate '{current}:' entry", lineno, 1)
            fields[current] = [(line[match.end():], offset + match.end())]
        elif line.strip():
            if current != "gens":
                lineno, column = _position(text, offset + len(line) - len(line.lstrip()))
                raise InputError("expected 'vars:' or 'gens:'", lineno, column)
            fields[current].append((line, offset))
        offset += len(raw_line)
    if "vars" in fields:
        chunk, base = fields["vars"][0]
        ctx = RingContext(_names(text, chunk, base))
    elif var_names is not None:
        ctx = RingContext(tuple(var_names))
    else:
        raise InputError("missing 'vars:' line")
    if "gens" not in fields:
        raise InputError("missing 'gens:' line")
    gens = []
    for chunk, base in _join_gens(fields["gens"]):
        gens.extend(_gens_list(_Scanner(text, chunk, base), ctx))
    return _build(ctx, gens)


def _join_gens(chunks):
    """Yield generator-list fragments; a line ending without a trailing comma
    continues onto the next line as if a comma were there."""
    out = []
    for chunk, base in chunks:
        body = chunk.rstrip()
        if not body.strip():
            continue
        if body.endswith(","):
            body = body[:-1]
        out.append((body, base))
    return out


def format_ideal_file(ideal: MonomialIdeal) -> str:
    gens = ", ".join(format_monomial(g, ideal.ctx) for g in ideal.gens)
    return f"vars: {', '.join(ideal.ctx.var_names)}\ngens: {gens}\n"
