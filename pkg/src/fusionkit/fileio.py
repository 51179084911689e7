"""Structured text formats, version `format: 1`, bit-exact round-trips.

Four kinds: fusion-ring, modular-datum, group, character-table.  Cyclotomic
entries use the cyc(n)[...] encoding with `;`-separated row entries; all other
fields are whitespace-separated tokens on `key: value` lines.
"""
from __future__ import annotations

from fractions import Fraction

from .catalog.chartable import CharacterTable
from .catalog.groups import FiniteGroup
from .errors import ParseError
from .exactnum import cyclotomic
from .fusionring import FusionRing
from .modular import ModularDatum

FORMAT_VERSION = 1


class _Lines:
    def __init__(self, text: str):
        self.lines = [ln.rstrip() for ln in text.splitlines()]
        self.pos = 0

    def peek(self):
        while self.pos < len(self.lines):
            ln = self.lines[self.pos].strip()
            if ln and not ln.startswith("#"):
                return ln
            self.pos += 1
        return None

    def next(self):
        ln = self.peek()
        if ln is None:
            raise ParseError("unexpected end of file")
        self.pos += 1
        return ln

    def expect_key(self, key: str) -> str:
        ln = self.next()
        if not ln.startswith(key + ":"):
            raise ParseError(f"expected '{key}:', got {ln!r} (line {self.pos})")
        return ln[len(key) + 1:].strip()


def _header(kind: str) -> list:
    return [f"format: {FORMAT_VERSION}", f"kind: {kind}"]


def _check_header(lines: _Lines, kind: str) -> None:
    ver = lines.expect_key("format")
    if ver != str(FORMAT_VERSION):
        raise ParseError(f"unsupported format version {ver!r}")
    got = lines.expect_key("kind")
    if got != kind:
        raise ParseError(f"expected kind {kind!r}, found {got!r}")


# -- fusion rings -----------------------------------------------------------------


def _ring_body(ring: FusionRing) -> list:
    out = [f"rank: {ring.rank}",
           "labels: " + " ".join(ring.labels),
           f"unit: {ring.unit}",
           "dual: " + " ".join(str(d) for d in ring.dual),
           "N:"]
    for (i, j, k) in sorted(ring.nconst):
        out.append(f"{i} {j} {k} {ring.nconst[(i, j, k)]}")
    out.append("end")
    return out


def _parse_ring_body(lines: _Lines) -> FusionRing:
    rank = int(lines.expect_key("rank"))
    labels = lines.expect_key("labels").split()
    unit = int(lines.expect_key("unit"))
    dual = [int(t) for t in lines.expect_key("dual").split()]
    if lines.next() != "N:":
        raise ParseError("expected 'N:' block")
    nconst = {}
    while True:
        ln = lines.next()
        if ln == "end":
            break
        toks = ln.split()
        if len(toks) != 4:
            raise ParseError(f"bad N entry {ln!r}")
        i, j, k, v = (int(t) for t in toks)
        nconst[(i, j, k)] = v
    try:
        return FusionRing(rank, labels, unit, dual, nconst)
    except Exception as exc:
        raise ParseError(f"fusion ring fields invalid: {exc}") from exc


def dump_ring(ring: FusionRing) -> str:
    return "\n".join(_header("fusion-ring") + _ring_body(ring)) + "\n"


def load_ring(text: str) -> FusionRing:
    lines = _Lines(text)
    _check_header(lines, "fusion-ring")
    return _parse_ring_body(lines)


# -- modular data -----------------------------------------------------------------


def dump_datum(md: ModularDatum) -> str:
    out = _header("modular-datum")
    out.append(f"conductor: {md.conductor}")
    out.append(f"braided-only: {'true' if md.braided_only else 'false'}")
    out.append("ring:")
    out.extend(_ring_body(md.ring))
    out.append("S:")
    for row in md.S:
        out.append(" ; ".join(cyclotomic.encode(v) for v in row))
    out.append("end")
    if md.T is not None:
        out.append("T: " + " ; ".join(cyclotomic.encode(v) for v in md.T))
    return "\n".join(out) + "\n"


def load_datum(text: str) -> ModularDatum:
    lines = _Lines(text)
    _check_header(lines, "modular-datum")
    conductor = int(lines.expect_key("conductor"))
    braided = lines.expect_key("braided-only")
    if braided not in ("true", "false"):
        raise ParseError(f"braided-only must be true/false, got {braided!r}")
    if lines.next() != "ring:":
        raise ParseError("expected 'ring:' block")
    ring = _parse_ring_body(lines)
    if lines.next() != "S:":
        raise ParseError("expected 'S:' block")
    S = []
    while True:
        ln = lines.next()
        if ln == "end":
            break
        row = [cyclotomic.parse(tok.strip()) for tok in ln.split(";")]
        if len(row) != ring.rank:
            raise ParseError(f"S row has {len(row)} entries, expected {ring.rank}")
        S.append(row)
    if len(S) != ring.rank:
        raise ParseError(f"S has {len(S)} rows, expected {ring.rank}")
    T = None
    if lines.peek() is not None and lines.peek().startswith("T:"):
        T = [cyclotomic.parse(tok.strip()) for tok in lines.expect_key("T").split(";")]
        if len(T) != ring.rank:
            raise ParseError(f"T has {len(T)} entries, expected {ring.rank}")
    try:
        return ModularDatum(ring, conductor, S, T, braided_only=(braided == "true"))
    except Exception as exc:
        raise ParseError(f"modular datum fields invalid: {exc}") from exc


# -- groups -----------------------------------------------------------------------


def dump_group(g: FiniteGroup) -> str:
    out = _header("group")
    out.append(f"order: {g.order}")
    out.append("mult:")
    for row in g.mult:
        out.append(" ".join(str(int(v)) for v in row))
    out.append("end")
    return "\n".join(out) + "\n"


def load_group(text: str) -> FiniteGroup:
    lines = _Lines(text)
    _check_header(lines, "group")
    order = int(lines.expect_key("order"))
    if lines.next() != "mult:":
        raise ParseError("expected 'mult:' block")
    rows = []
    while True:
        ln = lines.next()
        if ln == "end":
            break
        rows.append([int(t) for t in ln.split()])
    if len(rows) != order or any(len(r) != order for r in rows):
        raise ParseError("multiplication table shape mismatch")
    try:
        return FiniteGroup(rows)
    except Exception as exc:
        raise ParseError(f"group table invalid: {exc}") from exc


# -- character tables ----------------------------------------------------------------


def dump_character_table(ct: CharacterTable) -> str:
    out = _header("character-table")
    out.append(f"order: {ct.order}")
    out.append("classes: " + " ".join(str(s) for s in ct.class_sizes))
    if ct.class_reps:
        out.append("reps: " + " ".join(str(r) for r in ct.class_reps))
    out.append(f"conductor: {ct.conductor}")
    out.append("rows:")
    for row in ct.values:
        out.append(" ; ".join(cyclotomic.encode(v) for v in row))
    out.append("end")
    return "\n".join(out) + "\n"


def load_character_table(text: str, group: FiniteGroup | None = None) -> CharacterTable:
    lines = _Lines(text)
    _check_header(lines, "character-table")
    order = int(lines.expect_key("order"))
    sizes = tuple(int(t) for t in lines.expect_key("classes").split())
    reps: tuple = ()
    if lines.peek() is not None and lines.peek().startswith("reps:"):
        reps = tuple(int(t) for t in lines.expect_key("reps").split())
    conductor = int(lines.expect_key("conductor"))
    if lines.next() != "rows:":
        raise ParseError("expected 'rows:' block")
    values = []
    while True:
        ln = lines.next()
        if ln == "end":
            break
        row = tuple(cyclotomic.parse(tok.strip()).lift(conductor) for tok in ln.split(";"))
        if len(row) != len(sizes):
            raise ParseError(f"row has {len(row)} entries, expected {len(sizes)}")
        values.append(row)
    try:
        ct = CharacterTable(group, conductor, reps, sizes, tuple(values), order=order)
        ct.validate()
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"character table invalid: {exc}") from exc
    return ct
