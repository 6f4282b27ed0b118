"""The ``.fts`` space-description format.

A document is a few ``#`` comment lines, then three sections::

    [space]
    name = ex2_2
    points = a b c
    grid = 0 1

    [opens]
    0_X = 0 0 0
    B = 0 1 0
    1_X = 1 1 1

    [sets]
    F = 1 0 1

Each set row lists one rational literal per point, in point order. Only
``p/q`` and bare integers are accepted. Leading comment lines are kept as the
document description; other comments are dropped on serialization.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from ..lattice import Carrier, FuzzySet, Grid, format_rational, parse_rational
from ..topology import FuzzyTopology, TopologyError

_NAME = re.compile(r"^[A-Za-z0-9_*']+$")
_SECTION = re.compile(r"^\[(\w+)\]$")
SECTIONS = ("space", "opens", "sets")
SPACE_KEYS = ("name", "points", "grid")


class SpaceFileError(ValueError):
    code = "error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class SpaceSyntaxError(SpaceFileError):
    code = "syntax"


class SpaceValidationError(SpaceFileError):
    code = "validation"


@dataclass(eq=False)
class SpaceDocument:
    name: str
    points: tuple[str, ...]
    grid: tuple[Fraction, ...]
    opens: dict[str, tuple[Fraction, ...]]
    sets: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    description: str = ""

    def __eq__(self, other):
        if not isinstance(other, SpaceDocument):
            return NotImplemented
        key = lambda d: (d.name, d.points, d.grid, list(d.opens.items()),  # noqa: E731
                         list(d.sets.items()), d.description)
        return key(self) == key(other)

    @cached_property
    def carrier(self) -> Carrier:
        return Carrier(self.points)

    @cached_property
    def topology(self) -> FuzzyTopology:
        fam = tuple(FuzzySet(self.carrier, v) for v in self.opens.values())
        return FuzzyTopology(self.carrier, Grid(self.grid), fam, self.name)

    def set(self, name: str) -> FuzzySet:
        for table in (self.sets, self.opens):
            if name in table:
                return FuzzySet(self.carrier, table[name])
        raise KeyError(f"no set named {name!r} in space {self.name!r}")

    def named_sets(self) -> dict[str, FuzzySet]:
        """Non-constant opens and all query sets, in document order."""
        out = {n: FuzzySet(self.carrier, v) for n, v in self.opens.items()
               if n not in ("0_X", "1_X")}
        out.update((n, FuzzySet(self.carrier, v)) for n, v in self.sets.items())
        return out

    def name_of(self, a: FuzzySet) -> str | None:
        for n, s in self.named_sets().items():
            if s == a:
                return n
        return None


def _values(text: str, n: int, lineno: int) -> tuple[Fraction, ...]:
    parts = text.split()
    if len(parts) != n:
        raise SpaceSyntaxError(f"expected {n} values, found {len(parts)}", lineno)
    out = []
    for p in parts:
        try:
            out.append(parse_rational(p))
        except ValueError as e:
            raise SpaceSyntaxError(str(e), lineno) from None
    return tuple(out)


def parse_space(text: str) -> SpaceDocument:
    """Strict parse followed by topology validation."""
    description: list[str] = []
    section = None
    seen_sections: list[str] = []
    header: dict[str, tuple[str, int]] = {}
    rows: dict[str, list[tuple[str, str, int]]] = {"opens": [], "sets": []}
    section_line = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if section is None:
                description.append(line[1:].strip())
            continue
        m = _SECTION.match(line)
        if m:
            section = m.group(1)
            if section not in SECTIONS:
                raise SpaceSyntaxError(f"unknown section [{section}]", lineno)
            if section in seen_sections:
                raise SpaceSyntaxError(f"duplicate section [{section}]", lineno)
            if not seen_sections and section != "space":
                raise SpaceSyntaxError("the first section must be [space]", lineno)
            seen_sections.append(section)
            section_line[section] = lineno
            continue
        if section is None:
            raise SpaceSyntaxError("content before the [space] section", lineno)
        if "=" not in line:
            raise SpaceSyntaxError("expected 'key = value'", lineno)
        key, _, value = (s.strip() for s in line.partition("="))
        if section == "space":
            if key not in SPACE_KEYS:
                raise SpaceSyntaxError(f"unknown key {key!r} in [space]", lineno)
            if key in header:
                raise SpaceSyntaxError(f"duplicate key {key!r}", lineno)
            header[key] = (value, lineno)
        else:
            if not _NAME.match(key):
                raise SpaceSyntaxError(f"bad set name {key!r}", lineno)
            rows[section].append((key, value, lineno))

    for key in SPACE_KEYS:
        if key not in header:
            raise SpaceSyntaxError(f"[space] is missing {key!r}")
    if "opens" not in seen_sections:
        raise SpaceSyntaxError("missing [opens] section")

    name = header["name"][0]
    points = tuple(header["points"][0].split())
    if not points:
        raise SpaceSyntaxError("no points given", header["points"][1])
    if len(set(points)) != len(points):
        raise SpaceValidationError("duplicate point names", header["points"][1])
    grid_text, grid_line = header["grid"]
    grid = []
    for p in grid_text.split():
        try:
            q = parse_rational(p)
        except ValueError as e:
            raise SpaceSyntaxError(str(e), grid_line) from None
        if not 0 <= q <= 1:
            raise SpaceValidationError(f"grid value {p} outside [0,1]", grid_line)
        grid.append(q)
    normalized = Grid(tuple(grid))

    tables: dict[str, dict[str, tuple[Fraction, ...]]] = {"opens": {}, "sets": {}}
    names: set[str] = set()
    for sec in ("opens", "sets"):
        for key, value, lineno in rows[sec]:
            if key in names:
                raise SpaceValidationError(f"duplicate set name {key!r}", lineno)
            names.add(key)
            vals = _values(value, len(points), lineno)
            for v in vals:
                if not 0 <= v <= 1:
                    raise SpaceValidationError(
                        f"{key}: value {format_rational(v)} outside [0,1]", lineno)
                if v not in normalized:
                    raise SpaceValidationError(
                        f"{key}: value {format_rational(v)} is not on the grid", lineno)
            tables[sec][key] = vals

    doc = SpaceDocument(name, points, tuple(grid), tables["opens"], tables["sets"],
                        "\n".join(description))
    try:
        doc.topology
    except TopologyError as e:
        raise SpaceValidationError(str(e), section_line.get("opens")) from None
    return doc


def serialize_space(doc: SpaceDocument) -> str:
    out = []
    if doc.description:
        out += [f"# {line}".rstrip() for line in doc.description.splitlines()]
        out.append("")
    out += ["[space]", f"name = {doc.name}", f"points = {' '.join(doc.points)}",
            f"grid = {' '.join(format_rational(v) for v in doc.grid)}", "", "[opens]"]
    out += [f"{n} = {' '.join(format_rational(v) for v in vals)}" for n, vals in doc.opens.items()]
    if doc.sets:
        out += ["", "[sets]"]
        out += [f"{n} = {' '.join(format_rational(v) for v in vals)}"
                for n, vals in doc.sets.items()]
    return "\n".join(out) + "\n"


def document_from_topology(tau: FuzzyTopology, name: str | None = None,
                           sets: dict[str, FuzzySet] | None = None,
                           description: str = "") -> SpaceDocument:
    """Render a topology as a document, naming opens U1, U2, ... besides 0_X and 1_X."""
    opens: dict[str, tuple[Fraction, ...]] = {}
    k = 0
    for u in tau.opens:
        if u.is_zero():
            opens["0_X"] = u.values
        elif u.is_one():
            opens["1_X"] = u.values
        else:
            k += 1
            opens[f"U{k}"] = u.values
    return SpaceDocument(name or tau.name or "space", tau.carrier.points, tau.grid.values,
                         opens, {n: s.values for n, s in (sets or {}).items()}, description)


def load_space(path) -> SpaceDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_space(fh.read())
