"""Exact-rational fuzzy sets over a finite carrier and their lattice algebra.

Every membership value is a :class:`fractions.Fraction`; nothing in the
package ever touches a float.
"""
from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_CAP = 2**20

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class IncompatibleSets(ValueError):
    """Raised when two fuzzy sets live on different carriers."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured bound."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} candidates exceeds cap {cap}")
        self.size = size
        self.cap = cap


def default_cap() -> int:
    """Enumeration cap, overridable with the FUZZYTOP_CAP environment variable."""
    raw = os.environ.get("FUZZYTOP_CAP")
    return int(raw) if raw else DEFAULT_CAP


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer. Decimal notation is rejected."""
    m = _RATIONAL.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _unit(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("floats are not accepted; use Fraction or 'p/q' strings")
    q = parse_rational(v) if isinstance(v, str) else Fraction(v)
    if not ZERO <= q <= ONE:
        raise ValueError(f"membership value {q} outside [0,1]")
    return q


@dataclass(frozen=True)
class Carrier:
    points: tuple[str, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise ValueError("carrier must be nonempty")
        if len(set(pts)) != len(pts):
            raise ValueError(f"duplicate point names in {pts}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[str]:
        return iter(self.points)

    def index(self, point: str) -> int:
        return self.points.index(point)


@dataclass(frozen=True)
class Grid:
    """Finite value grid; normalized to contain 0, 1 and be closed under ``1 - v``."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = {_unit(v) for v in self.values} | {ZERO, ONE}
        vals |= {ONE - v for v in vals}
        object.__setattr__(self, "values", tuple(sorted(vals)))

    @classmethod
    def crisp(cls) -> Grid:
        return cls((ZERO, ONE))

    @classmethod
    def uniform(cls, n: int) -> Grid:
        """The grid {0, 1/n, ..., 1}."""
        return cls(tuple(Fraction(k, n) for k in range(n + 1)))

    def __contains__(self, v) -> bool:
        return v in self.values

    def __len__(self) -> int:
        return len(self.values)

    def refines(self, other: Grid) -> bool:
        return set(other.values) <= set(self.values)


@dataclass(frozen=True)
class FuzzySet:
    """Membership map from a carrier to [0,1], stored in carrier point order."""

    carrier: Carrier
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(_unit(v) for v in self.values)
        if len(vals) != len(self.carrier):
            raise ValueError(
                f"expected {len(self.carrier)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, carrier: Carrier, value) -> FuzzySet:
        return cls(carrier, (value,) * len(carrier))

    @classmethod
    def zero(cls, carrier: Carrier) -> FuzzySet:
        return cls.constant(carrier, ZERO)

    @classmethod
    def one(cls, carrier: Carrier) -> FuzzySet:
        return cls.constant(carrier, ONE)

    @classmethod
    def crisp(cls, carrier: Carrier, points: Iterable[str]) -> FuzzySet:
        """Characteristic function of a subset of the carrier."""
        pts = set(points)
        unknown = pts - set(carrier.points)
        if unknown:
            raise ValueError(f"points {sorted(unknown)} not in carrier")
        return cls(carrier, tuple(ONE if p in pts else ZERO for p in carrier))

    @classmethod
    def from_mapping(cls, carrier: Carrier, mapping: Mapping[str, object],
                     default=ZERO) -> FuzzySet:
        unknown = set(mapping) - set(carrier.points)
        if unknown:
            raise ValueError(f"points {sorted(unknown)} not in carrier")
        return cls(carrier, tuple(mapping.get(p, default) for p in carrier))

    def __getitem__(self, point: str) -> Fraction:
        return self.values[self.carrier.index(point)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.carrier.points, self.values))

    def is_zero(self) -> bool:
        return all(v == ZERO for v in self.values)

    def is_one(self) -> bool:
        return all(v == ONE for v in self.values)

    def is_crisp(self) -> bool:
        return all(v in (ZERO, ONE) for v in self.values)

    def on_grid(self, grid: Grid) -> bool:
        return all(v in grid for v in self.values)

    def __and__(self, other: FuzzySet) -> FuzzySet:
        return meet(self, other)

    def __or__(self, other: FuzzySet) -> FuzzySet:
        return join(self, other)

    def __invert__(self) -> FuzzySet:
        return complement(self)

    def __le__(self, other: FuzzySet) -> bool:
        return leq(self, other)

    def __ge__(self, other: FuzzySet) -> bool:
        return leq(other, self)

    def label(self) -> str:
        """Short human-readable form: ``{a,c}`` for crisp sets, else ``{a:1/2,b:1}``."""
        if self.is_crisp():
            return "{" + ",".join(p for p, v in zip(self.carrier, self.values) if v) + "}"
        return "{" + ",".join(f"{p}:{format_rational(v)}"
                              for p, v in zip(self.carrier, self.values)) + "}"

    def __repr__(self) -> str:
        body = ", ".join(f"{p}={format_rational(v)}"
                         for p, v in zip(self.carrier, self.values))
        return f"FuzzySet({body})"


def _raw(carrier: Carrier, vals: tuple) -> FuzzySet:
    # values already validated; skips __post_init__
    s = object.__new__(FuzzySet)
    object.__setattr__(s, "carrier", carrier)
    object.__setattr__(s, "values", vals)
    return s


def _check(a: FuzzySet, b: FuzzySet) -> None:
    if a.carrier is not b.carrier and a.carrier != b.carrier:
        raise IncompatibleSets(
            f"carriers differ: {a.carrier.points} vs {b.carrier.points}")


def meet(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _check(a, b)
    return _raw(a.carrier, tuple(map(min, a.values, b.values)))


def join(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    _check(a, b)
    return _raw(a.carrier, tuple(map(max, a.values, b.values)))


def complement(a: FuzzySet) -> FuzzySet:
    return _raw(a.carrier, tuple(ONE - v for v in a.values))


def leq(a: FuzzySet, b: FuzzySet) -> bool:
    _check(a, b)
    return all(x <= y for x, y in zip(a.values, b.values))


def quasi_coincident(a: FuzzySet, b: FuzzySet) -> bool:
    """A q B: some point where A(x) + B(x) > 1."""
    _check(a, b)
    return any(x + y > ONE for x, y in zip(a.values, b.values))


def support(a: FuzzySet) -> frozenset[str]:
    return frozenset(p for p, v in zip(a.carrier, a.values) if v > ZERO)


def meet_all(sets: Iterable[FuzzySet], carrier: Carrier) -> FuzzySet:
    """Meet of a finite family; the empty meet is 1_X."""
    out = FuzzySet.one(carrier)
    for s in sets:
        out = meet(out, s)
    return out


def join_all(sets: Iterable[FuzzySet], carrier: Carrier) -> FuzzySet:
    """Join of a finite family; the empty join is 0_X."""
    out = FuzzySet.zero(carrier)
    for s in sets:
        out = join(out, s)
    return out


def count_grid_sets(carrier: Carrier, grid: Grid) -> int:
    return len(grid) ** len(carrier)


def enumerate_grid_sets(carrier: Carrier, grid: Grid,
                        cap: int | None = None) -> Iterator[FuzzySet]:
    """All grid-valued sets, first carrier point most significant.

    The cap is checked before anything is yielded.
    """
    cap = default_cap() if cap is None else cap
    n = count_grid_sets(carrier, grid)
    if n > cap:
        raise CapExceeded("grid sets", n, cap)
    return (_raw(carrier, vals)
            for vals in itertools.product(grid.values, repeat=len(carrier)))


def crisp_sets(carrier: Carrier) -> list[FuzzySet]:
    return list(enumerate_grid_sets(carrier, Grid.crisp()))


def fuzzy_set(carrier: Carrier | Sequence[str], values: Sequence) -> FuzzySet:
    """Convenience constructor accepting point names and string literals."""
    if not isinstance(carrier, Carrier):
        carrier = Carrier(tuple(carrier))
    return FuzzySet(carrier, tuple(values))
