"""Semi/pre/alpha/semi-pre predicates and the derived closure operators.

All "over every fuzzy set" quantifiers range over the topology's grid-valued
sets. Everything expensive is memoized per topology in a :class:`Tables`
instance, built on first use and read-only afterwards.
"""
from __future__ import annotations

from enum import Enum

from .lattice import (CapExceeded, FuzzySet, complement, count_grid_sets,
                      default_cap, enumerate_grid_sets, join_all, leq, meet_all)
from .topology import FuzzyTopology, _same_carrier, closure, interior


class Kind(str, Enum):
    S = "s"
    P = "p"
    ALPHA = "alpha"
    SP = "sp"


KINDS = tuple(Kind)


class OffGridError(ValueError):
    """The set has membership values outside the topology's grid."""


class Tables:
    """Memoized grid enumeration and operator values for one topology."""

    def __init__(self, tau: FuzzyTopology, cap: int):
        self.tau = tau
        self.sets = tuple(enumerate_grid_sets(tau.carrier, tau.grid, cap))
        self.index = {s: i for i, s in enumerate(self.sets)}
        self._int = {s: interior(tau, s) for s in self.sets}
        self._cl = {s: closure(tau, s) for s in self.sets}
        self._closed: dict[Kind, tuple[FuzzySet, ...]] = {}
        self._closed_set: dict[Kind, frozenset[FuzzySet]] = {}
        self.memo: dict = {}

    def int(self, a: FuzzySet) -> FuzzySet:
        return self._int[a]

    def cl(self, a: FuzzySet) -> FuzzySet:
        return self._cl[a]

    def satisfies(self, a: FuzzySet, kind: Kind) -> bool:
        i, c = self.int, self.cl
        if kind is Kind.S:
            lhs = i(c(a))
        elif kind is Kind.P:
            lhs = c(i(a))
        elif kind is Kind.ALPHA:
            lhs = c(i(c(a)))
        else:
            lhs = i(c(i(a)))
        return leq(lhs, a)

    def closed_family(self, kind: Kind) -> tuple[FuzzySet, ...]:
        if kind not in self._closed:
            fam = tuple(s for s in self.sets if self.satisfies(s, kind))
            self._closed[kind] = fam
            self._closed_set[kind] = frozenset(fam)
        return self._closed[kind]

    def is_closed(self, a: FuzzySet, kind: Kind) -> bool:
        self.closed_family(kind)
        return a in self._closed_set[kind]

    def open_family(self, kind: Kind) -> tuple[FuzzySet, ...]:
        key = ("open", kind)
        if key not in self.memo:
            self.memo[key] = tuple(s for s in self.sets if self.is_closed(complement(s), kind))
        return self.memo[key]

    def upper_meet(self, key, family, a: FuzzySet) -> FuzzySet:
        """Meet of the members of ``family`` lying above ``a`` (memoized under ``key``)."""
        k = (key, a)
        if k not in self.memo:
            self.memo[k] = meet_all((b for b in family if leq(a, b)), self.tau.carrier)
        return self.memo[k]

    def lower_join(self, key, family, a: FuzzySet) -> FuzzySet:
        k = (key, a)
        if k not in self.memo:
            self.memo[k] = join_all((b for b in family if leq(b, a)), self.tau.carrier)
        return self.memo[k]


def tables(tau: FuzzyTopology, cap: int | None = None) -> Tables:
    cap = default_cap() if cap is None else cap
    n = count_grid_sets(tau.carrier, tau.grid)
    if n > cap:
        raise CapExceeded("grid sets", n, cap)
    t = tau._cache.get("tables")
    if t is None:
        t = tau._cache["tables"] = Tables(tau, cap)
    return t


def _grid_checked(tau: FuzzyTopology, a: FuzzySet, cap: int | None) -> Tables:
    _same_carrier(tau, a)
    if not a.on_grid(tau.grid):
        raise OffGridError(f"{a!r} is not valued in the grid {tau.grid.values}")
    return tables(tau, cap)


def is_x_closed(tau: FuzzyTopology, a: FuzzySet, kind) -> bool:
    """Defining inequality of the kind: s int(cl A) <= A, p cl(int A) <= A,
    alpha cl(int(cl A)) <= A, sp int(cl(int A)) <= A."""
    kind = Kind(kind)
    _same_carrier(tau, a)
    if a.on_grid(tau.grid) and count_grid_sets(tau.carrier, tau.grid) <= default_cap():
        return tables(tau).is_closed(a, kind)
    i = lambda s: interior(tau, s)  # noqa: E731
    c = lambda s: closure(tau, s)  # noqa: E731
    lhs = {Kind.S: lambda: i(c(a)), Kind.P: lambda: c(i(a)),
           Kind.ALPHA: lambda: c(i(c(a))), Kind.SP: lambda: i(c(i(a)))}[kind]()
    return leq(lhs, a)


def is_x_open(tau: FuzzyTopology, a: FuzzySet, kind) -> bool:
    return is_x_closed(tau, complement(a), kind)


def xcl(tau: FuzzyTopology, a: FuzzySet, kind, cap: int | None = None) -> FuzzySet:
    """Meet of all grid-valued kind-closed supersets of ``a``."""
    kind = Kind(kind)
    t = _grid_checked(tau, a, cap)
    return t.upper_meet(("xcl", kind), t.closed_family(kind), a)


def scl(tau, a, cap=None):
    return xcl(tau, a, Kind.S, cap)


def pcl(tau, a, cap=None):
    return xcl(tau, a, Kind.P, cap)


def alphacl(tau, a, cap=None):
    return xcl(tau, a, Kind.ALPHA, cap)


def spcl(tau, a, cap=None):
    return xcl(tau, a, Kind.SP, cap)


def semi_kernel(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> FuzzySet:
    """Meet of all grid-valued semi-open supersets of ``a`` (1_X is always one)."""
    t = _grid_checked(tau, a, cap)
    return t.upper_meet(("kernel", Kind.S), t.open_family(Kind.S), a)


def weakly_closed_family(tau: FuzzyTopology, cap: int | None = None) -> tuple[FuzzySet, ...]:
    from .classifier import is_weakly_closed

    t = tables(tau, cap)
    if "weakly_closed" not in t.memo:
        t.memo["weakly_closed"] = tuple(s for s in t.sets if is_weakly_closed(tau, s, cap))
    return t.memo["weakly_closed"]


def weakly_open_family(tau: FuzzyTopology, cap: int | None = None) -> tuple[FuzzySet, ...]:
    t = tables(tau, cap)
    if "weakly_open" not in t.memo:
        closed = frozenset(weakly_closed_family(tau, cap))
        t.memo["weakly_open"] = tuple(s for s in t.sets if complement(s) in closed)
    return t.memo["weakly_open"]


def wcl(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> FuzzySet:
    """Meet of the weakly-closed grid sets above ``a``."""
    t = _grid_checked(tau, a, cap)
    return t.upper_meet("wcl", weakly_closed_family(tau, cap), a)


def wint(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> FuzzySet:
    """Join of the weakly-open grid sets below ``a``."""
    t = _grid_checked(tau, a, cap)
    return t.lower_join("wint", weakly_open_family(tau, cap), a)
