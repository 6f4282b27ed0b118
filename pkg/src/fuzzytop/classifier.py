"""Membership of a fuzzy set in every generalized closed-set class.

Each generalized class is a pair (closure operator, guard family): A belongs
to it when the operator value of A lies below every guard-family superset U
of A. Since the guard families all contain 1_X, that is the same as the
operator value lying below the meet of those supersets (the guard kernel),
which turns each universal quantifier into one comparison.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .lattice import FuzzySet, complement, format_rational, leq
from .operators import (Kind, Tables, _grid_checked, semi_kernel, tables)
from .topology import FuzzyTopology

# name -> (closure operator, guard family); "cl" is the topological closure,
# "tau" the open sets themselves, a Kind the kind-open sets, "gs" the gs-open sets
KERNEL_CLASSES: dict[str, tuple[str | Kind, str | Kind]] = {
    "g": ("cl", "tau"),
    "weakly": ("cl", Kind.S),
    "sg": (Kind.S, Kind.S),
    "alphag": (Kind.ALPHA, "tau"),
    "galpha": (Kind.ALPHA, Kind.ALPHA),
    "spg": (Kind.SP, Kind.SP),
    "pg": (Kind.P, Kind.P),
    "gs": (Kind.S, "tau"),
    "gp": (Kind.P, "tau"),
    "gsp": (Kind.SP, "tau"),
    "gstars": (Kind.S, "gs"),
}

# base class names in report order; each yields <name>_closed / <name>_open,
# except the plain topological pair which is reported as closed / open
CLASS_NAMES = ("fuzzy", "s", "p", "alpha", "sp", "g", "sg", "alphag", "galpha",
               "spg", "pg", "gs", "gp", "gsp", "gstars", "weakly")


def report_keys() -> list[str]:
    keys = []
    for c in CLASS_NAMES:
        keys += ["closed", "open"] if c == "fuzzy" else [f"{c}_closed", f"{c}_open"]
    return keys


def _operator(t: Tables, op, a: FuzzySet) -> FuzzySet:
    if op == "cl":
        return t.cl(a)
    return t.upper_meet(("xcl", op), t.closed_family(op), a)


def _guard_family(tau: FuzzyTopology, t: Tables, guard) -> tuple[FuzzySet, ...]:
    if guard == "tau":
        return tau.opens
    if guard == "gs":
        key = "gs_open"
        if key not in t.memo:
            t.memo[key] = tuple(s for s in t.sets
                                if _kernel_verdict(tau, t, complement(s), "gs"))
        return t.memo[key]
    return t.open_family(guard)


def guard_kernel(tau: FuzzyTopology, a: FuzzySet, guard, cap: int | None = None) -> FuzzySet:
    """Meet of the guard-family sets lying above ``a``."""
    t = _grid_checked(tau, a, cap)
    return t.upper_meet(("kernel", guard), _guard_family(tau, t, guard), a)


def _kernel_verdict(tau: FuzzyTopology, t: Tables, a: FuzzySet, name: str) -> bool:
    key = ("class", name, a)
    if key not in t.memo:
        op, guard = KERNEL_CLASSES[name]
        kernel = t.upper_meet(("kernel", guard), _guard_family(tau, t, guard), a)
        t.memo[key] = leq(_operator(t, op, a), kernel)
    return t.memo[key]


def is_kernel_class_closed(tau: FuzzyTopology, a: FuzzySet, name: str,
                           cap: int | None = None) -> bool:
    if name not in KERNEL_CLASSES:
        raise KeyError(f"unknown generalized class {name!r}; "
                       f"expected one of {sorted(KERNEL_CLASSES)}")
    t = _grid_checked(tau, a, cap)
    return _kernel_verdict(tau, t, a, name)


def is_weakly_closed(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> bool:
    """cl(A) <= U for every semi-open U >= A, decided as cl(A) <= semi_kernel(A)."""
    t = _grid_checked(tau, a, cap)
    key = ("class", "weakly", a)
    if key not in t.memo:
        t.memo[key] = leq(t.cl(a), semi_kernel(tau, a, cap))
    return t.memo[key]


def is_weakly_closed_direct(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> bool:
    """The same predicate as a literal loop over semi-open supersets.

    Kept as a cross-check for :func:`is_weakly_closed`; it shares no memo.
    """
    from .operators import is_x_open

    t = _grid_checked(tau, a, cap)
    cl_a = t.cl(a)
    return all(leq(cl_a, u) for u in t.sets if leq(a, u) and is_x_open(tau, u, Kind.S))


def is_weakly_open(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> bool:
    return is_weakly_closed(tau, complement(a), cap)


def weakly_open_by_semiclosed(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> bool:
    """Characterization of weakly-open sets through semi-closed subsets:
    every semi-closed U <= A satisfies U <= int(A)."""
    t = _grid_checked(tau, a, cap)
    int_a = t.int(a)
    return all(leq(u, int_a) for u in t.closed_family(Kind.S) if leq(u, a))


def is_g_closed(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> bool:
    """cl(A) <= U for every open U >= A; a finite loop over the opens."""
    cl_a = _grid_checked(tau, a, cap).cl(a)
    return all(leq(cl_a, u) for u in tau.opens if leq(a, u))


def closed_verdict(tau: FuzzyTopology, a: FuzzySet, name: str,
                   cap: int | None = None) -> bool:
    """Closed-form verdict for a base class name from CLASS_NAMES."""
    if name == "fuzzy":
        return tau.is_closed(a)
    if name in ("s", "p", "alpha", "sp"):
        return _grid_checked(tau, a, cap).is_closed(a, Kind(name))
    if name == "weakly":
        return is_weakly_closed(tau, a, cap)
    return is_kernel_class_closed(tau, a, name, cap)


@dataclass(frozen=True)
class ClassReport:
    set: FuzzySet
    verdicts: dict[str, bool]
    name: str = ""
    space: str = ""

    def __getitem__(self, key: str) -> bool:
        return self.verdicts[key]

    def members(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if v]

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "set": self.name or self.set.label(),
            "membership": {p: format_rational(v) for p, v in self.set.as_dict().items()},
            "classes": dict(self.verdicts),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def classify(tau: FuzzyTopology, a: FuzzySet, name: str = "",
             cap: int | None = None) -> ClassReport:
    tables(tau, cap)
    verdicts: dict[str, bool] = {}
    comp = complement(a)
    for c in CLASS_NAMES:
        closed_key, open_key = (("closed", "open") if c == "fuzzy"
                                else (f"{c}_closed", f"{c}_open"))
        verdicts[closed_key] = closed_verdict(tau, a, c, cap)
        verdicts[open_key] = closed_verdict(tau, comp, c, cap)
    return ClassReport(a, verdicts, name, tau.name)


PREDICATES: dict[str, Callable[[FuzzyTopology, FuzzySet], bool]] = {
    c: (lambda tau, a, c=c: closed_verdict(tau, a, c)) for c in CLASS_NAMES
}


def verdict(tau: FuzzyTopology, a: FuzzySet, key: str, cap: int | None = None) -> bool:
    """Verdict for one report key such as ``weakly_closed`` or ``s_open``."""
    if key in ("closed", "open"):
        base, form = "fuzzy", key
    else:
        base, _, form = key.rpartition("_")
    if base not in CLASS_NAMES or form not in ("closed", "open"):
        raise KeyError(f"unknown class key {key!r}; expected one of {report_keys()}")
    target = a if form == "closed" else complement(a)
    return closed_verdict(tau, target, base, cap)
