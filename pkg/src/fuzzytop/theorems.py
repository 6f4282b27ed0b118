"""Executable forms of the closure and compactness theorems on one finite space.

Each check enumerates the theorem's instances (sets, pairs, or filterbases
of at most ``family_size`` members drawn from the grid sets), tests the
hypothesis and, where it is met, the conclusion. One-directional results are
only checked in the stated direction. The first failing instance, in
enumeration order, is returned as the witness.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import compactness as cp
from .classifier import (is_g_closed, is_weakly_closed, is_weakly_open,
                         weakly_open_by_semiclosed)
from .lattice import FuzzySet, complement, join, join_all, leq, meet, meet_all
from .operators import tables, wcl, weakly_closed_family, weakly_open_family
from .topology import FuzzyTopology, closure

HOLDS, VACUOUS, COUNTEREXAMPLE = "holds", "vacuous", "counterexample"

DEFAULT_FAMILY_SIZE = 4


@dataclass
class Verdict:
    theorem: str
    status: str
    instances: int = 0
    witness: dict | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "status": self.status, "instances": self.instances}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _lbl(x) -> object:
    if isinstance(x, FuzzySet):
        return x.label()
    if isinstance(x, (tuple, list)):
        return [_lbl(y) for y in x]
    return x


def _run(theorem: str, instances: Iterator[tuple[dict, bool]]) -> Verdict:
    """Instances arrive already filtered by their hypothesis: (witness, conclusion)."""
    n = 0
    for wit, ok in instances:
        n += 1
        if not ok:
            return Verdict(theorem, COUNTEREXAMPLE, n, {k: _lbl(v) for k, v in wit.items()})
    return Verdict(theorem, HOLDS if n else VACUOUS, n)


class _Ctx:
    def __init__(self, tau: FuzzyTopology, family_size: int, cap: int | None):
        self.tau, self.k, self.cap = tau, family_size, cap
        self.t = tables(tau, cap)
        self.sets = self.t.sets
        self.carrier = tau.carrier

    def wclosed(self):
        return weakly_closed_family(self.tau, self.cap)

    def wopen(self):
        return weakly_open_family(self.tau, self.cap)

    def wcl(self, a):
        return wcl(self.tau, a, self.cap)

    def meet_of(self, fam, f=lambda a: a):
        return meet_all((f(a) for a in fam), self.carrier)

    def filterbases(self, pool):
        return cp.filterbases(pool, self.k)

    def targets(self, u):
        return self.sets if u is None else (u,)


def _t2_3(c: _Ctx, u):
    w = c.wclosed()
    for i, a in enumerate(w):
        for b in w[i:]:
            yield {"A": a, "B": b, "A_join_B": join(a, b)}, is_weakly_closed(c.tau, join(a, b), c.cap)


def _t2_7(c: _Ctx, u):
    w = c.wopen()
    for i, a in enumerate(w):
        for b in w[i:]:
            yield {"A": a, "B": b, "A_meet_B": meet(a, b)}, is_weakly_open(c.tau, meet(a, b), c.cap)


def _t2_9(c: _Ctx, u):
    for a in c.targets(u):
        lhs = is_weakly_open(c.tau, a, c.cap)
        rhs = weakly_open_by_semiclosed(c.tau, a, c.cap)
        yield {"A": a, "weakly_open": lhs, "semiclosed_characterization": rhs}, lhs == rhs


def _t2_10(c: _Ctx, u):
    for a in c.targets(u):
        if c.tau.is_open(a) and is_g_closed(c.tau, a, c.cap):
            yield {"A": a}, is_weakly_closed(c.tau, a, c.cap)


def _t2_12(c: _Ctx, u):
    for a in c.wclosed():
        cl_a = c.t.cl(a)
        for b in c.sets:
            if leq(a, b) and leq(b, cl_a):
                yield {"A": a, "B": b}, is_weakly_closed(c.tau, b, c.cap)


def _t4_1(c: _Ctx, u):
    if not cp.is_quasi_compact(c.tau, c.cap):
        return
    for a in c.wclosed():
        yield {"A": a}, cp.is_quasi_compact_set(c.tau, a, c.cap).holds


def _bad_weakly_closed_filterbase(c: _Ctx):
    """A filterbase of weakly-closed sets whose complements join to 1_X."""
    for fam in c.filterbases(c.wclosed()):
        if join_all((complement(a) for a in fam), c.carrier) == c.tau.one:
            return fam
    return None


def _t4_5(c: _Ctx, u):
    compact = cp.is_weakly_compact(c.tau, c.cap).holds
    bad = _bad_weakly_closed_filterbase(c)
    yield {"weakly_compact": compact, "filterbase": bad}, compact == (bad is None)


def _all_wcl_meets_nonzero(c: _Ctx) -> bool:
    return all(not c.meet_of(fam, c.wcl).is_zero() for fam in c.filterbases(c.sets))


def _t4_6(c: _Ctx, u):
    if _all_wcl_meets_nonzero(c):
        yield {}, cp.is_weakly_compact(c.tau, c.cap).holds


def _t4_7(c: _Ctx, u):
    if not cp.is_weakly_compact(c.tau, c.cap).holds:
        return
    for fam in c.filterbases(c.wclosed()):
        yield {"filterbase": fam}, not c.meet_of(fam, c.t.cl).is_zero()


def _t4_8(c: _Ctx, u):
    for target in c.targets(u):
        hyp = all(not meet(c.meet_of(fam, c.wcl), target).is_zero()
                  for fam in c.filterbases(c.wclosed()) if cp.meets_all_q(fam, target))
        if hyp:
            yield {"U": target}, cp.is_weakly_compact_relative(c.tau, target, c.cap).holds


def _t4_9(c: _Ctx, u):
    for target in c.targets(u):
        if not cp.is_weakly_compact_relative(c.tau, target, c.cap).holds:
            continue
        for fam in c.filterbases(c.wclosed()):
            if cp.meets_all_q(fam, target):
                yield ({"U": target, "filterbase": fam},
                       not meet(c.meet_of(fam, c.t.cl), target).is_zero())


def _t4_13(c: _Ctx, u):
    if _all_wcl_meets_nonzero(c):
        yield {}, cp.is_weakly_closed_space(c.tau, c.cap).holds


def _t4_14(c: _Ctx, u):
    if not cp.is_weakly_closed_space(c.tau, c.cap).holds:
        return
    for fam in c.filterbases(c.wopen()):
        yield {"filterbase": fam}, not c.meet_of(fam, c.t.cl).is_zero()


def _t4_15(c: _Ctx, u):
    for target in c.targets(u):
        if not cp.is_weakly_closed_relative(c.tau, target, c.cap).holds:
            continue
        for fam in c.filterbases(c.wopen()):
            if not meet(c.meet_of(fam, c.t.cl), target).is_zero():
                yield {"U": target, "filterbase": fam}, cp.some_meet_q(fam, target)


def _t4_16(c: _Ctx, u):
    for target in c.targets(u):
        hyp = all(cp.some_meet_q(fam, target)
                  for fam in c.filterbases(c.sets)
                  if not meet(c.meet_of(fam, c.wcl), target).is_zero())
        if hyp:
            yield {"U": target}, cp.is_weakly_closed_relative(c.tau, target, c.cap).holds


CATALOGUE: dict[str, tuple[Callable, str]] = {
    "2.3": (_t2_3, "join of two weakly-closed sets is weakly-closed"),
    "2.7": (_t2_7, "meet of two weakly-open sets is weakly-open"),
    "2.9": (_t2_9, "A weakly-open iff every semi-closed U <= A has U <= int(A)"),
    "2.10": (_t2_10, "open and g-closed implies weakly-closed"),
    "2.12": (_t2_12, "A weakly-closed and A <= B <= cl(A) implies B weakly-closed"),
    "4.1": (_t4_1, "in a quasi-compact space every weakly-closed set is quasi-compact"),
    "4.5": (_t4_5, "weakly-compact iff no weakly-closed filterbase has complements covering X"),
    "4.6": (_t4_6, "meet of wcl over every filterbase nonzero implies weakly-compact"),
    "4.7": (_t4_7, "weakly-compact implies meet of cl over weakly-closed filterbases nonzero"),
    "4.8": (_t4_8, "filterbase condition with wcl implies U weakly-compact relative"),
    "4.9": (_t4_9, "U weakly-compact relative implies filterbase condition with cl"),
    "4.13": (_t4_13, "meet of wcl over every filterbase nonzero implies weakly-closed space"),
    "4.14": (_t4_14, "weakly-closed space implies meet of cl over weakly-open filterbases nonzero"),
    "4.15": (_t4_15, "U weakly-closed relative implies some finite meet q U for weakly-open "
                     "filterbases with (meet cl) and U nonzero"),
    "4.16": (_t4_16, "filterbase condition with wcl implies U weakly-closed relative"),
}

THEOREM_IDS = tuple(CATALOGUE)
TAKES_SET = {"2.9", "2.10", "4.8", "4.9", "4.15", "4.16"}


def check_theorem(tau: FuzzyTopology, theorem_id: str, u: FuzzySet | None = None,
                  family_size: int = DEFAULT_FAMILY_SIZE, cap: int | None = None) -> Verdict:
    """Evaluate one catalogued theorem on ``tau``.

    ``u`` restricts set-indexed theorems to a single set; by default every
    grid set is tried. Filterbases range over at most ``family_size`` members.
    """
    if theorem_id not in CATALOGUE:
        raise KeyError(f"unknown theorem {theorem_id!r}; expected one of {list(CATALOGUE)}")
    if u is not None and theorem_id not in TAKES_SET:
        u = None
    fn, _ = CATALOGUE[theorem_id]
    ctx = _Ctx(tau, family_size, cap)
    verdict = _run(theorem_id, fn(ctx, u))
    verdict.notes["family_size"] = family_size
    return verdict


def check_all(tau: FuzzyTopology, family_size: int = DEFAULT_FAMILY_SIZE,
              cap: int | None = None) -> list[Verdict]:
    return [check_theorem(tau, tid, family_size=family_size, cap=cap) for tid in THEOREM_IDS]


def closure_sandwich_equal(tau: FuzzyTopology, a: FuzzySet, b: FuzzySet) -> bool:
    """A <= B <= cl(A) forces cl(A) == cl(B); True when the premise fails."""
    cl_a = closure(tau, a)
    if not (leq(a, b) and leq(b, cl_a)):
        return True
    return cl_a == closure(tau, b)
