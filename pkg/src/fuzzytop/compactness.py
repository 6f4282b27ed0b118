"""Finite intersection property, filterbases and the cover-based compactness notions.

Every cover condition is checked literally over all subfamilies of the
relevant finite family. On a finite grid every cover is itself finite, so the
plain compactness notions always hold; the reports therefore also carry the
smallest cover found and the worst-case minimal subcover size, which is
where the information is.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .lattice import (CapExceeded, Carrier, FuzzySet, default_cap, join,
                      meet_all, quasi_coincident)
from .operators import tables, wcl, weakly_open_family
from .topology import FuzzyTopology

ROLES = ("cover-candidate", "filterbase-candidate")


@dataclass(frozen=True)
class SetFamily:
    members: tuple[FuzzySet, ...]
    role: str = "filterbase-candidate"

    def __post_init__(self):
        members = tuple(self.members)
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}")
        if members and any(m.carrier != members[0].carrier for m in members):
            raise ValueError("family members live on different carriers")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FuzzySet]:
        return iter(self.members)


def _members(family) -> tuple[FuzzySet, ...]:
    return family.members if isinstance(family, SetFamily) else tuple(family)


def subfamilies(members: Sequence, min_size: int = 1,
                max_size: int | None = None) -> Iterator[tuple]:
    """Subfamilies by increasing size, each in index order."""
    top = len(members) if max_size is None else min(max_size, len(members))
    for r in range(min_size, top + 1):
        yield from itertools.combinations(members, r)


def has_fip(family, exhaustive: bool = False) -> bool:
    """Every nonempty finite subfamily has meet != 0_X. The empty family passes.

    Since a meet only shrinks as members are added, the whole family's meet
    decides it; ``exhaustive`` walks every subfamily instead.
    """
    members = _members(family)
    if not members:
        return True
    carrier = members[0].carrier
    if exhaustive:
        return all(not meet_all(sub, carrier).is_zero() for sub in subfamilies(members))
    return not meet_all(members, carrier).is_zero()


def is_filterbase(family, exhaustive: bool = False) -> bool:
    """Fuzzy filterbase: every finite collection of members has nonzero meet.

    On a finite family this is the same decision as :func:`has_fip`.
    """
    return has_fip(family, exhaustive)


def meets_all_q(family: Sequence[FuzzySet], u: FuzzySet) -> bool:
    """Every nonempty finite subcollection has a meet quasi-coincident with ``u``."""
    if not family:
        return True
    carrier = u.carrier
    return all(quasi_coincident(meet_all(sub, carrier), u) for sub in subfamilies(family))


def some_meet_q(family: Sequence[FuzzySet], u: FuzzySet) -> bool:
    """Some nonempty finite subcollection has a meet quasi-coincident with ``u``."""
    carrier = u.carrier
    return any(quasi_coincident(meet_all(sub, carrier), u) for sub in subfamilies(family))


@dataclass(frozen=True)
class CoverReport:
    """Outcome of a literal "every cover has a good finite subfamily" check.

    ``covers`` counts covering subfamilies of the candidate family;
    ``smallest_cover`` is the first covering subfamily of least size;
    ``worst_minimal`` is the largest, over covering families, of the size of
    their smallest good subfamily; ``failure`` is a covering family with no
    good subfamily, when one exists.
    """

    holds: bool
    candidates: int
    covers: int
    smallest_cover: tuple[FuzzySet, ...] | None
    worst_minimal: int | None
    failure: tuple[FuzzySet, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "candidates": self.candidates,
            "covering_families": self.covers,
            "smallest_cover": None if self.smallest_cover is None
            else [s.label() for s in self.smallest_cover],
            "worst_minimal_subcover": self.worst_minimal,
            "failure": None if self.failure is None else [s.label() for s in self.failure],
        }


def _cover_search(cands: Sequence[FuzzySet], carrier: Carrier,
                  is_cover: Callable[[FuzzySet], bool],
                  is_good: Callable[[FuzzySet, FuzzySet], bool],
                  transform: Callable[[FuzzySet], FuzzySet] | None = None,
                  cap: int | None = None) -> CoverReport:
    """Check every covering subfamily of ``cands`` for a good subfamily of itself.

    ``is_cover`` sees the join of a subfamily; ``is_good`` sees the join of a
    subfamily and the join of its transformed members (e.g. their wcl).
    Subfamilies are bitmasks; the per-mask joins are built incrementally.
    """
    cap = default_cap() if cap is None else cap
    n = len(cands)
    size = 1 << n
    if size > cap:
        raise CapExceeded("subfamilies", size, cap)
    zero = FuzzySet.zero(carrier)
    joins = [zero] * size
    tjoins = [zero] * size if transform else joins
    images = [transform(c) for c in cands] if transform else None
    inf = n + 1
    # best[m]: least size of a good subfamily of m (inf if none)
    best = [inf] * size
    covers = 0
    smallest = None
    worst = None
    failure = None
    for m in range(size):
        if m:
            low = m & -m
            i = low.bit_length() - 1
            joins[m] = join(joins[m ^ low], cands[i])
            if transform:
                tjoins[m] = join(tjoins[m ^ low], images[i])
        b = bin(m).count("1") if is_good(joins[m], tjoins[m]) else inf
        rest = m
        while rest:
            low = rest & -rest
            b = min(b, best[m ^ low])
            rest ^= low
        best[m] = b
        if is_cover(joins[m]):
            covers += 1
            if smallest is None or bin(m).count("1") < bin(smallest).count("1"):
                smallest = m
            if b == inf:
                if failure is None:
                    failure = m
            elif worst is None or b > worst:
                worst = b

    def unpack(mask):
        return None if mask is None else tuple(c for i, c in enumerate(cands) if mask >> i & 1)

    return CoverReport(failure is None, n, covers, unpack(smallest), worst, unpack(failure))


def is_quasi_compact(tau: FuzzyTopology, cap: int | None = None) -> CoverReport:
    """Every family of opens with join 1_X has a finite subfamily with join 1_X."""
    one = tau.one
    cover = lambda j: j == one  # noqa: E731
    return _cover_search(tau.opens, tau.carrier, cover, lambda j, _: cover(j), cap=cap)


def is_quasi_compact_set(tau: FuzzyTopology, a: FuzzySet, cap: int | None = None) -> CoverReport:
    """Every family of opens whose join lies above ``a`` has a finite subfamily doing so."""
    cover = lambda j: a <= j  # noqa: E731
    return _cover_search(tau.opens, tau.carrier, cover, lambda j, _: cover(j), cap=cap)


def is_weakly_compact(tau: FuzzyTopology, cap: int | None = None) -> CoverReport:
    """Weakly-open families with join exactly 1_X have a finite subfamily with join 1_X."""
    one = tau.one
    cover = lambda j: j == one  # noqa: E731
    return _cover_search(weakly_open_family(tau, cap), tau.carrier, cover,
                         lambda j, _: cover(j), cap=cap)


def _on_support(u: FuzzySet, rel: Callable) -> Callable[[FuzzySet], bool]:
    idx = [i for i, v in enumerate(u.values) if v > 0]
    return lambda j: all(rel(j.values[i], u.values[i]) for i in idx)


def is_weakly_compact_relative(tau: FuzzyTopology, u: FuzzySet,
                               cap: int | None = None) -> CoverReport:
    """Weakly-open families with join >= U on Supp(U) have a finite subfamily doing so."""
    tables(tau, cap)
    cover = _on_support(u, lambda x, y: x >= y)
    return _cover_search(weakly_open_family(tau, cap), tau.carrier, cover,
                         lambda j, _: cover(j), cap=cap)


def is_weakly_closed_space(tau: FuzzyTopology, cap: int | None = None) -> CoverReport:
    """Weakly-open families with join 1_X have a finite subfamily whose wcl-join is 1_X."""
    one = tau.one
    return _cover_search(weakly_open_family(tau, cap), tau.carrier,
                         lambda j: j == one, lambda _, w: w == one,
                         transform=lambda g: wcl(tau, g, cap), cap=cap)


def is_weakly_closed_relative(tau: FuzzyTopology, u: FuzzySet,
                              cap: int | None = None) -> CoverReport:
    """Weakly-open families with join equal to U on Supp(U) have a finite
    subfamily whose wcl-join equals U on Supp(U)."""
    eq = _on_support(u, lambda x, y: x == y)
    below = _on_support(u, lambda x, y: x <= y)
    # a member exceeding U somewhere on Supp(U) can never sit in a covering family
    cands = tuple(g for g in weakly_open_family(tau, cap) if below(g))
    return _cover_search(cands, tau.carrier, eq, lambda _, w: eq(w),
                         transform=lambda g: wcl(tau, g, cap), cap=cap)


def filterbases(pool: Iterable[FuzzySet], max_size: int) -> Iterator[tuple[FuzzySet, ...]]:
    """Nonempty filterbases of at most ``max_size`` distinct members of ``pool``."""
    pool = tuple(pool)
    for fam in subfamilies(pool, 1, max_size):
        if has_fip(fam):
            yield fam


__all__ = [
    "SetFamily", "CoverReport", "has_fip", "is_filterbase", "subfamilies",
    "is_quasi_compact", "is_quasi_compact_set", "is_weakly_compact",
    "is_weakly_compact_relative", "is_weakly_closed_space",
    "is_weakly_closed_relative", "filterbases", "meets_all_q", "some_meet_q",
]
