"""Fuzzy topologies in Chang's sense on a finite carrier, with interior and closure."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .lattice import (Carrier, FuzzySet, Grid, IncompatibleSets, complement,
                      join, join_all, leq, meet, meet_all)


class TopologyError(ValueError):
    """A family of fuzzy sets that fails Chang's axioms or the grid constraint."""


@dataclass(frozen=True, eq=False)
class FuzzyTopology:
    """A validated finite fuzzy topology.

    Construction checks that the family contains 0_X and 1_X, is grid-valued,
    and is closed under pairwise meet and join. For a finite family pairwise
    closure gives closure under every finite meet and every join of a
    subfamily, which is all Chang's axioms ask for here. Opens are deduplicated
    and stored in canonical (lexicographic value) order.
    """

    carrier: Carrier
    grid: Grid
    opens: tuple[FuzzySet, ...]
    name: str = ""
    # memo tables for the derived operators; see operators.tables()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        family = tuple(self.opens)
        for u in family:
            if u.carrier != self.carrier:
                raise IncompatibleSets(f"open set {u.label()} is on another carrier")
            if not u.on_grid(self.grid):
                raise TopologyError(f"open set {u!r} has values off the grid")
        uniq = sorted(set(family), key=lambda s: s.values)
        members = set(uniq)
        if FuzzySet.zero(self.carrier) not in members:
            raise TopologyError("missing 0_X")
        if FuzzySet.one(self.carrier) not in members:
            raise TopologyError("missing 1_X")
        for i, a in enumerate(uniq):
            for b in uniq[i + 1:]:
                for op, sym in ((meet, "meet"), (join, "join")):
                    c = op(a, b)
                    if c not in members:
                        raise TopologyError(
                            f"not closed under {sym}: {a.label()} and {b.label()} "
                            f"give {c.label()}, which is missing")
        object.__setattr__(self, "opens", tuple(uniq))

    def __eq__(self, other):
        if not isinstance(other, FuzzyTopology):
            return NotImplemented
        return (self.carrier, self.grid, self.opens) == (other.carrier, other.grid, other.opens)

    def __hash__(self):
        return hash((self.carrier, self.grid, self.opens))

    @cached_property
    def closed_sets(self) -> tuple[FuzzySet, ...]:
        return tuple(sorted({complement(u) for u in self.opens}, key=lambda s: s.values))

    @cached_property
    def open_set(self) -> frozenset[FuzzySet]:
        return frozenset(self.opens)

    @cached_property
    def zero(self) -> FuzzySet:
        return FuzzySet.zero(self.carrier)

    @cached_property
    def one(self) -> FuzzySet:
        return FuzzySet.one(self.carrier)

    def is_open(self, a: FuzzySet) -> bool:
        return a in self.open_set

    def is_closed(self, a: FuzzySet) -> bool:
        return complement(a) in self.open_set

    def with_grid(self, grid: Grid) -> FuzzyTopology:
        """Same opens, different value grid (the grid must still hold every open)."""
        return FuzzyTopology(self.carrier, grid, self.opens, self.name)

    def describe(self) -> str:
        return "{" + ", ".join(u.label() for u in self.opens) + "}"


def validate_topology(carrier: Carrier, grid: Grid, family: Iterable[FuzzySet],
                      name: str = "") -> FuzzyTopology:
    return FuzzyTopology(carrier, grid, tuple(family), name)


def crisp_topology(points, opens, name: str = "") -> FuzzyTopology:
    """Build a {0,1}-valued topology from point names and lists of member points.

    0_X and 1_X are added when absent.
    """
    carrier = points if isinstance(points, Carrier) else Carrier(tuple(points))
    family = [FuzzySet.crisp(carrier, o) for o in opens]
    family += [FuzzySet.zero(carrier), FuzzySet.one(carrier)]
    return FuzzyTopology(carrier, Grid.crisp(), tuple(family), name)


def _same_carrier(tau: FuzzyTopology, a: FuzzySet) -> None:
    if a.carrier != tau.carrier:
        raise IncompatibleSets(f"{a.label()} is not on the topology's carrier")


def interior(tau: FuzzyTopology, a: FuzzySet) -> FuzzySet:
    """Largest open set below ``a``."""
    _same_carrier(tau, a)
    return join_all((u for u in tau.opens if leq(u, a)), tau.carrier)


def closure(tau: FuzzyTopology, a: FuzzySet) -> FuzzySet:
    """Smallest closed set above ``a``."""
    _same_carrier(tau, a)
    return meet_all((c for c in tau.closed_sets if leq(a, c)), tau.carrier)
