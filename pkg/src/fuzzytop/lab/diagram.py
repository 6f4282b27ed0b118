"""The implication catalogue, its verification on a space, and DOT rendering."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterable

from ..classifier import report_keys, verdict
from ..lattice import FuzzySet
from ..operators import tables
from ..topology import FuzzyTopology

STATUSES = ("theorem", "converse-false", "independent")
FIGURE_ONLY = "figure-only, unverified-from-text"


@dataclass(frozen=True)
class ImplicationEdge:
    source: str
    target: str
    status: str
    provenance: str
    claimed_witness: str = ""
    witness: str = ""

    def __post_init__(self):
        keys = report_keys()
        for k in (self.source, self.target):
            if k not in keys:
                raise ValueError(f"unknown class {k!r} in implication catalogue")
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def claim_id(self) -> str:
        """Miner id of the claim this edge makes false (for theorem edges, its converse)."""
        if self.status == "theorem":
            return f"nonimpl:{self.target}:{self.source}"
        return f"nonimpl:{self.source}:{self.target}"

    def holds_for(self, tau: FuzzyTopology, a: FuzzySet) -> bool:
        return not verdict(tau, a, self.source) or verdict(tau, a, self.target)

    def to_json(self) -> dict:
        out = {"from": self.source, "to": self.target, "status": self.status,
               "provenance": self.provenance}
        if self.claimed_witness:
            out["claimed_witness"] = self.claimed_witness
        if self.witness:
            out["witness"] = self.witness
        return out


def load_catalogue() -> list[ImplicationEdge]:
    text = resources.files(__package__).joinpath("data", "edges.csv").read_text("utf-8")
    return [ImplicationEdge(r["source"], r["target"], r["status"], r["provenance"],
                            r["claimed_witness"] or "")
            for r in csv.DictReader(io.StringIO(text))]


def theorem_edges() -> list[ImplicationEdge]:
    return [e for e in load_catalogue() if e.status == "theorem"]


def nonimplications() -> list[ImplicationEdge]:
    return [e for e in load_catalogue() if e.status != "theorem"]


@dataclass(frozen=True)
class Violation:
    edge: ImplicationEdge
    set: FuzzySet
    space: str = ""

    def to_json(self) -> dict:
        return {"space": self.space, "set": self.set.label(), **self.edge.to_json()}


def verify_diagram(tau: FuzzyTopology, edges: Iterable[ImplicationEdge] | None = None,
                   cap: int | None = None) -> list[Violation]:
    """Every theorem edge evaluated on every grid set of ``tau``; violations returned."""
    edges = theorem_edges() if edges is None else [e for e in edges if e.status == "theorem"]
    out = []
    for a in tables(tau, cap).sets:
        for e in edges:
            if not e.holds_for(tau, a):
                out.append(Violation(e, a, tau.name))
    return out


@dataclass
class DiagramSummary:
    spaces: int = 0
    set_checks: int = 0
    violations: list[Violation] | None = None

    def line(self) -> str:
        return (f"{len(self.violations or [])} violations / {self.spaces} spaces / "
                f"{self.set_checks} set-checks")


def verify_spaces(spaces: Iterable[FuzzyTopology], cap: int | None = None) -> DiagramSummary:
    summary = DiagramSummary(violations=[])
    edges = theorem_edges()
    for tau in spaces:
        summary.spaces += 1
        summary.set_checks += len(tables(tau, cap).sets)
        summary.violations += verify_diagram(tau, edges, cap)
    return summary


def _node(key: str) -> str:
    return key.replace("_", "-")


def to_dot(edges: Iterable[ImplicationEdge]) -> str:
    """Theorem edges solid, refuted implications dashed and labelled with their witness."""
    lines = ["digraph implications {", "  rankdir=BT;", "  node [shape=box];"]
    for e in edges:
        attrs = []
        if e.status == "theorem":
            if e.provenance == FIGURE_ONLY:
                attrs.append('color="gray40"')
        else:
            attrs.append("style=dashed")
            attrs.append('color="red"' if e.status == "converse-false" else 'color="blue"')
            label = e.witness or "no witness found"
            attrs.append(f'label="{label}"')
        attrs.append(f'tooltip="{e.provenance}"')
        lines.append(f'  "{_node(e.source)}" -> "{_node(e.target)}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def with_witness(edge: ImplicationEdge, witness: str) -> ImplicationEdge:
    return replace(edge, witness=witness)
