"""The worked example spaces, shipped as ``.fts`` documents."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources

from ..classifier import verdict
from .spacefile import SpaceDocument, parse_space

CORPUS_NAMES = ("ex2_2", "ex2_5", "ex3_6")


def corpus_text(name: str) -> str:
    if name not in CORPUS_NAMES:
        raise KeyError(f"no corpus space {name!r}; expected one of {CORPUS_NAMES}")
    return resources.files(__package__).joinpath("data", f"{name}.fts").read_text("utf-8")


def corpus_space(name: str) -> SpaceDocument:
    return parse_space(corpus_text(name))


def corpus() -> list[SpaceDocument]:
    return [corpus_space(n) for n in CORPUS_NAMES]


@dataclass(frozen=True)
class Claim:
    """A stated class membership for a named set of a corpus space."""

    space: str
    set: str
    key: str
    expected: bool
    source: str

    def evaluate(self) -> bool:
        doc = corpus_space(self.space)
        return verdict(doc.topology, doc.set(self.set), self.key)


def corpus_claims() -> list[Claim]:
    text = resources.files(__package__).joinpath("data", "claims.csv").read_text("utf-8")
    return [Claim(r["space"], r["set"], r["class"], r["expected"] == "true", r["source"])
            for r in csv.DictReader(io.StringIO(text))]
