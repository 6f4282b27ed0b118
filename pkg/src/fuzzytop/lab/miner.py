"""Deterministic search for witnesses of non-implications and non-closure remarks.

Spaces are visited in a fixed order: the corpus, then every crisp topology on
1..4 points, then topologies on a finer grid. Within a space, sets (and pairs
or families of sets) are tried in enumeration order, so the witness returned
is the least one in (space order, set order). With several workers the
space list is split into ordered chunks and the earliest chunk's witness wins,
which gives the same answer as the sequential search.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from ..classifier import is_weakly_closed, is_weakly_open, report_keys, verdict
from ..lattice import FuzzySet, Grid, join_all, meet_all
from ..operators import tables, weakly_closed_family, weakly_open_family
from ..topology import FuzzyTopology
from .corpus import corpus
from .diagram import load_catalogue
from .enumeration import enumerate_topologies, small_carrier


@dataclass(frozen=True)
class MinerConfig:
    budget: int = 500
    workers: int = 1
    dedup: bool = True
    include_corpus: bool = True
    crisp_sizes: tuple[int, ...] = (1, 2, 3, 4)
    # (grid denominator, carrier sizes) searched after the crisp spaces
    fine_grids: tuple[tuple[int, tuple[int, ...]], ...] = ((2, (1, 2, 3)), (3, (1, 2)))
    family_size: int = 4


def search_spaces(config: MinerConfig = MinerConfig()) -> Iterator[tuple[str, FuzzyTopology]]:
    if config.include_corpus:
        for doc in corpus():
            yield doc.name, doc.topology
    for n in config.crisp_sizes:
        for k, tau in enumerate(enumerate_topologies(small_carrier(n), Grid.crisp(),
                                                     dedup=config.dedup)):
            yield f"crisp{n}#{k}", tau
    for den, sizes in config.fine_grids:
        for n in sizes:
            for k, tau in enumerate(enumerate_topologies(small_carrier(n), Grid.uniform(den),
                                                         dedup=config.dedup)):
                yield f"grid1/{den}-{n}#{k}", tau


def _pairs(family):
    for i, a in enumerate(family):
        for b in family[i:]:
            yield a, b


def _rem_2_4(tau, cfg):
    for a, b in _pairs(weakly_closed_family(tau)):
        if not is_weakly_closed(tau, a & b):
            return {"A": a, "B": b, "A_meet_B": a & b}


def _rem_2_6(tau, cfg):
    fam = weakly_closed_family(tau)
    for r in range(2, cfg.family_size + 1):
        for sub in itertools.combinations(fam, r):
            j = join_all(sub, tau.carrier)
            if not is_weakly_closed(tau, j):
                return {"family": list(sub), "join": j}


def _rem_2_8(tau, cfg):
    for a, b in _pairs(weakly_open_family(tau)):
        if not is_weakly_open(tau, a | b):
            return {"A": a, "B": b, "A_join_B": a | b}


def _rem_2_8b(tau, cfg):
    fam = weakly_open_family(tau)
    for r in range(2, cfg.family_size + 1):
        for sub in itertools.combinations(fam, r):
            m = meet_all(sub, tau.carrier)
            if not is_weakly_open(tau, m):
                return {"family": list(sub), "meet": m}


REMARKS: dict[str, tuple[Callable, str]] = {
    "Rem2.4": (_rem_2_4, "two weakly-closed sets whose meet is not weakly-closed"),
    "Rem2.6": (_rem_2_6, "weakly-closed sets whose join is not weakly-closed"),
    "Rem2.8": (_rem_2_8, "two weakly-open sets whose join is not weakly-open"),
    "Rem2.8b": (_rem_2_8b, "weakly-open sets whose meet is not weakly-open"),
}


def _nonimpl(source: str, target: str):
    def search(tau, cfg):
        for a in tables(tau).sets:
            if verdict(tau, a, source) and not verdict(tau, a, target):
                return {"A": a}
    return search


def claim_ids() -> list[str]:
    ids = list(REMARKS)
    for e in load_catalogue():
        if e.claim_id not in ids:
            ids.append(e.claim_id)
    return ids


def describe_claim(claim_id: str) -> str:
    if claim_id in REMARKS:
        return REMARKS[claim_id][1]
    _, p, q = claim_id.split(":")
    return f"a {p} set that is not {q}"


def _resolve(claim_id: str) -> Callable:
    if claim_id in REMARKS:
        return REMARKS[claim_id][0]
    parts = claim_id.split(":")
    keys = report_keys()
    if len(parts) == 3 and parts[0] == "nonimpl" and parts[1] in keys and parts[2] in keys:
        return _nonimpl(parts[1], parts[2])
    raise KeyError(f"unknown claim {claim_id!r}")


@dataclass
class MineResult:
    claim: str
    found: bool
    spaces_searched: int
    budget: int
    space: str = ""
    tau: FuzzyTopology | None = None
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"claim": self.claim, "description": describe_claim(self.claim),
               "status": "found" if self.found else "not-found",
               "spaces_searched": self.spaces_searched, "budget": self.budget}
        if self.found:
            out["space"] = {
                "name": self.space,
                "points": list(self.tau.carrier.points),
                "grid": [str(v) for v in self.tau.grid.values],
                "opens": [u.label() for u in self.tau.opens],
            }
            out["witness"] = {k: _json(v) for k, v in self.witness.items()}
        return out

    def short(self) -> str:
        if not self.found:
            return "no witness found"
        return f"{self.space}: " + ", ".join(
            f"{k}={_label(v)}" for k, v in self.witness.items())


def _label(v):
    if isinstance(v, FuzzySet):
        return v.label()
    return "[" + " ".join(_label(x) for x in v) + "]"


def _json(v):
    if isinstance(v, FuzzySet):
        return {"label": v.label(), "values": [str(x) for x in v.values]}
    return [_json(x) for x in v]


def _search_chunk(args) -> tuple[int, str, FuzzyTopology, dict] | None:
    claim_id, cfg, chunk = args
    fn = _resolve(claim_id)
    for idx, label, tau in chunk:
        wit = fn(tau, cfg)
        if wit is not None:
            return idx, label, tau, wit
    return None


def mine(claim_id: str, budget: int | None = None,
         spaces: Iterable[tuple[str, FuzzyTopology]] | None = None,
         config: MinerConfig | None = None, workers: int | None = None) -> MineResult:
    """Search up to ``budget`` spaces for a witness of ``claim_id``."""
    cfg = config or MinerConfig()
    budget = cfg.budget if budget is None else budget
    workers = cfg.workers if workers is None else workers
    fn = _resolve(claim_id)
    stream = search_spaces(cfg) if spaces is None else iter(spaces)
    if workers <= 1:
        n = 0
        for label, tau in itertools.islice(stream, budget):
            n += 1
            wit = fn(tau, cfg)
            if wit is not None:
                return MineResult(claim_id, True, n, budget, label, tau, wit)
        return MineResult(claim_id, False, n, budget)

    items = [(i, label, tau) for i, (label, tau) in enumerate(itertools.islice(stream, budget))]
    size = max(1, -(-len(items) // (workers * 4)))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for res in pool.map(_search_chunk, [(claim_id, cfg, c) for c in chunks]):
            if res is not None:
                idx, label, tau, wit = res
                pool.shutdown(wait=False, cancel_futures=True)
                return MineResult(claim_id, True, idx + 1, budget, label, tau, wit)
    return MineResult(claim_id, False, len(items), budget)
