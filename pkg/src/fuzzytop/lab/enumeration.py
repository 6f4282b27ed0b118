"""Enumeration of every fuzzy topology on a small carrier with a fixed grid.

Families are bitmasks over the non-constant grid sets. Chang topologies are
exactly the meet/join-closed families (0_X and 1_X are added implicitly), so
they are the closed sets of a closure operator on those bitmasks and Ganter's
NextClosure lists them in lectic order without a subset-by-subset scan.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from ..lattice import (CapExceeded, Carrier, FuzzySet, Grid, default_cap,
                       enumerate_grid_sets, join, meet)
from ..topology import FuzzyTopology


class _Universe:
    def __init__(self, carrier: Carrier, grid: Grid, cap: int):
        sets = list(enumerate_grid_sets(carrier, grid, cap))
        zero, one = FuzzySet.zero(carrier), FuzzySet.one(carrier)
        self.carrier, self.grid = carrier, grid
        self.constants = (zero, one)
        self.mid = [s for s in sets if s != zero and s != one]
        index = {s: i for i, s in enumerate(self.mid)}
        m = len(self.mid)
        # bitmask of the non-constant results of meet/join for each pair
        self.gen = [[0] * m for _ in range(m)]
        for i, j in itertools.combinations(range(m), 2):
            bits = 0
            for op in (meet, join):
                k = index.get(op(self.mid[i], self.mid[j]))
                if k is not None:
                    bits |= 1 << k
            self.gen[i][j] = self.gen[j][i] = bits

    def close(self, mask: int) -> int:
        members = [i for i in range(len(self.mid)) if mask >> i & 1]
        todo = list(members)
        while todo:
            i = todo.pop()
            for j in members[:]:
                new = self.gen[i][j] & ~mask
                while new:
                    low = new & -new
                    k = low.bit_length() - 1
                    mask |= low
                    members.append(k)
                    todo.append(k)
                    new ^= low
        return mask

    def topology(self, mask: int) -> FuzzyTopology:
        fam = [s for i, s in enumerate(self.mid) if mask >> i & 1]
        return FuzzyTopology(self.carrier, self.grid, tuple(fam) + self.constants)


def enumerate_topologies(carrier: Carrier, grid: Grid, cap: int | None = None,
                         dedup: bool = False) -> Iterator[FuzzyTopology]:
    """Every Chang topology on ``carrier`` whose opens are grid-valued.

    ``cap`` bounds both the grid-set count and the number of topologies
    produced; exceeding it raises :class:`CapExceeded` at that point in the
    stream. With ``dedup`` only the first topology of each class under carrier
    permutations is produced.
    """
    cap = default_cap() if cap is None else cap
    u = _Universe(carrier, grid, cap)
    seen: set = set()
    count = 0
    for mask in _next_closure(u):
        tau = u.topology(mask)
        if dedup:
            key = canonical_key(tau)
            if key in seen:
                continue
            seen.add(key)
        count += 1
        if count > cap:
            raise CapExceeded("topologies", count, cap)
        yield tau


def _next_closure(u: _Universe) -> Iterator[int]:
    m = len(u.mid)
    # index 0 is the most significant element in lectic order
    a = u.close(0)
    yield a
    full = (1 << m) - 1
    while a != full:
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                continue
            prefix = a & (bit - 1)  # members more significant than i
            b = u.close(prefix | bit)
            if b & (bit - 1) == prefix:
                a = b
                break
        yield a


def canonical_key(tau: FuzzyTopology) -> tuple:
    """Lexicographically least sorted open-value list over carrier permutations."""
    n = len(tau.carrier)
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(u.values[p] for p in perm) for u in tau.opens))
        if best is None or key < best:
            best = key
    return best


def count_topologies(carrier: Carrier, grid: Grid, dedup: bool = False) -> int:
    return sum(1 for _ in enumerate_topologies(carrier, grid, dedup=dedup))


def small_carrier(n: int) -> Carrier:
    return Carrier(tuple("abcdefgh"[:n]))
