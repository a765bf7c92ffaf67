"""Finite bounded lattices from an order table.

``leq`` is a boolean matrix over 0..size-1.  Validation runs in the order
poset axioms, then bounds, then binary lub/glb, so an antichain of two
maximal elements reports a missing top rather than a missing join.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyFamily, NotALattice, NotAPoset, Unbounded

BoolTable = tuple[tuple[bool, ...], ...]
IntTable = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteBoundedLattice:
    """A finite lattice with precomputed join and meet tables."""

    size: int
    leq: BoolTable
    top: int
    bottom: int
    join_table: IntTable
    meet_table: IntTable

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs (a, b) with a < b and nothing strictly between."""
        out = []
        for a, b in itertools.product(range(self.size), repeat=2):
            if a == b or not self.leq[a][b]:
                continue
            between = any(
                z != a and z != b and self.leq[a][z] and self.leq[z][b]
                for z in range(self.size)
            )
            if not between:
                out.append((a, b))
        return tuple(out)


def _bound(leq: BoolTable, a: int, b: int, size: int, upper: bool) -> int | None:
    if upper:
        cands = [x for x in range(size) if leq[a][x] and leq[b][x]]
        return next((u for u in cands if all(leq[u][x] for x in cands)), None)
    cands = [x for x in range(size) if leq[x][a] and leq[x][b]]
    return next((l for l in cands if all(leq[x][l] for x in cands)), None)


def make_lattice(size: int, leq: Sequence[Sequence[bool]]) -> FiniteBoundedLattice:
    """Validate the order table and precompute join/meet tables."""
    if size < 1:
        raise ValueError("size must be positive")
    table: BoolTable = tuple(tuple(bool(v) for v in row) for row in leq)
    if len(table) != size or any(len(row) != size for row in table):
        raise ValueError(f"leq must be a {size}x{size} table")

    rng = range(size)
    for a in rng:
        if not table[a][a]:
            raise NotAPoset("reflexivity", (a,))
    for a, b in itertools.product(rng, repeat=2):
        if a != b and table[a][b] and table[b][a]:
            raise NotAPoset("antisymmetry", (a, b))
    for a, b, c in itertools.product(rng, repeat=3):
        if table[a][b] and table[b][c] and not table[a][c]:
            raise NotAPoset("transitivity", (a, b, c))

    tops = [t for t in rng if all(table[x][t] for x in rng)]
    if not tops:
        raise Unbounded("no greatest element")
    bottoms = [b for b in rng if all(table[b][x] for x in rng)]
    if not bottoms:
        raise Unbounded("no least element")
    top, bottom = tops[0], bottoms[0]

    join_rows = []
    meet_rows = []
    for a in rng:
        jrow = []
        mrow = []
        for b in rng:
            u = _bound(table, a, b, size, upper=True)
            if u is None:
                raise NotALattice("least upper bound", (a, b))
            l = _bound(table, a, b, size, upper=False)
            if l is None:
                raise NotALattice("greatest lower bound", (a, b))
            jrow.append(u)
            mrow.append(l)
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    return FiniteBoundedLattice(size, table, top, bottom, tuple(join_rows), tuple(meet_rows))


def join_all(lat: FiniteBoundedLattice, elems: Iterable[int]) -> int:
    """Join of a nonempty family."""
    it = iter(elems)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyFamily("join over the empty family is undefined") from None
    for x in it:
        acc = lat.join_table[acc][x]
    return acc


def meet_all(lat: FiniteBoundedLattice, elems: Iterable[int]) -> int:
    """Meet of a nonempty family."""
    it = iter(elems)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyFamily("meet over the empty family is undefined") from None
    for x in it:
        acc = lat.meet_table[acc][x]
    return acc


def chain_lattice(n: int) -> FiniteBoundedLattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    return make_lattice(n, [[a <= b for b in range(n)] for a in range(n)])
