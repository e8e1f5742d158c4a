"""Projection of a duplex tiling onto the plane graph of its base.

Vertical dominoes project to jewels and horizontal ones to edges tagged by
floor. Each non-jewel vertex then meets exactly one floor-0 and one floor-1
edge, so the edges fall apart into cycles. Floor-0 edges run from their
black vertex to their white vertex and floor-1 edges the other way round,
which makes every cycle head-to-tail. (This orientation is the one for which
P'(1) agrees in sign with the pretwists under the cube coloring of
:func:`~duplex_twist.lattice.cube_color`.) Two stacked horizontal dominoes over
the same pair of cells (a trivial cycle) project to two jewels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import InputError, MalformedCycle
from .lattice import Cell, Cube, vertex_color
from .region import DuplexRegion
from .tiling import Domino, Tiling


@dataclass(frozen=True)
class PlaneGraph:
    vertices: tuple[Cell, ...]
    edges: tuple[tuple[Cell, Cell], ...]


def base_graph(r: DuplexRegion) -> PlaneGraph:
    cells = r.base.cells
    verts = tuple(sorted(cells))
    edges = []
    for c in verts:
        for dx, dy in ((1, 0), (0, 1)):
            n = c.shifted(dx, dy)
            if n in cells:
                edges.append((c, n))
    return PlaneGraph(verts, tuple(sorted(edges)))


@dataclass(frozen=True)
class Cycle:
    """Oriented simple cycle of the plane graph.

    ``floors[k]`` tags the edge from ``vertices[k]`` to ``vertices[k+1]``
    (indices mod length). The stored rotation starts at the smallest vertex.
    """

    vertices: tuple[Cell, ...]
    floors: tuple[int, ...]

    def __post_init__(self):
        verts = tuple(Cell(*v) for v in self.vertices)
        floors = tuple(int(f) for f in self.floors)
        n = len(verts)
        if n < 4 or n % 2:
            raise MalformedCycle(f"cycle length {n} is not an even number >= 4")
        if len(floors) != n:
            raise MalformedCycle("need one floor tag per edge")
        if len(set(verts)) != n:
            raise MalformedCycle("cycle repeats a vertex")
        for k in range(n):
            a, b = verts[k], verts[(k + 1) % n]
            if abs(a.x - b.x) + abs(a.y - b.y) != 1:
                raise MalformedCycle(f"{tuple(a)} and {tuple(b)} are not adjacent")
            if floors[k] not in (0, 1) or floors[k] == floors[(k + 1) % n]:
                raise MalformedCycle("floor tags must alternate 0/1")
        s = verts.index(min(verts))
        object.__setattr__(self, "vertices", verts[s:] + verts[:s])
        object.__setattr__(self, "floors", floors[s:] + floors[:s])

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertex_set

    @cached_property
    def vertex_set(self) -> frozenset[Cell]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[Cell, Cell, int]]:
        n = len(self.vertices)
        return [(self.vertices[k], self.vertices[(k + 1) % n], self.floors[k]) for k in range(n)]

    def neighbours(self, v: Cell) -> tuple[Cell, Cell]:
        """(previous, next) vertex around ``v``."""
        k = self.vertices.index(v)
        n = len(self.vertices)
        return self.vertices[k - 1], self.vertices[(k + 1) % n]

    def reversed(self) -> "Cycle":
        n = len(self.vertices)
        verts = tuple(reversed(self.vertices))
        # edge (v[k+1] -> v[k]) keeps the tag of v[k] -> v[k+1]
        floors = tuple(self.floors[(n - 2 - k) % n] for k in range(n))
        return Cycle(verts, floors)

    @cached_property
    def bounds(self) -> tuple[int, int, int, int]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices], "floors": list(self.floors)}

    @classmethod
    def from_json(cls, data: dict) -> "Cycle":
        try:
            return cls(tuple(Cell(*map(int, v)) for v in data["vertices"]), tuple(data["floors"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedCycle(f"cannot read cycle {data!r}") from exc


@dataclass(frozen=True)
class Sock:
    jewels: frozenset[Cell]
    cycles: tuple[Cycle, ...]
    cells: frozenset[Cell] = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "jewels", frozenset(Cell(*j) for j in self.jewels))
        cycles = tuple(sorted(self.cycles, key=lambda c: c.vertices))
        object.__setattr__(self, "cycles", cycles)
        cells = set(self.jewels)
        for c in cycles:
            if cells & c.vertex_set:
                raise InputError("sock cycles and jewels must be vertex-disjoint")
            cells |= c.vertex_set
        object.__setattr__(self, "cells", frozenset(cells))

    def cycle_through(self, v: Cell) -> Cycle | None:
        for c in self.cycles:
            if v in c:
                return c
        return None

    def to_json(self) -> dict:
        return {
            "jewels": [list(j) for j in sorted(self.jewels)],
            "cycles": [c.to_json() for c in self.cycles],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Sock":
        try:
            jewels = frozenset(Cell(*map(int, j)) for j in data["jewels"])
            cycles = tuple(Cycle.from_json(c) for c in data["cycles"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError("sock document needs 'jewels' and 'cycles'") from exc
        return cls(jewels, cycles)


@dataclass(frozen=True)
class RawProjection:
    """Projection before trivial cycles are removed; edges are (cell, cell, floor)."""

    jewels: frozenset[Cell]
    edges: tuple[tuple[Cell, Cell, int], ...]

    def degree(self, v: Cell) -> dict[int, int]:
        """Number of incident edges on each floor."""
        out = {0: 0, 1: 0}
        for a, b, f in self.edges:
            if v in (a, b):
                out[f] += 1
        return out


def raw_projection(t: Tiling) -> RawProjection:
    jewels = set()
    edges = []
    for d in t.dominoes:
        if d.is_vertical:
            jewels.add(d.a.cell)
        else:
            edges.append((d.a.cell, d.b.cell, d.a.z))
    return RawProjection(frozenset(jewels), tuple(sorted(edges)))


def _directed(a: Cell, b: Cell, floor: int) -> tuple[Cell, Cell]:
    white, black = (a, b) if vertex_color(a) == -1 else (b, a)
    return (black, white) if floor == 0 else (white, black)


def project_sock(t: Tiling) -> Sock:
    raw = raw_projection(t)
    by_pair: dict[tuple[Cell, Cell], list[int]] = {}
    for a, b, f in raw.edges:
        by_pair.setdefault((a, b), []).append(f)
    jewels = set(raw.jewels)
    succ: dict[Cell, tuple[Cell, int]] = {}
    for (a, b), floors in by_pair.items():
        if len(floors) == 2:
            jewels.update((a, b))
            continue
        (f,) = floors
        tail, head = _directed(a, b, f)
        succ[tail] = (head, f)

    cycles = []
    seen: set[Cell] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        verts, floors = [], []
        v = start
        while v not in seen:
            seen.add(v)
            verts.append(v)
            v, f = succ[v]
            floors.append(f)
        if v != start:
            raise InputError("projection is not a union of cycles; tiling is invalid")
        cycles.append(Cycle(tuple(verts), tuple(floors)))
    return Sock(frozenset(jewels), tuple(cycles))


def trivial_cycles(t: Tiling) -> list[tuple[Domino, Domino]]:
    """Pairs of stacked horizontal dominoes over the same two cells."""
    cover = t.cover
    out = []
    for d in t.dominoes:
        if d.is_vertical or d.a.z != 0:
            continue
        up = cover.get((d.a.x, d.a.y, 1))
        if up is not None and up.b == (d.b.x, d.b.y, 1):
            out.append((d, up))
    return out


def resolve_trivial_cycles(t: Tiling) -> Tiling:
    """Flip every trivial cycle into a pair of vertical dominoes.

    The result has the same sock as ``t`` and every jewel carries a
    vertical domino.
    """
    stacked = trivial_cycles(t)
    if not stacked:
        return t
    drop = {d for pair in stacked for d in pair}
    keep = [d for d in t.dominoes if d not in drop]
    for low, up in stacked:
        keep.append(Domino(low.a, up.a))
        keep.append(Domino(low.b, up.b))
    return Tiling(tuple(keep))

