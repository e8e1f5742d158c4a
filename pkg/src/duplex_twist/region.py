"""Planar bases and the duplex regions built over them.

The ASCII format is one text line per row: ``#`` at column x of line y is
the cell (x, y). Lines run top to bottom in the file, which makes y grow
downward on screen; every computation still treats (x, y) as ordinary
right-handed coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import BadCharacter, Disconnected, EmptyBase, NotSimplyConnected
from .lattice import Cell, Cube

NEIGHBOURS_2D = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _components(cells: set[Cell]) -> list[set[Cell]]:
    seen: set[Cell] = set()
    comps = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for dx, dy in NEIGHBOURS_2D:
                n = c.shifted(dx, dy)
                if n in cells and n not in comp:
                    comp.add(n)
                    queue.append(n)
        seen |= comp
        comps.append(comp)
    return comps


def is_edge_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    return len(cells) > 0 and len(_components(cells)) == 1


def has_hole(cells: Iterable[Cell]) -> bool:
    """True if some complement cell cannot reach the outside of the bounding box.

    The flood fill runs over the complement inside a bounding box padded by
    one cell, starting from a padding corner.
    """
    cells = set(cells)
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    start = Cell(x0, y0)
    reached = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for dx, dy in NEIGHBOURS_2D:
            n = c.shifted(dx, dy)
            if x0 <= n.x <= x1 and y0 <= n.y <= y1 and n not in cells and n not in reached:
                reached.add(n)
                queue.append(n)
    box = (x1 - x0 + 1) * (y1 - y0 + 1)
    return len(reached) + len(cells) != box


@dataclass(frozen=True)
class BaseShape:
    cells: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(Cell(*c) for c in self.cells))
        if not self.cells:
            raise EmptyBase("base has no cells")
        if not is_edge_connected(self.cells):
            raise Disconnected("base cells are not edge-connected")
        if has_hole(self.cells):
            raise NotSimplyConnected("base has a hole")

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, c) -> bool:
        return c in self.cells

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        """(min x, min y, max x, max y)."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        x0, _, x1, _ = self.bounds
        return x1 - x0 + 1

    @property
    def height(self) -> int:
        _, y0, _, y1 = self.bounds
        return y1 - y0 + 1

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)


def parse_base(text: str) -> BaseShape:
    cells = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for y, line in enumerate(lines):
        for x, ch in enumerate(line):
            if ch == "#":
                cells.append(Cell(x, y))
            elif ch != ".":
                raise BadCharacter(f"unexpected character {ch!r} at line {y}, column {x}")
    if not cells:
        raise EmptyBase("no '#' in base text")
    return BaseShape(frozenset(cells))


def format_base(base: BaseShape) -> str:
    """Inverse of :func:`parse_base` for bases with non-negative coordinates."""
    _, _, x1, y1 = base.bounds
    rows = []
    for y in range(y1 + 1):
        row = "".join("#" if Cell(x, y) in base.cells else "." for x in range(x1 + 1))
        rows.append(row.rstrip("."))
    return "\n".join(rows) + "\n"


def base_lines(base: BaseShape) -> list[str]:
    return format_base(base).rstrip("\n").split("\n")


def rectangle(width: int, height: int) -> BaseShape:
    return BaseShape(frozenset(Cell(x, y) for x in range(width) for y in range(height)))


@dataclass(frozen=True)
class DuplexRegion:
    base: BaseShape
    cubes: frozenset[Cube] = field(init=False)

    def __post_init__(self):
        cubes = frozenset(Cube(c.x, c.y, z) for c in self.base.cells for z in (0, 1))
        object.__setattr__(self, "cubes", cubes)

    def __contains__(self, c) -> bool:
        return c in self.cubes

    def sorted_cubes(self) -> list[Cube]:
        return sorted(self.cubes)


def build_duplex(base: BaseShape) -> DuplexRegion:
    return DuplexRegion(base)
