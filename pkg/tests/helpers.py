"""Independent oracles and generators shared by the tests.

Nothing here calls into the enumeration, shade or winding code it is used
to check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from duplex_twist.lattice import Cell, Cube, cube_color
from duplex_twist.sock import Cycle

CORPUS_TEXT = {
    "1x1": "#\n",
    "2x1": "##\n",
    "2x2": "##\n##\n",
    "2x3": "##\n##\n##\n",
    "3x3": "###\n###\n###\n",
    "2x4": "##\n##\n##\n##\n",
    "L-tromino": "##\n#\n",
    "3x4": "###\n###\n###\n###\n",
    "4x4": "####\n####\n####\n####\n",
    "irregular-10": "###\n####\n.#\n.##\n",
}


def _canon(cells) -> tuple:
    best = None
    for t in range(8):
        pts = []
        for x, y in cells:
            if t & 1:
                x, y = y, x
            if t & 2:
                x = -x
            if t & 4:
                y = -y
            pts.append((x, y))
        mx = min(p[0] for p in pts)
        my = min(p[1] for p in pts)
        key = tuple(sorted((x - mx, y - my) for x, y in pts))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def free_polyominoes(n: int) -> frozenset:
    """Edge-connected cell sets of size ``n`` up to rotation and reflection (holes allowed)."""
    if n == 1:
        return frozenset({((0, 0),)})
    out = set()
    for p in free_polyominoes(n - 1):
        s = set(p)
        for x, y in p:
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                c = (x + dx, y + dy)
                if c not in s:
                    out.add(_canon(p + (c,)))
    return frozenset(out)


def fixed_polyominoes(n: int) -> list[tuple]:
    """All translation classes of ``n``-cell polyominoes, normalized to min x = min y = 0."""
    out = set()
    for p in free_polyominoes(n):
        for t in range(8):
            pts = []
            for x, y in p:
                if t & 1:
                    x, y = y, x
                if t & 2:
                    x = -x
                if t & 4:
                    y = -y
                pts.append((x, y))
            mx = min(q[0] for q in pts)
            my = min(q[1] for q in pts)
            out.add(tuple(sorted((x - mx, y - my) for x, y in pts)))
    return sorted(out)


def euler_characteristic(cells) -> int:
    """V - E + F of the union of the closed unit squares."""
    verts, edges = set(), set()
    for x, y in cells:
        for dx, dy in ((0, 0), (1, 0), (0, 1), (1, 1)):
            verts.add((x + dx, y + dy))
        edges.add(((x, y), (x + 1, y)))
        edges.add(((x, y + 1), (x + 1, y + 1)))
        edges.add(((x, y), (x, y + 1)))
        edges.add(((x + 1, y), (x + 1, y + 1)))
    return len(verts) - len(edges) + len(cells)


def permanent(matrix: list[list[int]]) -> int:
    """Ryser's formula."""
    n = len(matrix)
    if n == 0:
        return 1
    total = 0
    for r in range(1, n + 1):
        for cols in combinations(range(n), r):
            prod = 1
            for row in matrix:
                s = sum(row[c] for c in cols)
                if s == 0:
                    prod = 0
                    break
                prod *= s
            total += (-1) ** r * prod
    return (-1) ** n * total


def count_matchings(cells) -> int:
    """Perfect matchings of the cube adjacency graph of cells x {0, 1}.

    The graph is bipartite by cube color, so the count is the permanent of
    its black-by-white biadjacency matrix.
    """
    cubes = [Cube(x, y, z) for x, y in cells for z in (0, 1)]
    black = [c for c in cubes if cube_color(c) == 1]
    white = [c for c in cubes if cube_color(c) == -1]
    if len(black) != len(white):
        return 0
    matrix = [
        [1 if sum(abs(p - q) for p, q in zip(b, w)) == 1 else 0 for w in white]
        for b in black
    ]
    return permanent(matrix)


def brute_force_tilings(cells) -> set[frozenset]:
    """Every tiling as a frozenset of frozenset cube pairs, by unordered recursion."""
    cubes = frozenset(Cube(x, y, z) for x, y in cells for z in (0, 1))
    out: set[frozenset] = set()

    def rec(free: frozenset, acc: frozenset) -> None:
        if not free:
            out.add(acc)
            return
        c = next(iter(free))
        for other in free:
            if sum(abs(p - q) for p, q in zip(c, other)) == 1:
                rec(free - {c, other}, acc | {frozenset((c, other))})

    rec(cubes, frozenset())
    return out


def make_cycle(points) -> Cycle:
    """Cycle through the given lattice points with alternating floor tags."""
    verts = tuple(Cell(*p) for p in points)
    return Cycle(verts, tuple(k % 2 for k in range(len(verts))))


def rectangle_cycle(x0: int, y0: int, x1: int, y1: int, ccw: bool = True) -> Cycle:
    """Boundary of the lattice rectangle [x0, x1] x [y0, y1], needs an even perimeter."""
    pts = [(x, y0) for x in range(x0, x1)]
    pts += [(x1, y) for y in range(y0, y1)]
    pts += [(x, y1) for x in range(x1, x0, -1)]
    pts += [(x0, y) for y in range(y1, y0, -1)]
    if not ccw:
        pts = [pts[0]] + pts[:0:-1]
    return make_cycle(pts)


def angle_winding(points, px: float, py: float) -> int:
    """Winding number by summing atan2 angle increments (floating point, rounded)."""
    import math

    total = 0.0
    n = len(points)
    for k in range(n):
        ax, ay = points[k]
        bx, by = points[(k + 1) % n]
        a1 = math.atan2(ay - py, ax - px)
        a2 = math.atan2(by - py, bx - px)
        d = a2 - a1
        while d > math.pi:
            d -= 2 * math.pi
        while d < -math.pi:
            d += 2 * math.pi
        total += d
    return round(total / (2 * math.pi))
