"""Domino tilings of duplex regions: enumeration, flips and the flip graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    CubeOutsideRegion,
    FlipNotApplicable,
    InputError,
    MalformedDomino,
    OverlappingDominoes,
    UncoveredCube,
)
from .lattice import POSITIVE_AXES, Cube, Direction, cube_color
from .region import BaseShape, DuplexRegion, base_lines, build_duplex, parse_base


class Domino:
    """Two face-adjacent cubes, stored with ``a < b``.

    ``axis`` is the positive direction from ``a`` to ``b``; ``sign`` is the
    unit vector from the white cube to the black one.
    """

    __slots__ = ("a", "b", "axis", "sign", "_hash")

    def __init__(self, a, b):
        a, b = Cube(*a), Cube(*b)
        if abs(a.x - b.x) + abs(a.y - b.y) + abs(a.z - b.z) != 1:
            raise MalformedDomino(f"cubes {tuple(a)} and {tuple(b)} are not face-adjacent")
        if b < a:
            a, b = b, a
        self.a = a
        self.b = b
        self.axis = Direction((b.x - a.x, b.y - a.y, b.z - a.z))
        black, white = (a, b) if cube_color(a) == 1 else (b, a)
        self.sign = Direction((black.x - white.x, black.y - white.y, black.z - white.z))
        self._hash = hash((a, b))

    def __reduce__(self):
        return (Domino, (self.a, self.b))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, Domino):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.a == other.a and self.b == other.b)

    def __lt__(self, other: "Domino") -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def __le__(self, other: "Domino") -> bool:
        return (self.a, self.b) <= (other.a, other.b)

    def __gt__(self, other: "Domino") -> bool:
        return (self.a, self.b) > (other.a, other.b)

    def __ge__(self, other: "Domino") -> bool:
        return (self.a, self.b) >= (other.a, other.b)

    @property
    def cubes(self) -> tuple[Cube, Cube]:
        return (self.a, self.b)

    @property
    def is_vertical(self) -> bool:
        return self.a.z != self.b.z

    def shifted(self, d: Direction) -> "Domino":
        return Domino(self.a.shifted(d), self.b.shifted(d))

    def to_json(self) -> list[list[int]]:
        return [list(self.a), list(self.b)]

    def __repr__(self) -> str:
        return f"Domino({tuple(self.a)}, {tuple(self.b)})"


@lru_cache(maxsize=1 << 16)
def _domino(a: Cube, b: Cube) -> Domino:
    return Domino(a, b)


def sign_vector(d: Domino) -> Direction:
    """v(d): center of the black cube minus center of the white cube."""
    return d.sign


@dataclass(frozen=True)
class Tiling:
    """A set of dominoes kept in canonical sorted order."""

    dominoes: tuple[Domino, ...]

    def __post_init__(self):
        object.__setattr__(self, "dominoes", tuple(sorted(self.dominoes)))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(self.dominoes)

    def __iter__(self) -> Iterator[Domino]:
        return iter(self.dominoes)

    def __len__(self) -> int:
        return len(self.dominoes)

    def __contains__(self, d) -> bool:
        return d in self.domino_set

    @cached_property
    def domino_set(self) -> frozenset[Domino]:
        return frozenset(self.dominoes)

    @cached_property
    def cover(self) -> dict[Cube, Domino]:
        """Cube -> the domino covering it."""
        out = {}
        for d in self.dominoes:
            out[d.a] = d
            out[d.b] = d
        return out

    @cached_property
    def bounds(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        """Componentwise (min, max) over all covered cubes."""
        cubes = list(self.cover)
        lo = tuple(min(c[k] for c in cubes) for k in range(3))
        hi = tuple(max(c[k] for c in cubes) for k in range(3))
        return lo, hi

    def to_json(self) -> list:
        return [d.to_json() for d in self.dominoes]


@dataclass(frozen=True)
class Flip:
    removed: tuple[Domino, Domino]
    placed: tuple[Domino, Domino]

    def reverse(self) -> "Flip":
        return Flip(self.placed, self.removed)


def _as_domino(d) -> Domino:
    if isinstance(d, Domino):
        return d
    try:
        a, b = d
        return Domino(Cube(*map(int, a)), Cube(*map(int, b)))
    except MalformedDomino:
        raise
    except (TypeError, ValueError) as exc:
        raise MalformedDomino(f"cannot read domino {d!r}") from exc


def validate_tiling(r: DuplexRegion, t: Tiling | Iterable) -> Tiling:
    """Check that ``t`` partitions the cubes of ``r``; return it as a :class:`Tiling`."""
    dominoes = [_as_domino(d) for d in t]
    covered: set[Cube] = set()
    for d in dominoes:
        for c in d.cubes:
            if c not in r.cubes:
                raise CubeOutsideRegion(f"cube {tuple(c)} is outside the region")
            if c in covered:
                raise OverlappingDominoes(f"cube {tuple(c)} is covered twice")
            covered.add(c)
    missing = r.cubes - covered
    if missing:
        raise UncoveredCube(f"cube {tuple(min(missing))} is not covered")
    return t if isinstance(t, Tiling) else Tiling(tuple(dominoes))


def enumerate_tilings(r: DuplexRegion) -> Iterator[Tiling]:
    """Yield every tiling of ``r`` exactly once, in a fixed order.

    Backtracking always covers the lexicographically first free cube, pairing
    it with its +i, +j, +k neighbour in that order.
    """
    cubes = r.sorted_cubes()
    n = len(cubes)
    index = {c: i for i, c in enumerate(cubes)}
    partners: list[list[tuple[int, Domino]]] = []
    for c in cubes:
        row = []
        for d in POSITIVE_AXES:
            j = index.get(c.shifted(d))
            if j is not None:
                row.append((j, Domino(c, cubes[j])))
        partners.append(row)

    covered = [False] * n
    chosen: list[Domino] = []
    # explicit stack of (cube index, next partner slot) keeps deep regions off the recursion limit
    stack: list[list[int]] = []

    def advance(k: int) -> int:
        while k < n and covered[k]:
            k += 1
        return k

    i = advance(0)
    if i == n:
        yield Tiling(())
        return
    stack.append([i, 0])
    while stack:
        frame = stack[-1]
        i, slot = frame
        if slot > 0:
            # undo the previous choice at this frame
            j = partners[i][slot - 1][0]
            covered[j] = False
            chosen.pop()
        else:
            covered[i] = True
        opts = partners[i]
        while slot < len(opts) and covered[opts[slot][0]]:
            slot += 1
        if slot == len(opts):
            covered[i] = False
            stack.pop()
            continue
        j, dom = opts[slot]
        frame[1] = slot + 1
        covered[j] = True
        chosen.append(dom)
        nxt = advance(i + 1)
        if nxt == n:
            yield Tiling(tuple(chosen))
        else:
            stack.append([nxt, 0])


_PERPENDICULAR = {u: tuple(e for e in POSITIVE_AXES if e is not u) for u in POSITIVE_AXES}


def _perpendicular(d: Domino) -> tuple[Direction, ...]:
    return _PERPENDICULAR[d.axis]


def find_flips(t: Tiling) -> list[Flip]:
    """All flips available in ``t``, ordered by their removed pair."""
    flips = []
    cover = t.cover
    for d in t.dominoes:
        (ax, ay, az), (bx, by, bz) = d.a, d.b
        for e in _perpendicular(d):
            ex, ey, ez = e.value
            other = cover.get((ax + ex, ay + ey, az + ez))
            if other is not None and other.b == (bx + ex, by + ey, bz + ez):
                placed = tuple(sorted((_domino(d.a, other.a), _domino(d.b, other.b))))
                flips.append(Flip((d, other), placed))
    return flips


def apply_flip(t: Tiling, f: Flip) -> Tiling:
    if not all(d in t for d in f.removed):
        raise FlipNotApplicable(f"tiling does not contain {f.removed!r}")
    keep = [d for d in t.dominoes if d not in f.removed]
    return Tiling(tuple(keep) + tuple(f.placed))


def flip_edges(tilings: Sequence[Tiling]) -> list[tuple[int, int]]:
    """Edges (i, j), i < j, of the flip graph on an enumerated tiling list."""
    index = {t: k for k, t in enumerate(tilings)}
    edges = set()
    for k, t in enumerate(tilings):
        for f in find_flips(t):
            m = index.get(apply_flip(t, f))
            if m is None:
                raise InputError("tiling list is not closed under flips")
            edges.add((min(k, m), max(k, m)))
    return sorted(edges)


def components_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def flip_components(r: DuplexRegion, tilings: Sequence[Tiling] | None = None) -> list[list[int]]:
    """Connected components of the flip graph, as sorted index lists ordered by least index."""
    if tilings is None:
        tilings = list(enumerate_tilings(r))
    return components_from_edges(len(tilings), flip_edges(tilings))


def tiling_to_dict(base: BaseShape, t: Tiling) -> dict:
    return {"base": base_lines(base), "dominoes": t.to_json()}


def tiling_from_dict(data: dict) -> tuple[DuplexRegion, Tiling]:
    """Read a tiling document and validate it against its own base."""
    try:
        lines = data["base"]
        raw = data["dominoes"]
    except (KeyError, TypeError) as exc:
        raise InputError("tiling document needs 'base' and 'dominoes'") from exc
    if isinstance(lines, str):
        text = lines
    else:
        text = "\n".join(lines)
    region = build_duplex(parse_base(text))
    return region, validate_tiling(region, raw)
