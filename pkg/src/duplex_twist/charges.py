"""Winding numbers, weights and charges of sock cycles, and the polynomial P_t(q).

Points off the lattice are the half-integer points ``(a + 1/2, b + 1/2)``.
Internally every query point is handled in doubled coordinates so all
arithmetic stays in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .errors import LemmaViolation, PointOnCycle, VertexNotOnCycle
from .lattice import Cell, Quarter, vertex_color
from .sock import Cycle, Sock


class HalfPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def corner(cls, v: Cell, dx: int, dy: int) -> "HalfPoint":
        """``v + (dx/2, dy/2)`` for ``dx, dy`` in {-1, 1}."""
        return cls(Fraction(2 * v.x + dx, 2), Fraction(2 * v.y + dy, 2))


Point = Union[Cell, HalfPoint]
CORNERS = ((-1, -1), (1, -1), (1, 1), (-1, 1))


def _doubled(p) -> tuple[int, int]:
    if isinstance(p, Cell):
        return 2 * p.x, 2 * p.y
    x2, y2 = Fraction(p[0]) * 2, Fraction(p[1]) * 2
    if x2.denominator != 1 or y2.denominator != 1:
        raise ValueError(f"{p!r} is neither a lattice point nor a half-integer point")
    x2, y2 = int(x2), int(y2)
    if (x2 % 2) != (y2 % 2):
        # points like (1/2, 0) can sit on an edge
        raise ValueError(f"{p!r} mixes integer and half-integer coordinates")
    return x2, y2


def _wind2(gamma: Cycle, px2: int, py2: int) -> int:
    """Ray casting along +x in doubled coordinates."""
    total = 0
    for a, b, _ in gamma.edges():
        if a.x != b.x:
            continue
        y0 = min(a.y, b.y)
        if 2 * a.x > px2 and 2 * y0 <= py2 < 2 * y0 + 2:
            total += 1 if b.y > a.y else -1
    return total


def winding_number(gamma: Cycle, p: Point) -> int:
    """Signed count of the cycle's crossings of the ray from ``p`` towards +x.

    Upward edges count +1, downward ones -1; an edge from (x, y0) to
    (x, y0 +/- 1) is hit when x > p.x and y0 <= p.y < y0 + 1 for its lower
    end y0.
    """
    if isinstance(p, Cell) and p in gamma:
        raise PointOnCycle(f"{tuple(p)} lies on the cycle")
    return _wind2(gamma, *_doubled(p))


def _sector(dx2: int, dy2: int) -> int:
    """Index 0..7 of the direction (dx2, dy2): even on the axes, odd inside quadrants."""
    sx = (dx2 > 0) - (dx2 < 0)
    sy = (dy2 > 0) - (dy2 < 0)
    return {
        (1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
        (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7,
    }[(sx, sy)]


def winding_by_turning(gamma: Cycle, p: Point) -> int:
    """Winding number from the accumulated turning of the direction ``p -> vertex``.

    A unit edge that misses ``p`` moves this direction by at most one
    eighth-sector, so the signed sector steps add up to 8 times the winding.
    """
    if isinstance(p, Cell) and p in gamma:
        raise PointOnCycle(f"{tuple(p)} lies on the cycle")
    px2, py2 = _doubled(p)
    verts = gamma.vertices
    sectors = [_sector(2 * v.x - px2, 2 * v.y - py2) for v in verts]
    total = 0
    for k in range(len(sectors)):
        step = (sectors[(k + 1) % len(sectors)] - sectors[k] + 4) % 8 - 4
        assert -2 <= step <= 2
        total += step
    assert total % 8 == 0
    return total // 8


def angle(gamma: Cycle, v: Cell) -> Quarter:
    """Turning at ``v`` in counterclockwise laps: 0 straight, +1/4 left, -1/4 right."""
    if v not in gamma:
        raise VertexNotOnCycle(f"{tuple(v)} is not on the cycle")
    prev, nxt = gamma.neighbours(v)
    ix, iy = v.x - prev.x, v.y - prev.y
    ox, oy = nxt.x - v.x, nxt.y - v.y
    return Quarter(ix * oy - iy * ox)


def corner_windings(gamma: Cycle, v: Cell) -> list[int]:
    """Winding numbers at the four half-integer points diagonal to ``v``."""
    return [_wind2(gamma, 2 * v.x + dx, 2 * v.y + dy) for dx, dy in CORNERS]


def metric_weight(gamma: Cycle, v: Cell) -> Quarter:
    return Quarter(sum(corner_windings(gamma, v)))


def signed_area2(gamma: Cycle) -> int:
    """Twice the signed area enclosed by the cycle (shoelace)."""
    verts = gamma.vertices
    n = len(verts)
    return sum(verts[k].x * verts[(k + 1) % n].y - verts[(k + 1) % n].x * verts[k].y for k in range(n))


def is_counterclockwise(gamma: Cycle) -> bool:
    return signed_area2(gamma) > 0


def topological_weight_closed_form(gamma: Cycle, v: Cell) -> Quarter:
    if v not in gamma:
        return Quarter.from_int(winding_number(gamma, v))
    return Quarter(2 if is_counterclockwise(gamma) else -2)


def topological_weight(gamma: Cycle, v: Cell) -> Quarter:
    """Average of the *set* of corner windings (repeated values count once).

    Cross-checked against the closed form: the winding at ``v`` off the
    cycle, +1/2 or -1/2 on it depending on orientation.
    """
    values = set(corner_windings(gamma, v))
    num = 4 * sum(values)
    if num % len(values):
        raise LemmaViolation("3.1", tuple(v), f"set average of {sorted(values)} is not a quarter")
    weight = Quarter(num // len(values))
    expected = topological_weight_closed_form(gamma, v)
    if weight != expected:
        raise LemmaViolation("3.1", tuple(v), f"set average {weight} differs from closed form {expected}")
    return weight


def plane_window(gamma: Cycle, margin: int = 1):
    """Lattice points of the cycle's bounding box grown by ``margin``.

    Every winding, weight and angle vanishes outside it.
    """
    x0, y0, x1, y1 = gamma.bounds
    for x in range(x0 - margin, x1 + margin + 1):
        for y in range(y0 - margin, y1 + margin + 1):
            yield Cell(x, y)


@lru_cache(maxsize=4096)
def enclosed_windings(gamma: Cycle) -> dict[Cell, int]:
    """Nonzero windings of the cycle around lattice points off it."""
    out = {}
    for v in plane_window(gamma, 0):
        if v not in gamma:
            w = _wind2(gamma, 2 * v.x, 2 * v.y)
            if w:
                out[v] = w
    return out


def charge_interior(gamma: Cycle) -> int:
    """Sum of ccol(v) * wind(gamma, v) over lattice points v off the cycle."""
    return sum(vertex_color(v) * w for v, w in enclosed_windings(gamma).items())


def charge_boundary(gamma: Cycle) -> Quarter:
    total = Quarter(0)
    for v in gamma.vertices:
        total += angle(gamma, v) * vertex_color(v)
    return total


class LaurentPoly:
    """Integer Laurent polynomial in q, stored as exponent -> nonzero coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __call__(self, q) -> Fraction:
        if q == 1:
            return Fraction(sum(self._terms.values()))
        q = Fraction(q)
        return sum((c * q**e for e, c in self._terms.items()), Fraction(0))

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self._terms.items()})

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def p_polynomial(s: Sock) -> LaurentPoly:
    """P(q) = sum over base vertices v of ccol(v) q^(sum of wind(gamma, v), gamma not through v)."""
    exponent = {v: 0 for v in s.cells}
    for gamma in s.cycles:
        for v, w in enclosed_windings(gamma).items():
            if v in exponent:
                exponent[v] += w
    terms: dict[int, int] = {}
    for v, e in exponent.items():
        terms[e] = terms.get(e, 0) + vertex_color(v)
    return LaurentPoly(terms)


def p_derivative_at_one(p: LaurentPoly) -> int:
    return sum(e * c for e, c in p.terms.items())


@dataclass
class CycleLemmaReport:
    """Outcome of the per-cycle identities, keyed by check name.

    Keys: ``"3.1"`` (topological weights sum to the enclosed charge),
    ``"3.2"`` (metric weights are color-balanced), ``"3.3"`` (weight
    difference equals the angle), ``"3.4"`` (boundary charge equals enclosed
    charge), ``"turning"`` (angles sum to +1 or -1) and ``"color"``
    (vertex colors along the cycle cancel).
    """

    cycle: Cycle
    charge_interior: int
    charge_boundary: Quarter
    total_turning: Quarter
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


LEMMA_KEYS = ("3.1", "3.2", "3.3", "3.4", "turning", "color")


@lru_cache(maxsize=4096)
def _cycle_lemmas(gamma: Cycle) -> CycleLemmaReport:
    interior = charge_interior(gamma)
    boundary = charge_boundary(gamma)
    turning = sum((angle(gamma, v) for v in gamma.vertices), Quarter(0))
    report = CycleLemmaReport(gamma, interior, boundary, turning)

    def record(key: str, ok: bool, detail: str = "") -> None:
        report.checks[key] = report.checks.get(key, True) and ok
        if not ok:
            report.failures.append(f"{key}: {detail}")

    metric_sum = Quarter(0)
    top_sum = Quarter(0)
    for v in plane_window(gamma):
        col = vertex_color(v)
        metric = metric_weight(gamma, v)
        try:
            top = topological_weight(gamma, v)
        except LemmaViolation as exc:
            record("3.1", False, str(exc))
            continue
        metric_sum += metric * col
        top_sum += top * col
        expected = angle(gamma, v) if v in gamma else Quarter(0)
        record("3.3", top - metric == expected, f"at {tuple(v)}: {top} - {metric} != {expected}")

    record("3.2", metric_sum == 0, f"sum of metric weights times color is {metric_sum}")
    record("3.1", top_sum == interior, f"sum of topological weights {top_sum} != {interior}")
    record("3.4", boundary == interior, f"boundary charge {boundary} != interior {interior}")
    record("turning", turning in (Quarter(4), Quarter(-4)), f"total turning {turning}")
    record("color", sum(vertex_color(v) for v in gamma.vertices) == 0, "colors do not cancel")
    return report


def verify_cycle_lemmas(gamma: Cycle, strict: bool = True) -> CycleLemmaReport:
    """Evaluate every per-cycle identity exactly.

    With ``strict`` the first failing check raises :class:`LemmaViolation`.
    """
    report = _cycle_lemmas(gamma)
    if strict and not report.ok:
        which = next(k for k in LEMMA_KEYS if not report.checks.get(k, True))
        raise LemmaViolation(which, gamma.vertices, "; ".join(report.failures))
    return report
