"""Effects along a direction, pretwists and the twist of a tiling."""

from __future__ import annotations

from .errors import NonIntegralTwist, PretwistMismatch
from .lattice import DET_TABLE, POSITIVE_AXES, ZERO, Direction, Quarter, det3
from .tiling import Domino, Tiling, sign_vector


def in_shade(d0: Domino, d1: Domino, u: Direction) -> bool:
    """Whether ``d1`` meets the open ``u``-shade of ``d0``.

    On the cube lattice this means a cube of ``d1`` sits at ``c0 + m*u`` for
    a cube ``c0`` of ``d0`` and some integer ``m >= 1``.
    """
    ux, uy, uz = u.value
    for x0, y0, z0 in (d0.a, d0.b):
        for x1, y1, z1 in (d1.a, d1.b):
            dx, dy, dz = x1 - x0, y1 - y0, z1 - z0
            # (dx, dy, dz) must be a positive multiple of u
            m = dx * ux + dy * uy + dz * uz
            if m >= 1 and (dx, dy, dz) == (m * ux, m * uy, m * uz):
                return True
    return False


def tau(d0: Domino, d1: Domino, u: Direction) -> Quarter:
    """Effect of ``d1`` on ``d0`` along ``u``: det(v(d1), v(d0), u)/4 inside the shade."""
    if not in_shade(d0, d1, u):
        return ZERO
    return Quarter(det3(sign_vector(d1), sign_vector(d0), u))


def pretwist_pairs(t: Tiling, u: Direction) -> Quarter:
    """Reference double sum over all ordered pairs of distinct dominoes."""
    total = 0
    for d0 in t.dominoes:
        for d1 in t.dominoes:
            if d0 != d1:
                total += tau(d0, d1, u).numerator
    return Quarter(total)


_POSITIVE = {u: Direction(tuple(abs(c) for c in u.value)) for u in Direction}


def shaded_dominoes(t: Tiling, d0: Domino, u: Direction) -> set[Domino]:
    """Dominoes of ``t`` meeting the open ``u``-shade of ``d0``, found by walking cube rays."""
    cover = t.cover
    (lx, ly, lz), (hx, hy, hz) = t.bounds
    ux, uy, uz = u.value
    hit = set()
    for x, y, z in d0.cubes:
        x, y, z = x + ux, y + uy, z + uz
        # non-convex bases leave gaps along a line, so walk to the bounding box
        while lx <= x <= hx and ly <= y <= hy and lz <= z <= hz:
            d = cover.get((x, y, z))
            if d is not None and d is not d0:
                hit.add(d)
            x, y, z = x + ux, y + uy, z + uz
    return hit


def pretwist(t: Tiling, u: Direction) -> Quarter:
    """T^u(t), the sum of tau over ordered pairs of distinct dominoes.

    Only pairs related by the shade contribute, so the walk visits those
    directly instead of all pairs.
    """
    total = 0
    along = _POSITIVE[u]
    for d0 in t.dominoes:
        if d0.axis is along:
            continue
        v0 = d0.sign
        for d1 in shaded_dominoes(t, d0, u):
            total += DET_TABLE[d1.sign, v0, u]
    return Quarter(total)


def pretwists(t: Tiling) -> dict[Direction, Quarter]:
    return {u: pretwist(t, u) for u in POSITIVE_AXES}


def twist(t: Tiling) -> int:
    """Tw(t), checked as the common value of the +i, +j and +k pretwists."""
    values = pretwists(t)
    first = values[POSITIVE_AXES[0]]
    if any(v != first for v in values.values()):
        shown = ", ".join(f"T^{u} = {v}" for u, v in values.items())
        raise PretwistMismatch(f"pretwists disagree: {shown}")
    if not first.is_integral:
        raise NonIntegralTwist(f"twist {first} is not an integer")
    return first.to_int()
