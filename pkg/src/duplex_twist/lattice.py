"""Integer lattice primitives: cubes, plane cells, axis directions, colors."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple


class Cube(NamedTuple):
    """Unit cube identified by its minimal corner; center is (x+1/2, y+1/2, z+1/2)."""

    x: int
    y: int
    z: int

    @property
    def cell(self) -> "Cell":
        return Cell(self.x, self.y)

    def shifted(self, d: "Direction", m: int = 1) -> "Cube":
        dx, dy, dz = d.value
        return Cube(self.x + m * dx, self.y + m * dy, self.z + m * dz)


class Cell(NamedTuple):
    """Unit square of the base, also a vertex of the plane graph."""

    x: int
    y: int

    def shifted(self, dx: int, dy: int) -> "Cell":
        return Cell(self.x + dx, self.y + dy)


class Direction(enum.Enum):
    PLUS_I = (1, 0, 0)
    MINUS_I = (-1, 0, 0)
    PLUS_J = (0, 1, 0)
    MINUS_J = (0, -1, 0)
    PLUS_K = (0, 0, 1)
    MINUS_K = (0, 0, -1)

    @property
    def vector(self) -> tuple[int, int, int]:
        return self.value

    @property
    def axis(self) -> str:
        return "ijk"[[abs(c) for c in self.value].index(1)]

    @property
    def sign(self) -> int:
        return sum(self.value)

    def __neg__(self) -> "Direction":
        x, y, z = self.value
        return Direction((-x, -y, -z))

    @classmethod
    def from_vector(cls, v) -> "Direction":
        return cls(tuple(v))

    @classmethod
    def parse(cls, text: str) -> "Direction":
        """Parse ``"+i"``, ``"-k"``, ``"j"`` and the like."""
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        name = text.lstrip("+-")
        if name not in ("i", "j", "k"):
            raise ValueError(f"not a direction: {text!r}")
        vec = [0, 0, 0]
        vec["ijk".index(name)] = sign
        return cls(tuple(vec))

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.axis


PLUS_I, MINUS_I = Direction.PLUS_I, Direction.MINUS_I
PLUS_J, MINUS_J = Direction.PLUS_J, Direction.MINUS_J
PLUS_K, MINUS_K = Direction.PLUS_K, Direction.MINUS_K
POSITIVE_AXES = (PLUS_I, PLUS_J, PLUS_K)


def cube_color(c: Cube) -> int:
    """+1 (black) iff x+y+z is even."""
    return 1 if (c.x + c.y + c.z) % 2 == 0 else -1


def vertex_color(v: Cell) -> int:
    """ccol: +1 for black vertices (x+y odd), -1 for white ones (x+y even)."""
    return 1 if (v.x + v.y) % 2 else -1


def _det(a, b, c) -> int:
    (a0, a1, a2), (b0, b1, b2), (c0, c1, c2) = a, b, c
    return (
        a0 * (b1 * c2 - b2 * c1)
        - a1 * (b0 * c2 - b2 * c0)
        + a2 * (b0 * c1 - b1 * c0)
    )


DET_TABLE = {
    (a, b, c): _det(a.value, b.value, c.value)
    for a in Direction
    for b in Direction
    for c in Direction
}


def det3(a: Direction, b: Direction, c: Direction) -> int:
    """Determinant of the 3x3 matrix with rows a, b, c."""
    return DET_TABLE[a, b, c]


class Quarter:
    """Exact multiple of 1/4, stored as its numerator."""

    __slots__ = ("numerator",)

    def __init__(self, numerator: int = 0):
        if not isinstance(numerator, int):
            raise TypeError("Quarter numerator must be an int")
        self.numerator = numerator

    @classmethod
    def from_int(cls, n: int) -> "Quarter":
        return cls(4 * n)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Quarter":
        f = Fraction(f)
        num = f * 4
        if num.denominator != 1:
            raise ValueError(f"{f} is not a multiple of 1/4")
        return cls(int(num))

    @property
    def is_integral(self) -> bool:
        return self.numerator % 4 == 0

    def to_int(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.numerator // 4

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 4)

    def _coerce(self, other) -> "Quarter | None":
        if isinstance(other, Quarter):
            return other
        if isinstance(other, int):
            return Quarter(4 * other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quarter(self.numerator + o.numerator)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quarter(self.numerator - o.numerator)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quarter(o.numerator - self.numerator)

    def __neg__(self) -> "Quarter":
        return Quarter(-self.numerator)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Quarter(self.numerator * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.numerator == o.numerator

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.numerator < o.numerator

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __bool__(self) -> bool:
        return self.numerator != 0

    def __repr__(self) -> str:
        return f"Quarter({self.numerator})"

    def __str__(self) -> str:
        return str(self.as_fraction())


ZERO = Quarter(0)
