"""SVG and ASCII pictures of tilings and socks.

Cell (x, y) is drawn with y growing down the page, so pictures read in the
same row order as the base file. Output is byte-stable: elements are
emitted in sorted order and no timestamps or ids are generated.
"""

from __future__ import annotations

from fractions import Fraction

from .charges import angle, metric_weight, topological_weight
from .lattice import Cell, Quarter, vertex_color
from .region import BaseShape
from .sock import Sock, project_sock, resolve_trivial_cycles
from .tiling import Tiling

CELL = 40
GAP = 30
MARGIN = 20
LABEL = 18

AXIS_FILL = {"i": "#8fb8de", "j": "#f2b880", "k": "#bbbbbb"}
FLOOR_STROKE = {0: "#1f4e79", 1: "#a33b20"}


def _fmt(v) -> str:
    if isinstance(v, float):
        v = round(v, 3)
        if v == int(v):
            v = int(v)
    return str(v)


class Svg:
    """Minimal SVG builder; attributes are written in the order given."""

    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.defs: list[str] = []
        self.items: list[str] = []

    @staticmethod
    def _attrs(attrs: dict) -> str:
        return " ".join(f'{k.replace("_", "-")}="{_fmt(v)}"' for k, v in attrs.items())

    def add(self, tag: str, text: str | None = None, **attrs) -> None:
        a = self._attrs(attrs)
        if text is None:
            self.items.append(f"<{tag} {a}/>")
        else:
            self.items.append(f"<{tag} {a}>{text}</{tag}>")

    def to_string(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" height="{self.height}" '
            f'viewBox="0 0 {self.width} {self.height}">'
        )
        body = [head]
        if self.defs:
            body.append("<defs>")
            body.extend(self.defs)
            body.append("</defs>")
        body.extend(self.items)
        body.append("</svg>")
        return "\n".join(body) + "\n"


ARROW_DEFS = [
    f'<marker id="arrow{f}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" '
    f'orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{FLOOR_STROKE[f]}"/></marker>'
    for f in (0, 1)
]


class _Frame:
    """Maps cells of one panel to page coordinates."""

    def __init__(self, base: BaseShape, left: float, top: float):
        self.x0, self.y0, _, _ = base.bounds
        self.left = left
        self.top = top

    def corner(self, c: Cell) -> tuple[float, float]:
        return self.left + (c.x - self.x0) * CELL, self.top + (c.y - self.y0) * CELL

    def center(self, c: Cell) -> tuple[float, float]:
        x, y = self.corner(c)
        return x + CELL / 2, y + CELL / 2

    def point(self, x, y) -> tuple[float, float]:
        """Page position of the center of the (possibly fractional) cell (x, y)."""
        return (
            self.left + (float(x) - self.x0) * CELL + CELL / 2,
            self.top + (float(y) - self.y0) * CELL + CELL / 2,
        )


def _panel_size(base: BaseShape) -> tuple[int, int]:
    return base.width * CELL, base.height * CELL


def _draw_base(svg: Svg, base: BaseShape, frame: _Frame) -> None:
    for c in base.sorted_cells():
        x, y = frame.corner(c)
        svg.add("rect", x=x, y=y, width=CELL, height=CELL, fill="#ffffff", stroke="#cccccc", stroke_width=1)


def _draw_floor(svg: Svg, base: BaseShape, t: Tiling, floor: int, frame: _Frame, title: str) -> None:
    svg.add("text", title, x=frame.left, y=frame.top - 6, font_family="sans-serif", font_size=12)
    _draw_base(svg, base, frame)
    inset = 5
    for d in t.dominoes:
        if d.is_vertical:
            cx, cy = frame.center(d.a.cell)
            svg.add("circle", cx=cx, cy=cy, r=CELL / 2 - inset, fill=AXIS_FILL["k"], stroke="#555555", stroke_width=1)
            continue
        if d.a.z != floor:
            continue
        ax, ay = frame.corner(d.a.cell)
        bx, by = frame.corner(d.b.cell)
        x, y = min(ax, bx) + inset, min(ay, by) + inset
        w = abs(ax - bx) + CELL - 2 * inset
        h = abs(ay - by) + CELL - 2 * inset
        svg.add(
            "rect", x=x, y=y, width=w, height=h, rx=4,
            fill=AXIS_FILL[d.axis.axis], stroke=FLOOR_STROKE[floor], stroke_width=1.5,
        )


def tiling_svg(base: BaseShape, t: Tiling) -> str:
    """Both floors side by side; vertical dominoes appear as discs on each."""
    pw, ph = _panel_size(base)
    svg = Svg(2 * MARGIN + 2 * pw + GAP, 2 * MARGIN + LABEL + ph)
    for floor in (0, 1):
        frame = _Frame(base, MARGIN + floor * (pw + GAP), MARGIN + LABEL)
        _draw_floor(svg, base, t, floor, frame, f"floor {floor}")
    return svg.to_string()


def _draw_sock(svg: Svg, base: BaseShape, s: Sock, frame: _Frame, annotate: str = "none") -> None:
    _draw_base(svg, base, frame)
    if annotate == "weights":
        # the four diagonal half-integer neighbours of every cycle vertex
        points = sorted({(Fraction(2 * v.x + dx, 2), Fraction(2 * v.y + dy, 2))
                         for c in s.cycles for v in c.vertices
                         for dx in (-1, 1) for dy in (-1, 1)})
        for px, py in points:
            cx, cy = frame.point(px, py)
            svg.add("circle", cx=cx, cy=cy, r=2.5, fill="#999999")
    for c in s.cycles:
        for a, b, f in c.edges():
            ax, ay = frame.center(a)
            bx, by = frame.center(b)
            # stop short of the head vertex so the arrowhead stays visible
            ex, ey = ax + (bx - ax) * 0.8, ay + (by - ay) * 0.8
            sx, sy = ax + (bx - ax) * 0.2, ay + (by - ay) * 0.2
            svg.add(
                "line", x1=sx, y1=sy, x2=ex, y2=ey, stroke=FLOOR_STROKE[f], stroke_width=2,
                marker_end=f"url(#arrow{f})",
            )
        for v in c.vertices:
            cx, cy = frame.center(v)
            svg.add("circle", cx=cx, cy=cy, r=3, fill="#333333")
    for j in sorted(s.jewels):
        cx, cy = frame.center(j)
        fill = "#000000" if vertex_color(j) == 1 else "#ffffff"
        svg.add("circle", cx=cx, cy=cy, r=7, fill=fill, stroke="#000000", stroke_width=1.5)
    if annotate == "angles":
        for c in s.cycles:
            for v in c.vertices:
                a = angle(c, v)
                if a:
                    cx, cy = frame.center(v)
                    svg.add("text", _quarter_text(a), x=cx + 5, y=cy - 5, font_family="sans-serif", font_size=10)
    if annotate == "weights":
        for v in sorted(base.cells):
            top = sum((topological_weight(c, v) for c in s.cycles), Quarter(0))
            met = sum((metric_weight(c, v) for c in s.cycles), Quarter(0))
            if top or met:
                x, y = frame.corner(v)
                svg.add(
                    "text", f"{_quarter_text(top)} | {_quarter_text(met)}",
                    x=x + 2, y=y + CELL - 3, font_family="sans-serif", font_size=8,
                )


def _quarter_text(q: Quarter) -> str:
    return str(q.as_fraction()).replace("-", "−")


def sock_svg(base: BaseShape, s: Sock, annotate: str = "none") -> str:
    """Cycles as arrows coloured by floor; jewels as discs coloured by vertex color.

    ``annotate`` may add angle labels (``"angles"``) or, per vertex, the
    topological and metric weights with the diagonal points in grey
    (``"weights"``).
    """
    pw, ph = _panel_size(base)
    svg = Svg(2 * MARGIN + pw, 2 * MARGIN + LABEL + ph)
    svg.defs.extend(ARROW_DEFS)
    svg.add("text", "sock", x=MARGIN, y=MARGIN + LABEL - 6, font_family="sans-serif", font_size=12)
    _draw_sock(svg, base, s, _Frame(base, MARGIN, MARGIN + LABEL), annotate)
    return svg.to_string()


def trivial_cycle_figure(base: BaseShape, t: Tiling) -> str:
    """Three panels: ``t``, ``t`` with trivial cycles flipped into jewels, and their sock."""
    pw, ph = _panel_size(base)
    floor_pair = 2 * pw + GAP
    width = 2 * MARGIN + 2 * floor_pair + pw + 2 * GAP * 2
    svg = Svg(width, 2 * MARGIN + 2 * LABEL + ph)
    svg.defs.extend(ARROW_DEFS)
    top = MARGIN + 2 * LABEL
    left = MARGIN
    for title, tiling in (("tiling", t), ("trivial cycles flipped", resolve_trivial_cycles(t))):
        svg.add("text", title, x=left, y=MARGIN + 10, font_family="sans-serif", font_size=13)
        for floor in (0, 1):
            frame = _Frame(base, left + floor * (pw + GAP), top)
            _draw_floor(svg, base, tiling, floor, frame, f"floor {floor}")
        left += floor_pair + 2 * GAP
    svg.add("text", "sock", x=left, y=MARGIN + 10, font_family="sans-serif", font_size=13)
    _draw_sock(svg, base, project_sock(t), _Frame(base, left, top))
    return svg.to_string()


def _ascii_grid(base: BaseShape) -> tuple[list[list[str]], int, int]:
    x0, y0, _, _ = base.bounds
    grid = [[" "] * (2 * base.width - 1) for _ in range(2 * base.height - 1)]
    return grid, x0, y0


def _floor_ascii(base: BaseShape, t: Tiling, floor: int) -> list[str]:
    grid, x0, y0 = _ascii_grid(base)
    for d in t.dominoes:
        if d.is_vertical:
            c = d.a.cell
            grid[2 * (c.y - y0)][2 * (c.x - x0)] = "o"
        elif d.a.z == floor:
            a, b = d.a.cell, d.b.cell
            grid[2 * (a.y - y0)][2 * (a.x - x0)] = "+"
            grid[2 * (b.y - y0)][2 * (b.x - x0)] = "+"
            grid[a.y - y0 + b.y - y0][a.x - x0 + b.x - x0] = "-" if a.y == b.y else "|"
    return ["".join(row).rstrip() for row in grid]


def tiling_ascii(base: BaseShape, t: Tiling) -> str:
    """Floors side by side: ``o`` vertical domino, ``+`` linked by ``-``/``|`` for horizontal ones."""
    width = 2 * base.width - 1
    left, right = _floor_ascii(base, t, 0), _floor_ascii(base, t, 1)
    lines = ["floor 0".ljust(max(width, 7)) + "   floor 1"]
    for a, b in zip(left, right):
        lines.append((a.ljust(max(width, 7)) + "   " + b).rstrip())
    return "\n".join(lines) + "\n"


def sock_ascii(base: BaseShape, s: Sock) -> str:
    """Jewels ``*``, cycle vertices ``o``, edges ``>``/``<``/``v``/``^`` (``v`` points down the page)."""
    grid, x0, y0 = _ascii_grid(base)
    for c in base.cells:
        grid[2 * (c.y - y0)][2 * (c.x - x0)] = "."
    for j in s.jewels:
        grid[2 * (j.y - y0)][2 * (j.x - x0)] = "*"
    for cyc in s.cycles:
        for a, b, _ in cyc.edges():
            grid[2 * (a.y - y0)][2 * (a.x - x0)] = "o"
            if a.y == b.y:
                glyph = ">" if b.x > a.x else "<"
            else:
                glyph = "v" if b.y > a.y else "^"
            grid[a.y - y0 + b.y - y0][a.x - x0 + b.x - x0] = glyph
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def render(base: BaseShape, t: Tiling, fmt: str = "svg", view: str = "tiling", annotate: str = "none") -> str:
    if view not in ("tiling", "sock"):
        raise ValueError(f"unknown view {view!r}")
    if fmt == "svg":
        if view == "tiling":
            return tiling_svg(base, t)
        return sock_svg(base, project_sock(t), annotate)
    if fmt == "ascii":
        if view == "tiling":
            return tiling_ascii(base, t)
        return sock_ascii(base, project_sock(t))
    raise ValueError(f"unknown format {fmt!r}")
