import pytest
from helpers import euler_characteristic, fixed_polyominoes, free_polyominoes

from duplex_twist.errors import BadCharacter, Disconnected, EmptyBase, NotSimplyConnected
from duplex_twist.lattice import Cell, Cube
from duplex_twist.region import BaseShape, build_duplex, format_base, has_hole, parse_base, rectangle


def test_parse_square():
    b = parse_base("##\n##")
    assert b.cells == {Cell(0, 0), Cell(1, 0), Cell(0, 1), Cell(1, 1)}


@pytest.mark.parametrize(
    "text, err",
    [
        ("###\n#.#\n###", NotSimplyConnected),
        ("#.#", Disconnected),
        ("...\n..", EmptyBase),
        ("", EmptyBase),
        ("#x", BadCharacter),
        ("#\n.#", Disconnected),  # corner contact only
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_base(text)


def test_rows_map_to_y():
    b = parse_base("#.\n##\n")
    assert b.cells == {Cell(0, 0), Cell(0, 1), Cell(1, 1)}
    assert (b.width, b.height) == (2, 2)


@pytest.mark.parametrize("w, h, cubes", [(1, 1, 2), (2, 2, 8), (3, 3, 18)])
def test_build_duplex_sizes(w, h, cubes):
    r = build_duplex(rectangle(w, h))
    assert len(r.cubes) == cubes


def test_build_duplex_one_cell():
    r = build_duplex(parse_base("#"))
    assert r.cubes == {Cube(0, 0, 0), Cube(0, 0, 1)}


@pytest.mark.parametrize("n", range(1, 8))
def test_duplex_projects_back_to_base(n):
    for cells in fixed_polyominoes(n):
        try:
            base = BaseShape(frozenset(Cell(*c) for c in cells))
        except NotSimplyConnected:
            continue
        r = build_duplex(base)
        assert r.base is base
        assert {c.cell for c in r.cubes} == base.cells
        assert len(r.cubes) == 2 * len(base)
        assert all(c.z in (0, 1) for c in r.cubes)


@pytest.mark.parametrize("n", range(1, 8))
def test_format_parse_round_trip(n):
    for cells in fixed_polyominoes(n):
        try:
            base = BaseShape(frozenset(Cell(*c) for c in cells))
        except NotSimplyConnected:
            continue
        assert parse_base(format_base(base)) == base


def test_hole_check_agrees_with_euler_oracle():
    """All polyominoes up to 12 cells, holes included (up to symmetry, which
    preserves both sides of the comparison)."""
    checked = holes = 0
    for n in range(1, 13):
        for cells in free_polyominoes(n):
            pts = [Cell(*c) for c in cells]
            chi = euler_characteristic(cells)
            assert has_hole(pts) == (chi != 1), cells
            if chi != 1:
                holes += 1
                with pytest.raises(NotSimplyConnected):
                    BaseShape(frozenset(pts))
            checked += 1
    assert checked == sum(len(free_polyominoes(n)) for n in range(1, 13))
    assert holes > 0
