import pytest

from heckecells import celldata as cd
from heckecells.klbase import default_table
from heckecells.weylgroup import descents, inverse, parse_word


def test_realize_examples(words):
    assert cd.realize(cd.e_coords(1, 1, 0, 0)) == words("10")
    assert cd.realize(cd.f_coords(1, 0, 1)) == words("13")
    assert cd.realize(cd.d_coords(4, 0, 0, 4)) == words("1201321")
    assert cd.realize(cd.d_finite(4, 4, 0)) == words("121")


def test_locate_examples(words):
    assert cd.locate(words("13")) == cd.f_coords(1, 0, 1)
    assert cd.locate(words("121")) == cd.d_finite(4, 4, 0)
    assert cd.locate(words("2")) is None
    assert cd.locate(words("")) is None
    assert cd.locate(words("0120")).cell == "D"


def test_counts():
    assert len(cd.enumerate_cell("E", 0)) == 72
    assert len(cd.enumerate_cell("F", 0)) == 64
    for cell, n in cd.LEFT_CELL_COUNTS.items():
        elems = cd.enumerate_cell(cell, 1)
        assert {c.j for c, _ in elems} == set(range(1, n + 1))
        assert {c.i for c, _ in elems} == set(range(1, n + 1))


def test_a_values():
    assert cd.a_value("D") == 3
    assert cd.a_value("E") == cd.a_value("F") == 2
    with pytest.raises(cd.CellError):
        cd.a_value("Z")


def test_left_cell_representatives(words):
    assert cd.left_cell_representative("E", 3) == words("0123")
    for cell in cd.SUPPORTED:
        for j in range(1, cd.LEFT_CELL_COUNTS[cell] + 1):
            c = cd.locate(cd.left_cell_representative(cell, j))
            assert c.cell == cell and cd.left_cell_of(c) == j


@pytest.mark.parametrize("cell", cd.SUPPORTED)
def test_enumeration_is_injective_and_locatable(cell):
    elems = cd.enumerate_cell(cell, 1)
    assert len({w for _, w in elems}) == len(elems)
    for c, w in elems:
        assert cd.locate(w) == c
        assert cd.CellCoords.from_json(c.to_json()) == c


@pytest.mark.parametrize("cell", cd.SUPPORTED)
def test_transpose_is_inverse(cell):
    for c, w in cd.enumerate_cell(cell, 1):
        t = cd.transpose(c)
        assert cd.realize(t) == inverse(w)
        assert cd.transpose(t) == c


@pytest.mark.parametrize("cell", cd.SUPPORTED)
def test_descent_constancy(cell):
    right, left = {}, {}
    for c, w in cd.enumerate_cell(cell, 2):
        right.setdefault(c.j, set()).add(descents(w, "right"))
        left.setdefault(c.i, set()).add(descents(w, "left"))
    assert all(len(v) == 1 for v in right.values())
    assert all(len(v) == 1 for v in left.values())


@pytest.mark.parametrize("cell", cd.SUPPORTED)
def test_one_distinguished_involution_per_left_cell(cell):
    t = default_table()
    a = cd.a_value(cell)
    found = {}
    for c, w in cd.enumerate_cell(cell, 1):
        if t.is_distinguished(w, a):
            found.setdefault(c.j, []).append(w)
    assert sorted(found) == list(range(1, cd.LEFT_CELL_COUNTS[cell] + 1))
    assert all(len(v) == 1 for v in found.values())


def test_d_finite_row_six_avoids_longest_parabolic(words):
    w = cd.realize(cd.d_finite(6, 4, 1))
    assert w != words("012012")
    assert cd.locate(words("012012")) is None


def test_bad_coordinates():
    with pytest.raises(cd.CellError):
        cd.e_coords(7, 1, 0)
    with pytest.raises(cd.CellError):
        cd.d_finite(4, 6, 0)
