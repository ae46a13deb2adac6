from hypothesis import given
from hypothesis import strategies as st

from heckecells import celldata as cd
from heckecells.reptheory import (IrrLabel, RepElement, RepMatrix, dual, finite_family_colouring, mat_mul, pi,
                                  tensor, verify_theorem)

V = RepElement.irr
rep = st.dictionaries(st.builds(IrrLabel, st.integers(0, 1), st.integers(0, 4)), st.integers(1, 3),
                      max_size=3).map(RepElement)


def test_clebsch_gordan_examples():
    assert tensor(V(1), V(1)) == V(0) + V(2)
    assert tensor(V(3), V(0)) == V(3)
    assert tensor(V(1, 1), V(2, 1)) == V(1) + V(3)


def test_matrix_examples():
    a = RepMatrix.unit(6, 1, 2, 1)
    b = RepMatrix.unit(6, 2, 3, 1)
    assert mat_mul(a, b) == RepMatrix(6, {(1, 3): V(0) + V(2)})
    assert mat_mul(a, a) == RepMatrix(6)
    assert dual(RepMatrix.unit(6, 2, 5, 2, 1)) == RepMatrix.unit(6, 5, 2, 2, 1)


def test_pi_examples():
    assert pi(cd.e_coords(2, 3, 1, 0)) == RepMatrix.unit(6, 2, 3, 1)
    assert pi(cd.d_coords(1, 0, 0, 1)) == RepMatrix.unit(12, 1, 1, 0)
    assert pi(cd.d_coords(4, 0, 0, 4)) == RepMatrix.unit(12, 4, 4, 2)
    assert pi(cd.d_coords(1, 0, 0, 4)) == RepMatrix.unit(12, 1, 4, 1)


@given(rep, rep, rep)
def test_tensor_ring_laws(a, b, c):
    assert tensor(a, b) == tensor(b, a)
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))
    assert tensor(a, b + c) == tensor(a, b) + tensor(a, c)
    assert tensor(a, b).dim() == a.dim() * b.dim()
    assert tensor(a, b).is_effective()


def test_colouring_two_colours_everything():
    col = finite_family_colouring()
    fam = [c for c, _ in cd.enumerate_cell("D", 0) if c.family != "infinite"]
    assert set(col) == set(fam)
    assert sorted(set(col.values())) == [0, 1]
    assert col[cd.d_finite(4, 4, 0)] == 0
    assert col[cd.d_finite(4, 4, 1)] == 1


def test_theorems_small():
    for which in ("E", "F", "D"):
        r = verify_theorem(which, 1, 10, 3)
        assert r["pass"], which
        assert r["injective"] and r["duality"]
