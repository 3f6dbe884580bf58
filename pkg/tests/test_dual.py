import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualrank import DualMatrix, RealMatrix, dinverse, dmpgi_direct, dtranspose, penrose_profile
from dualrank.dual import satisfies
from dualrank.errors import DimensionError, NotInvertibleError
from dualrank.sampling import dual_invertible, dual_matrix

from strategies import consistent_duals, dual_matrices
from worked import A2, A3, A4, A5, EX2, EX2_DMPGI, M


def test_shape_mismatch():
    with pytest.raises(DimensionError):
        DualMatrix([[1, 2]], [[1], [2]])


def test_dual_part_defaults_to_zero():
    a = DualMatrix([[1, 2]])
    assert a.dual == RealMatrix.zeros(1, 2) and a.is_real()


def test_worked_factors_multiply_back():
    assert DualMatrix(A2, A3) @ DualMatrix(A4, A5) == EX2


def test_identity_and_nilpotent_products():
    x = DualMatrix([[1, 2], [3, 4]], [[0, 1], [1, 0]])
    assert DualMatrix.identity(2) @ x == x
    e = DualMatrix(RealMatrix.zeros(2, 2), M([1, 2], [3, 4]))
    assert (e @ e).is_zero()


def test_transpose():
    left = DualMatrix(A2, A3)
    t = dtranspose(left)
    assert t.shape == (2, 3) and t.real == A2.T and t.dual == A3.T
    s = DualMatrix([[1, 2], [2, 0]], [[0, 5], [5, 1]])
    assert s.T == s


def test_dinverse():
    n = M([0, 1], [0, 0])
    eye = RealMatrix.identity(2)
    assert dinverse(DualMatrix(eye, n)) == DualMatrix(eye, -n)
    a0 = M([2, 1], [1, 1])
    assert dinverse(DualMatrix(a0)) == DualMatrix(M([1, -1], [-1, 2]))
    with pytest.raises(NotInvertibleError):
        dinverse(DualMatrix([[1, 1], [1, 1]], [[1, 0], [0, 1]]))


def test_dinverse_random(rng):
    for _ in range(10):
        a = dual_invertible(rng, 3)
        x = dinverse(a)
        assert a @ x == DualMatrix.identity(3) == x @ a


def test_profiles():
    assert penrose_profile(EX2, EX2_DMPGI) == {1, 2, 3, 4}
    assert penrose_profile(EX2, EX2_DMPGI).is_mpgi()
    eye = DualMatrix.identity(2)
    assert penrose_profile(eye, eye) == {1, 2, 3, 4}
    assert penrose_profile(EX2, DualMatrix.zeros(3, 3)) == {2, 3, 4}


def test_equation_two_is_xax_equals_x():
    # X = 2I satisfies neither X A X = X nor X A X = A for A = I.
    a = DualMatrix.identity(2)
    assert 2 not in penrose_profile(a, DualMatrix([[2, 0], [0, 2]]))
    assert satisfies(EX2, EX2_DMPGI, 2)


def test_profile_shape_error():
    with pytest.raises(DimensionError):
        penrose_profile(DualMatrix([[1, 2]]), DualMatrix([[1, 2]]))


@st.composite
def chain(draw):
    a = draw(dual_matrices())
    b = draw(dual_matrices(a.cols))
    c = draw(dual_matrices(b.cols))
    return a, b, c


@given(chain())
def test_associative_and_transpose_reverses(abc):
    a, b, c = abc
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).T == b.T @ a.T


@given(chain(), st.data())
def test_bilinear(abc, data):
    a, b, _ = abc
    b2 = data.draw(dual_matrices(b.rows, b.cols))
    assert a @ (b + b2) == a @ b + a @ b2


@given(consistent_duals())
def test_dmpgi_has_full_profile(a):
    assert penrose_profile(a, dmpgi_direct(a)) == {1, 2, 3, 4}


def test_uniqueness_against_perturbations(rng):
    # Moving any single entry of either part must break some equation.
    for _ in range(30):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = dual_matrix(rng, m, n, rng.randint(1, min(m, n)), consistent=True)
        x = dmpgi_direct(a)
        i, j = rng.randrange(n), rng.randrange(m)
        bump = [[1 if (p, q) == (i, j) else 0 for q in range(m)] for p in range(n)]
        for other in (DualMatrix(x.real, x.dual + RealMatrix(bump)), DualMatrix(x.real + RealMatrix(bump), x.dual)):
            assert not penrose_profile(a, other).is_mpgi()
