import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualrank import RealMatrix, sylvester_consistent, sylvester_solve
from dualrank.errors import ConsistencyError, DimensionError
from dualrank.matrix import pinv
from dualrank.sampling import int_matrix, rank_matrix

from strategies import real_matrices
from worked import A2, A3, A3_PRINTED, A4, A5, EX2, EX2_P, M


def test_inconsistent_example():
    w = sylvester_consistent(M([1], [0]), M([1, 0]), M([1, 1], [1, 1]))
    assert not w
    assert w.residual == M([0, 0], [0, 1])
    with pytest.raises(ConsistencyError) as info:
        sylvester_solve(M([1], [0]), M([1, 0]), M([1, 1], [1, 1]))
    assert info.value.residual == M([0, 0], [0, 1])


def test_worked_system_consistent():
    assert sylvester_consistent(A2, A4, EX2.dual)


def test_worked_solution_with_parameter():
    sol = sylvester_solve(A2, A4, EX2.dual, u=EX2_P)
    assert sol.X == A5
    assert sol.Y == A3
    assert A2 @ sol.X + sol.Y @ A4 == EX2.dual


def test_printed_y_does_not_solve_the_system():
    # Only the (0, 0) entry differs, and it breaks the first row.
    assert A2 @ A5 + A3_PRINTED @ A4 != EX2.dual
    assert A3_PRINTED - A3 == M([-1, 0], [0, 0], [0, 0])


def test_zero_right_hand_side():
    a, b = M([1, 2], [0, 1], [1, 1]), M([1, 0, 1], [0, 1, 1])
    u = M([1, -1], [2, 0])
    sol = sylvester_solve(a, b, RealMatrix.zeros(3, 3), u=u)
    assert sol.X == u @ b and sol.Y == -(a @ u)
    assert sylvester_consistent(a, b, RealMatrix.zeros(3, 3))


def test_shape_errors():
    with pytest.raises(DimensionError):
        sylvester_consistent(M([1], [0]), M([1, 0]), M([1, 1]))
    with pytest.raises(DimensionError):
        sylvester_solve(A2, A4, EX2.dual, u=M([1]))


@st.composite
def consistent_systems(draw):
    rng = random.Random(draw(st.integers(0, 2**32)))
    m, n, p, q = (rng.randint(1, 4) for _ in range(4))
    a = rank_matrix(rng, m, p, rng.randint(0, min(m, p)))
    b = rank_matrix(rng, q, n, rng.randint(0, min(q, n)))
    c = a @ int_matrix(rng, p, n) + int_matrix(rng, m, q) @ b
    params = dict(u=int_matrix(rng, p, q), v=int_matrix(rng, p, n), w=int_matrix(rng, m, q))
    return a, b, c, params


@given(consistent_systems())
def test_random_solutions_substitute_back(system):
    a, b, c, params = system
    assert sylvester_consistent(a, b, c)
    sol = sylvester_solve(a, b, c, **params)
    assert a @ sol.X + sol.Y @ b == c


@given(real_matrices(), real_matrices(), st.data())
def test_consistency_matches_solvability(a, b, data):
    c = data.draw(real_matrices(a.rows, b.cols))
    w = sylvester_consistent(a, b, c)
    if w:
        sol = sylvester_solve(a, b, c)
        assert a @ sol.X + sol.Y @ b == c
    else:
        # The residual is invariant under any A X + Y B shift, so it is a certificate.
        left = RealMatrix.identity(a.rows) - a @ pinv(a)
        right = RealMatrix.identity(b.cols) - pinv(b) @ b
        assert left @ c @ right == w.residual and not w.residual.is_zero()
