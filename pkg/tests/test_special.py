import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualrank import (
    DualMatrix,
    DualRankFactors,
    RealMatrix,
    decompose,
    dmpgi_direct,
    ep_via_decomposition,
    ep_via_factors,
    ep_via_parts,
    factor_commute_is_identity,
    idempotent_characterization,
    idempotent_decompose,
    idempotent_dmpgi,
    is_dual_ep,
    is_dual_idempotent,
    verify_decomposition,
)
from dualrank.errors import DimensionError, DMPGIError, PreconditionError
from dualrank.sampling import (
    dual_ep,
    dual_idempotent,
    dual_matrix,
    dual_real_ep_only,
    dual_symmetric,
    invertible_matrix,
    real_projector,
)

from strategies import consistent_duals, dual_matrices
from worked import EX1, EX2, EX2_P, M

SYM_IDEM = DualMatrix(M([1, 0], [0, 0]), M([0, 1], [1, 0]))


def test_idempotent_examples():
    eye = DualMatrix.identity(2)
    cases = [(eye, True), (DualMatrix(RealMatrix.identity(2), RealMatrix.identity(2)), False), (SYM_IDEM, True)]
    for a, expected in cases:
        assert is_dual_idempotent(a) is expected
        assert idempotent_characterization(a) is expected


def test_square_required():
    with pytest.raises(DimensionError):
        is_dual_idempotent(DualMatrix([[1, 0]]))
    with pytest.raises(DimensionError):
        idempotent_characterization(DualMatrix([[1, 0]]))
    with pytest.raises(DimensionError):
        is_dual_ep(DualMatrix([[1, 0]]))


def test_idempotent_decompose_examples():
    f = idempotent_decompose(SYM_IDEM)
    assert f.left == DualMatrix([[1], [0]], [[0], [1]])
    assert f.right == DualMatrix([[1, 0]], [[0, 1]])
    assert f.product() == SYM_IDEM
    eye = DualMatrix.identity(3)
    g = idempotent_decompose(eye)
    assert g.left == eye and g.right == eye


def test_idempotent_preconditions():
    with pytest.raises(PreconditionError):
        idempotent_decompose(EX2)
    with pytest.raises(PreconditionError):
        idempotent_dmpgi(EX2)


def test_idempotent_dmpgi_examples():
    eye = DualMatrix.identity(2)
    assert idempotent_dmpgi(eye) == eye
    assert idempotent_dmpgi(SYM_IDEM) == SYM_IDEM == dmpgi_direct(SYM_IDEM)


def test_invertible_idempotent_is_identity(rng):
    for n in range(1, 5):
        p = real_projector(rng, n, n)
        assert p == RealMatrix.identity(n)
        a = dual_idempotent(rng, n, n)
        assert a == DualMatrix.identity(n)


def test_factor_commute_examples():
    assert factor_commute_is_identity(idempotent_decompose(SYM_IDEM))
    assert not factor_commute_is_identity(decompose(EX2, EX2_P))
    f, g = M([1], [1]), M([1, 0])
    assert factor_commute_is_identity(DualRankFactors(DualMatrix(f), DualMatrix(g)))


def test_ep_examples():
    s = DualMatrix(M([2, 1], [1, 0]))
    assert is_dual_ep(s) and ep_via_parts(s)
    n = DualMatrix(M([0, 1], [0, 0]))
    assert not is_dual_ep(n) and not ep_via_parts(n)
    assert is_dual_ep(SYM_IDEM) == ep_via_parts(SYM_IDEM) is True
    n2 = DualMatrix(M([0, 1], [0, 0]), M([5, 0], [0, 0]))
    assert not ep_via_parts(n2)


def test_ep_via_factor_forms_on_worked_example():
    f = decompose(EX2, EX2_P)
    expected = is_dual_ep(EX2)
    assert ep_via_factors(f) == expected == ep_via_decomposition(f) == ep_via_parts(EX2)


def test_ep_projector_factors():
    # Symmetric projector onto span(1, 1).
    a = DualMatrix(M(["1/2", "1/2"], ["1/2", "1/2"]))
    f = decompose(a)
    assert ep_via_factors(f) and ep_via_decomposition(f)


def test_ep_requires_inverse():
    with pytest.raises(DMPGIError):
        is_dual_ep(EX1)
    with pytest.raises(DMPGIError):
        ep_via_parts(EX1)


def test_ep_factor_forms_need_square_product():
    f = decompose(DualMatrix([[1, 2, 3]], [[0, 1, 0]]))
    with pytest.raises(DimensionError):
        ep_via_factors(f)
    with pytest.raises(DimensionError):
        ep_via_decomposition(f)


@given(dual_matrices(2, 2) | dual_matrices(3, 3))
def test_idempotent_definition_matches_characterization(a):
    assert is_dual_idempotent(a) == idempotent_characterization(a)


@st.composite
def idempotents(draw):
    rng = random.Random(draw(st.integers(0, 2**32)))
    n = rng.randint(1, 4)
    return dual_idempotent(rng, n, rng.randint(1, n))


@given(idempotents())
def test_idempotent_family(a):
    assert is_dual_idempotent(a) and idempotent_characterization(a)
    f = idempotent_decompose(a)
    assert verify_decomposition(a, f)
    assert factor_commute_is_identity(f)
    assert idempotent_dmpgi(a) == dmpgi_direct(a)


@given(consistent_duals(square=True))
def test_commuting_factors_iff_idempotent(a):
    f = decompose(a)
    assert factor_commute_is_identity(f) == is_dual_idempotent(a)


@given(consistent_duals())
def test_inverse_projectors_are_idempotent(a):
    x = dmpgi_direct(a)
    for p in (a @ x, x @ a):
        assert is_dual_idempotent(p)
        assert is_dual_idempotent(DualMatrix.identity(p.rows) - p)


@st.composite
def square_consistent(draw):
    rng = random.Random(draw(st.integers(0, 2**32)))
    n = rng.randint(1, 4)
    r = rng.randint(1, n)
    kind = draw(st.sampled_from(["ep", "symmetric", "real_ep_only", "generic"]))
    if kind == "ep":
        return dual_ep(rng, n, r)
    if kind == "symmetric":
        return dual_symmetric(rng, n, r)
    if kind == "real_ep_only":
        return dual_real_ep_only(rng, n, r)
    return dual_matrix(rng, n, n, r, consistent=True)


@given(square_consistent())
def test_ep_characterizations_agree(a):
    f = decompose(a)
    ep = is_dual_ep(a)
    assert ep_via_parts(a) == ep
    assert ep_via_factors(f) == ep
    assert ep_via_decomposition(f) == ep


def test_ep_constructions(rng):
    for _ in range(10):
        assert is_dual_ep(dual_ep(rng, 3, 2))
        assert is_dual_ep(dual_symmetric(rng, 3, 2))
    invertible = DualMatrix(invertible_matrix(rng, 3), M([1, 0, 0], [0, 0, 0], [0, 0, 0]))
    assert is_dual_ep(invertible)
