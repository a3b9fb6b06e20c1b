import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gupsu2.algebra import (
    AlgebraicFunction,
    ModeState,
    SequenceState,
    appendixA_residuals,
    apply_A,
    apply_Abar,
    apply_H,
    apply_Htilde,
    apply_Jminus,
    apply_Jplus,
    apply_Jz,
    caseA_Jminus,
    caseA_Jplus,
    commutator_residuals,
    shape_invariance_residual,
)
from gupsu2.eigenfunctions import ground_profile, inner_product, norm, rep_state
from gupsu2.su2 import ladder_norm_down

BETAS = (0.25, 1.0, 4.0)

coeff_lists = st.lists(st.floats(-3, 3, allow_nan=False), min_size=1, max_size=7)


@st.composite
def functions(draw, s=None, beta=None):
    c = draw(coeff_lists)
    s = draw(st.floats(-10, 10)) if s is None else s
    beta = draw(st.sampled_from(BETAS)) if beta is None else beta
    return AlgebraicFunction(c, s, beta)


def fd_derivative(f, p, h=1e-5):
    return (f(p + h) - f(p - h)) / (2 * h)


# -- canonical form and arithmetic


def test_trailing_zeros_are_dropped():
    f = AlgebraicFunction([1.0, 2.0, 0.0, 0.0], 1.0, 1.0)
    assert f.degree == 1
    assert AlgebraicFunction([0.0, 0.0], 1.0, 1.0).is_zero
    assert AlgebraicFunction([1.0, 1e-301], 0, 1).degree == 0


def test_coeffs_immutable():
    f = AlgebraicFunction([1.0, 2.0], 1.0, 1.0)
    with pytest.raises(ValueError):
        f.coeffs[0] = 5.0


@pytest.mark.parametrize("beta", [0.0, -1.0, float("nan")])
def test_bad_beta(beta):
    with pytest.raises(ValueError):
        AlgebraicFunction([1.0], 1.0, beta)


def test_mismatch_is_an_error():
    a = AlgebraicFunction([1.0], 1.0, 1.0)
    with pytest.raises(ValueError, match="beta"):
        a + AlgebraicFunction([1.0], 1.0, 2.0)
    with pytest.raises(ValueError, match="exponent"):
        a - AlgebraicFunction([1.0], 2.0, 1.0)


def test_dict_round_trip():
    f = AlgebraicFunction([0.5, -1.25, 3.0], 2.5, 0.25)
    g = AlgebraicFunction.from_dict(f.to_dict())
    assert g.s == f.s and g.beta == f.beta
    np.testing.assert_array_equal(g.coeffs, f.coeffs)
    assert set(f.to_dict()) == {"beta", "s", "coeffs"}


def test_evaluation():
    f = AlgebraicFunction([1.0, 0.0, 2.0], 3.0, 0.5)
    p = np.array([-1.0, 0.3, 2.0])
    np.testing.assert_allclose(f(p), (1 + 2 * p**2) * (1 + 0.5 * p**2) ** -1.5)


# -- worked examples for A and Abar


def test_A_annihilates_ground():
    assert apply_A(1.0, AlgebraicFunction([1.0], 1.0, 1.0)).is_zero


def test_A_on_p():
    out = apply_A(0.0, AlgebraicFunction([0.0, 1.0], 0.0, 1.0))
    np.testing.assert_array_equal(out.coeffs, [1.0, 0.0, 1.0])
    assert out.s == 0.0


def test_A_on_constant():
    np.testing.assert_array_equal(apply_A(2.0, AlgebraicFunction([1.0], 0.0, 1.0)).coeffs, [0.0, 2.0])


def test_Abar_examples():
    out = apply_Abar(1.0, AlgebraicFunction([1.0], 2.0, 1.0))
    np.testing.assert_array_equal(out.coeffs, [0.0, 3.0])
    assert out.s == 2.0
    assert apply_Abar(0.0, AlgebraicFunction([1.0], 0.0, 1.0)).is_zero
    np.testing.assert_array_equal(apply_Abar(3.0, AlgebraicFunction([1.0], 0.0, 1.0)).coeffs, [0.0, 3.0])


@pytest.mark.parametrize("g", [-1.3, 0.0, 0.7, 2.5])
@pytest.mark.parametrize("beta", BETAS)
def test_operators_match_finite_differences(g, beta):
    f = AlgebraicFunction([0.3, -1.0, 0.5, 0.2], 1.7, beta)
    p = np.linspace(-2, 2, 9)
    w = 1 + beta * p * p
    df = fd_derivative(f, p)
    np.testing.assert_allclose(apply_A(g, f)(p), w * df + g * beta * p * f(p), atol=1e-8)
    np.testing.assert_allclose(apply_Abar(g, f)(p), -w * df + g * beta * p * f(p), atol=1e-8)


@given(functions(), st.floats(-3, 3))
def test_closure(f, g):
    for op in (apply_A, apply_Abar):
        out = op(g, f)
        assert out.s == f.s and out.beta == f.beta
        assert out.degree <= f.degree + 1


def test_hamiltonians_factorize():
    f = AlgebraicFunction([1.0, 2.0, -0.5], 0.8, 1.0)
    g = 0.6
    d = apply_H(g, f) - apply_Abar(g, apply_A(g, f))
    assert d.magnitude == 0.0
    d = apply_Htilde(g, f) - apply_A(g, apply_Abar(g, f))
    assert d.magnitude == 0.0


def test_H_on_excited_state():
    for beta in BETAS:
        psi = rep_state(2.0, 1.0, beta)
        d = apply_H(1.0, psi) - 3.0 * beta * psi
        assert d.magnitude <= 1e-12 * psi.magnitude


def test_H_kills_ground():
    for g in (0.5, 1.0, 2.5):
        assert apply_H(g, ground_profile(g, 1.0)).magnitude <= 1e-14


# -- shape invariance


@settings(max_examples=200)
@given(functions(), st.floats(-3, 3))
def test_shape_invariance(f, g):
    assert shape_invariance_residual(g, f) <= 1e-12


def test_shape_invariance_examples():
    rng = np.random.default_rng(11)
    f = AlgebraicFunction(rng.normal(size=6), 2.2, 1.0)
    assert shape_invariance_residual(0.7, f) <= 1e-12
    assert shape_invariance_residual(1.9, AlgebraicFunction.zero(1.0, 1.0)) == 0.0
    assert shape_invariance_residual(2.0, rep_state(3.0, 3.0, 1.0)) <= 1e-12


# -- linearity


@given(functions(s=1.5, beta=1.0), functions(s=1.5, beta=1.0), st.floats(-2, 2), st.floats(-2, 2))
def test_linearity(f1, f2, a, b):
    for op in (apply_A, apply_Abar, apply_H, apply_Htilde):
        lhs = op(0.4, a * f1 + b * f2)
        rhs = a * op(0.4, f1) + b * op(0.4, f2)
        scale = max(f1.magnitude, f2.magnitude, 1.0)
        assert (lhs - rhs).magnitude <= 1e-11 * scale


# -- hermitian conjugacy against quadrature


def test_conjugacy_by_quadrature():
    from scipy.integrate import quad

    beta, g = 1.0, 0.7
    f1 = AlgebraicFunction([0.4, -1.0, 0.3], 3.0, beta)
    f2 = AlgebraicFunction([1.0, 0.5], 2.5, beta)
    lhs = inner_product(f1, apply_A(g, f2))
    rhs = inner_product(apply_Abar(g, f1), f2)
    q, _ = quad(lambda p: f1(p) * apply_A(g, f2)(p) / (1 + beta * p * p), -np.inf, np.inf, epsabs=1e-13)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    assert lhs == pytest.approx(q, abs=1e-9)


# -- angular realization


def test_Jplus_kills_highest_weight():
    st_ = ModeState({1.0: rep_state(1.0, 1.0, 1.0)})
    assert apply_Jplus(st_).is_zero


def test_Jz_multiplies_by_weight():
    f = AlgebraicFunction([1.0, 2.0], 1.0, 1.0)
    out = apply_Jz(ModeState({2.0: f}))
    assert list(out.modes) == [2.0]
    np.testing.assert_array_equal(out.modes[2.0].coeffs, [2.0, 4.0])


def test_Jminus_norm():
    for beta in (0.5, 1.0):
        out = apply_Jminus(ModeState({2.0: rep_state(2.0, 2.0, beta)}))
        assert list(out.modes) == [1.0]
        assert norm(out.modes[1.0]) == pytest.approx(math.sqrt(3 * beta), rel=1e-12)
        assert norm(out.modes[1.0]) == pytest.approx(ladder_norm_down(2.0, 2.0, beta), rel=1e-12)


def test_mode_labels_must_differ_by_integers():
    f = AlgebraicFunction([1.0], 1.0, 1.0)
    with pytest.raises(ValueError):
        ModeState({1.0: f, 1.5: f})
    with pytest.raises(ValueError):
        ModeState({1.0: f, 2.0: AlgebraicFunction([1.0], 1.0, 2.0)})


def test_labels_do_not_drift():
    f = AlgebraicFunction([1.0, 1.0], 1.0, 1.0)
    st_ = ModeState({2.3: f})
    back = apply_Jplus(apply_Jminus(st_))
    assert list(back.modes) == [2.3]


@st.composite
def mode_states(draw, cls=ModeState):
    beta = draw(st.sampled_from(BETAS))
    base = draw(st.floats(-3, 3))
    count = draw(st.integers(1, 3))
    comps = {}
    for i in range(count):
        comps[base + i] = draw(functions(beta=beta))
    return cls(comps)


@settings(max_examples=100)
@given(mode_states())
def test_commutators(st_):
    r1, r2 = commutator_residuals(st_)
    assert r1 <= 1e-12 and r2 <= 1e-12


def test_commutator_examples():
    rng = np.random.default_rng(3)
    single = ModeState({1.3: AlgebraicFunction(rng.normal(size=5), 1.1, 1.0)})
    assert max(commutator_residuals(single)) <= 1e-12
    assert commutator_residuals(ModeState()) == (0.0, 0.0)
    assert max(commutator_residuals(ModeState({0.5: rep_state(1.5, 0.5, 1.0)}))) <= 1e-12


# -- index realization


@settings(max_examples=100)
@given(mode_states(cls=SequenceState))
def test_index_realization(st_):
    assert max(appendixA_residuals(st_)) <= 1e-12


def test_index_realization_examples():
    rng = np.random.default_rng(5)
    st_ = SequenceState({n: AlgebraicFunction(rng.normal(size=4), 1.5, 1.0) for n in (1, 2, 3)})
    assert max(appendixA_residuals(st_)) <= 1e-12
    assert appendixA_residuals(SequenceState()) == (0.0, 0.0, 0.0)


def test_index_ladder_direction():
    f = AlgebraicFunction([1.0, 0.5], 1.0, 1.0)
    up = caseA_Jplus(SequenceState({2.0: f}))
    down = caseA_Jminus(SequenceState({2.0: f}))
    assert list(up.entries) == [3.0] and list(down.entries) == [1.0]
    np.testing.assert_array_equal(up.entries[3.0].coeffs, apply_A(2.0, f).coeffs)
    np.testing.assert_array_equal(down.entries[1.0].coeffs, apply_Abar(1.0, f).coeffs)


def test_case_a_matches_case_b_at_j2():
    from gupsu2.verify import ladder_matrix_elements

    for row in ladder_matrix_elements(2.0, 1.0):
        assert row["case_a"] == pytest.approx(row["case_b"], abs=1e-12)
