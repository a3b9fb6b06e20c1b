import math
import warnings

import numpy as np
import pytest

from gupsu2.oracle import (
    TridiagonalOperator,
    box_eigenvalues,
    grid,
    lowest_eigenvalues,
    oracle_spectrum,
    pt_potential,
    relative_errors,
    sturm_count,
    to_sturm,
)
from gupsu2.su2 import energy


def test_g1_is_shifted_laplacian():
    T = to_sturm(1.0, 1.3, 32)
    np.testing.assert_allclose(T.potential, -1.3)
    np.testing.assert_allclose(T.diag, 2 / T.h**2 - 1.3)


def test_grid_and_entries():
    # hand construction at g=2, beta=1
    N = 16
    T = to_sturm(2.0, 1.0, N)
    h = math.pi / (N + 1)
    u = -math.pi / 2 + h * np.arange(1, N + 1)
    assert T.h == pytest.approx(h)
    np.testing.assert_allclose(T.diag, 2 / h**2 + 2 * np.tan(u) ** 2 - 2, rtol=1e-13)
    np.testing.assert_array_equal(T.offdiag, -1 / h**2)
    uu, hh = grid(1.0, N)
    np.testing.assert_allclose(uu, u)


def test_grid_is_symmetric():
    u, _ = grid(0.7, 101)
    np.testing.assert_allclose(u, -u[::-1], atol=1e-13)
    v = pt_potential(u, 2.5, 0.7)
    np.testing.assert_allclose(v, v[::-1], rtol=1e-12)


@pytest.mark.parametrize("g, N", [(0.4, 64), (1.0, 15), (1.0, 4)])
def test_to_sturm_rejects(g, N):
    with pytest.raises(ValueError):
        to_sturm(g, 1.0, N)


def test_boundary_singular_warning():
    with pytest.warns(RuntimeWarning):
        T = to_sturm(0.75, 1.0, 64)
    assert T.singular_boundary
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert not to_sturm(1.0, 1.0, 64).singular_boundary


def test_operator_validation():
    with pytest.raises(ValueError):
        TridiagonalOperator(np.ones(3), np.ones(3))
    with pytest.raises(ValueError):
        TridiagonalOperator(np.array([1.0, np.inf]), np.ones(1))


def test_two_by_two():
    T = TridiagonalOperator(np.array([2.0, 2.0]), np.array([-1.0]))
    assert lowest_eigenvalues(T, 1)[0] == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_allclose(lowest_eigenvalues(T, 2), [1.0, 3.0], atol=1e-15)
    np.testing.assert_allclose(lowest_eigenvalues(T, 2, method="stebz"), [1.0, 3.0], atol=1e-14)


def test_sturm_count_against_dense():
    rng = np.random.default_rng(0)
    d = rng.normal(size=40)
    e = rng.normal(size=39)
    T = TridiagonalOperator(d, e)
    ev = np.linalg.eigvalsh(T.todense())
    shifts = np.linspace(ev[0] - 1, ev[-1] + 1, 25)
    np.testing.assert_array_equal(sturm_count(T, shifts), [(ev < x).sum() for x in shifts])
    np.testing.assert_allclose(lowest_eigenvalues(T, 6), ev[:6], atol=1e-12)


def test_differential_count_against_dense():
    T = to_sturm(2.5, 0.8, 48)
    ev = np.linalg.eigvalsh(T.todense())
    np.testing.assert_allclose(lowest_eigenvalues(T, 5), ev[:5], rtol=1e-10)
    mids = 0.5 * (ev[:-1] + ev[1:])[:10]
    np.testing.assert_array_equal(sturm_count(T, mids), np.arange(1, 11))


def test_k_range():
    T = to_sturm(1.0, 1.0, 16)
    with pytest.raises(ValueError):
        lowest_eigenvalues(T, 0)
    with pytest.raises(ValueError):
        lowest_eigenvalues(T, 17)
    with pytest.raises(ValueError):
        lowest_eigenvalues(T, 2, method="qr")


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_box_formula(beta):
    N = 1024
    vals = lowest_eigenvalues(to_sturm(1.0, beta, N), 5)
    box = box_eigenvalues(beta, N, 5)
    np.testing.assert_allclose(vals, box, rtol=1e-10, atol=1e-10 * beta)
    assert np.all(np.diff(vals) > 0)


def test_gershgorin_encloses_spectrum():
    T = to_sturm(3.0, 1.0, 64)
    ev = np.linalg.eigvalsh(T.todense())
    lo, hi = T.gershgorin()
    assert lo <= ev[0] and ev[-1] <= hi


@pytest.mark.parametrize(
    "g, beta, expect",
    [(1.0, 1.0, [0, 3, 8, 15]), (2.0, 1.0, [0, 5, 12, 21]), (3.0, 0.25, [0, 1.75, 4])],
)
def test_oracle_spectrum_examples(g, beta, expect):
    res = oracle_spectrum(g, beta, N=4096, k=len(expect))
    assert res.source == "oracle" and res.meta["N"] == 4096
    n = np.arange(len(expect))
    assert np.all(np.abs(res.levels - expect) / ((n + 1) ** 2 * beta) <= 5e-3)
    assert res.is_increasing()


def test_relative_errors_shrink_as_h_squared():
    e1 = relative_errors(oracle_spectrum(2.0, 1.0, 512, 3))
    e2 = relative_errors(oracle_spectrum(2.0, 1.0, 1024, 3))
    assert np.all((0.2 <= e2 / e1) & (e2 / e1 <= 0.35))


def test_stebz_agrees_on_well_conditioned_levels():
    a = oracle_spectrum(2.0, 1.0, 512, 4, method="bisect").levels
    b = oracle_spectrum(2.0, 1.0, 512, 4, method="stebz").levels
    np.testing.assert_allclose(a, b, atol=1e-9 * 4 * (512 / math.pi) ** 2)


def test_oracle_for_nonquantized_g():
    g, beta = 1.37, 0.9
    res = oracle_spectrum(g, beta, 2048, 4)
    assert np.max(relative_errors(res)) <= 5e-3
    np.testing.assert_allclose(res.levels, energy(np.arange(4), g, beta), atol=5e-3 * 16 * beta)
