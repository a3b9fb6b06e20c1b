import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from gupsu2.su2 import (
    RepLabel,
    SpectralResult,
    casimir_eigenvalue,
    closed_form_spectrum,
    descent_coefficient,
    descent_coefficient_n,
    energy,
    labels,
    ladder_norm_down,
    ladder_norm_up,
    validate_label,
)


@pytest.mark.parametrize(
    "j, g, ok",
    [(1.5, -0.5, True), (1.0, 1.0, True), (0.7, 0.7, False), (1.0, -1.0, False), (2.0, -1.0, True), (0.0, 0.0, False), (1.5, 1.0, False)],
)
def test_validate_label(j, g, ok):
    assert validate_label(j, g) is ok


def test_rep_label_rejects_invalid():
    with pytest.raises(ValueError):
        RepLabel(0.7, 0.7)
    lab = RepLabel(2.0, 0.0)
    assert lab.descents == 2 and lab.casimir == 3.75


def test_labels_enumeration():
    labs = labels(2.0)
    # 2j states for each j in {1/2, 1, 3/2, 2}
    assert len(labs) == 1 + 2 + 3 + 4
    assert labs[0] == RepLabel(0.5, 0.5)
    for lab in labs:
        assert lab.j**2 - lab.g**2 >= 0 and lab.j**2 - (lab.g - 1) ** 2 >= 0


def test_ladder_norm_examples():
    assert ladder_norm_up(0.5, 0.5, 1.0) == 0.0
    assert ladder_norm_down(2.0, 2.0, 1.0) == pytest.approx(math.sqrt(3))
    assert ladder_norm_up(1.0, 0.0, 4.0) == pytest.approx(2.0)
    assert ladder_norm_down(2.0, -1.0, 1.0) == 0.0
    with pytest.raises(ValueError):
        ladder_norm_up(0.7, 0.7, 1.0)


def test_casimir():
    assert casimir_eigenvalue(0.5) == 0.0
    assert casimir_eigenvalue(1.0) == 0.75
    assert casimir_eigenvalue(1.5) == 2.0
    with pytest.raises(ValueError):
        casimir_eigenvalue(0.0)


def test_energy_examples():
    assert energy(0, 2.7, 3.1) == 0.0
    assert energy(1, 1.0, 1.0) == 3.0
    assert energy(2, 1.5, 0.5) == 5.0
    np.testing.assert_array_equal(energy(np.arange(4), 1.0, 1.0), [0, 3, 8, 15])


@given(st.integers(0, 50), st.floats(0.01, 50), st.floats(0.01, 10))
def test_energy_recast_and_monotone(n, g, beta):
    assert energy(n, g, beta) == pytest.approx(beta * ((g + n) ** 2 - g * g), rel=1e-12, abs=1e-12)
    assert energy(n + 1, g, beta) > energy(n, g, beta)


def test_descent_examples():
    for j in (0.5, 1.0, 2.5, 7.0):
        assert descent_coefficient(j, j, 1.7) == pytest.approx(1.0)
    assert descent_coefficient(1.0, 0.0, 1.0) == pytest.approx(1.0)
    assert descent_coefficient(2.0, 1.0, 1.0) == pytest.approx(math.sqrt(2 / 6), rel=1e-14)


def test_descent_n_examples():
    assert descent_coefficient_n(0, 1.3, 2.0) == pytest.approx(1.0)
    assert descent_coefficient_n(1, 1.0, 1.0) == pytest.approx(math.sqrt(1 / 3), rel=1e-14)
    assert descent_coefficient_n(2, 0.5, 1.0) == pytest.approx(math.sqrt(1 / 24), rel=1e-14)
    with pytest.raises(ValueError):
        descent_coefficient_n(1, 0.0, 1.0)
    with pytest.raises(ValueError):
        descent_coefficient_n(-1, 1.0, 1.0)


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_descent_times_path_norms_is_one(beta):
    for lab in labels(6.0):
        prod = 1.0
        g = lab.j
        while g > lab.g + 0.5:
            prod *= ladder_norm_down(lab.j, g, beta)
            g -= 1.0
        if prod == 0.0:
            continue
        assert descent_coefficient(lab.j, lab.g, beta) * prod == pytest.approx(1.0, rel=1e-12)


def test_descent_against_mpmath():
    mpmath.mp.dps = 40
    for j, g, beta in [(25.0, -20.0, 0.7), (40.5, 3.5, 1.3), (6.0, 0.0, 2.0)]:
        d = int(j - g)
        exact = mpmath.sqrt(mpmath.gamma(j + g) / (mpmath.mpf(beta) ** d * mpmath.gamma(2 * j) * mpmath.factorial(d)))
        assert descent_coefficient(j, g, beta) == pytest.approx(float(exact), rel=1e-12)


def test_descent_n_large_arguments():
    # Gamma(2g + 2n) alone overflows a double here; the log-gamma route does not
    mpmath.mp.dps = 40
    n, g, beta = 60, 70.5, 0.02
    exact = mpmath.sqrt(mpmath.gamma(2 * g + n) / (mpmath.mpf(beta) ** n * mpmath.factorial(n) * mpmath.gamma(2 * g + 2 * n)))
    assert descent_coefficient_n(n, g, beta) == pytest.approx(float(exact), rel=1e-11)


@pytest.mark.parametrize("g", [0.5, 1.0, 1.5, 2.0])
def test_ladder_states_exist(g):
    for n in range(10):
        assert validate_label(g + n, g)


def test_spectral_result():
    res = closed_form_spectrum(1.0, 1.0, 3)
    assert res.lines == ((0, 0.0), (1, 3.0), (2, 8.0), (3, 15.0))
    assert res.source == "closed-form" and res.is_increasing()
    assert closed_form_spectrum(1.0, 1.0, -1).lines == ()
    with pytest.raises(ValueError):
        SpectralResult([], "guess", 1.0, 1.0)
