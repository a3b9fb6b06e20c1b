"""Minimal-length harmonic and Dirac oscillators mapped onto ``H(g)``.

Both models reduce, in momentum space, to the factorized operator
``H(g) = Abar(g) A(g)`` for a model-dependent ``g``; physical energies are
affine (harmonic) or square-root (Dirac) functions of the levels
``(n^2 + 2 n g) beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import AlgebraicFunction, apply_A, apply_Htilde, residual
from .eigenfunctions import eigenfunction, inner_product
from .su2 import energy

#: largest g accepted by :func:`dirac_g`
G_MAX = 1e15


def _positive(**kwargs) -> None:
    for name, value in kwargs.items():
        if not (math.isfinite(value) and value > 0):
            raise ValueError(f"{name} must be positive and finite, got {value}")


@dataclass(frozen=True)
class HarmonicGUP:
    """``H = p^2/2m + m omega^2 x^2 / 2`` with ``[x, p] = i hbar (1 + beta p^2)``."""

    m: float
    omega: float
    hbar: float
    beta: float

    def __post_init__(self):
        _positive(m=self.m, omega=self.omega, hbar=self.hbar, beta=self.beta)

    @property
    def coupling(self) -> float:
        """Dimensionless ``m hbar omega beta``."""
        return self.m * self.hbar * self.omega * self.beta


@dataclass(frozen=True)
class DiracGUP:
    """Dirac oscillator ``c sigma_y (p - i sigma_z m omega x) + sigma_z m c^2``."""

    m: float
    omega: float
    hbar: float
    c: float
    beta: float

    def __post_init__(self):
        _positive(m=self.m, omega=self.omega, hbar=self.hbar, c=self.c, beta=self.beta)

    @property
    def coupling(self) -> float:
        return self.m * self.hbar * self.omega * self.beta


def uncertainty_bound(dp: float, p_mean: float, beta: float, hbar: float) -> float:
    """Lower bound on ``dx * dp``: ``(hbar/2) (1 + beta dp^2 + beta <p>^2)``."""
    if dp <= 0:
        raise ValueError(f"dp must be positive, got {dp}")
    return 0.5 * hbar * (1.0 + beta * dp * dp + beta * p_mean * p_mean)


def position_uncertainty_floor(dp: float, p_mean: float, beta: float, hbar: float) -> float:
    """Smallest ``dx`` allowed at momentum spread ``dp``."""
    return uncertainty_bound(dp, p_mean, beta, hbar) / dp


def minimal_length(beta: float, hbar: float, p_mean: float = 0.0) -> tuple[float, float]:
    """``(dx_min, dp_at_min)`` minimizing :func:`position_uncertainty_floor` over ``dp``.

    ``dp* = sqrt((1 + beta <p>^2) / beta)`` and
    ``dx_min = hbar sqrt(beta) sqrt(1 + beta <p>^2)``.
    """
    _positive(beta=beta, hbar=hbar)
    k = 1.0 + beta * p_mean * p_mean
    return hbar * math.sqrt(beta * k), math.sqrt(k / beta)


# -- harmonic oscillator


def harmonic_g(model: HarmonicGUP) -> float:
    """``1/2 + sqrt(1/4 + 1/(m hbar omega beta)^2)``, the positive root of
    ``g (g-1) beta^2 = 1/(m hbar omega)^2``."""
    return 0.5 + math.sqrt(0.25 + 1.0 / model.coupling**2)


def harmonic_energy(n, model: HarmonicGUP):
    """Closed-form level ``n``::

        hbar w (n + 1/2) [k + sqrt(1 + k^2)] + (m hbar^2 w^2 beta / 2) n^2,  k = m hbar w beta / 2
    """
    k = 0.5 * model.coupling
    hw = model.hbar * model.omega
    return hw * (n + 0.5) * (k + math.sqrt(1.0 + k * k)) + 0.5 * model.m * hw * hw * model.beta * n * n


def harmonic_energy_from_eigenvalue(lam, model: HarmonicGUP):
    """Map an eigenvalue of ``H(g)`` to the oscillator energy: ``(m hbar^2 w^2/2) (lam + g beta)``."""
    hw = model.hbar * model.omega
    return 0.5 * model.m * hw * hw * (lam + harmonic_g(model) * model.beta)


def harmonic_energy_algebraic(n, model: HarmonicGUP):
    """Level ``n`` through the su(2) spectrum of ``H(g)``."""
    return harmonic_energy_from_eigenvalue(energy(n, harmonic_g(model), model.beta), model)


# -- Dirac oscillator


def dirac_g(model: DiracGUP) -> float:
    """``1 / (m hbar omega beta)``."""
    g = 1.0 / model.coupling
    if not g <= G_MAX:
        raise OverflowError(f"g = {g} exceeds {G_MAX}: m hbar omega beta too small")
    return g


def dirac_energy(n, model: DiracGUP, branch: int = +1):
    """``+/- m c^2 sqrt(1 + (hbar^2 w^2 beta / c^2) n^2 + (2 hbar w / m c^2) n)``."""
    if branch not in (+1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    return branch * model.m * model.c**2 * math.sqrt(1.0 + _dirac_x(n, model))


def _dirac_x(n, model: DiracGUP) -> float:
    # E^2 / (m c^2)^2 - 1
    hw = model.hbar * model.omega
    return (hw * hw * model.beta / model.c**2) * n * n + (2.0 * hw / (model.m * model.c**2)) * n


def dirac_excitation(n, model: DiracGUP) -> float:
    """``|E_n| - m c^2`` without cancellation, via ``m c^2 x / (1 + sqrt(1 + x))``."""
    x = _dirac_x(n, model)
    return model.m * model.c**2 * x / (1.0 + math.sqrt(1.0 + x))


@dataclass(frozen=True)
class DiracUpperProblem:
    """Upper-component equation written as ``H(g) f1 = lam f1`` with ``lam = scale E^2 + shift``."""

    g: float
    scale: float
    shift: float

    def eigenvalue(self, E: float) -> float:
        return self.scale * E * E + self.shift

    def energy(self, lam: float, branch: int = +1) -> float:
        e2 = (lam - self.shift) / self.scale
        if e2 < 0:
            raise ValueError(f"eigenvalue {lam} gives negative E^2")
        return branch * math.sqrt(e2)


def dirac_upper_problem(model: DiracGUP) -> DiracUpperProblem:
    """Identify the squared upper-component equation with ``H(g)``.

    The upper component obeys
    ``[-(1+beta p^2) d/dp (1+beta p^2) d/dp + (1 - m hbar w beta)/(m hbar w)^2 p^2] f1
    = (1/(m hbar w)^2) ((E^2 - m^2 c^4)/c^2 + m hbar w) f1``;
    subtracting ``g beta`` from both sides gives ``H(g) f1 = lam f1``.
    """
    g = dirac_g(model)
    mhw = model.m * model.hbar * model.omega
    scale = 1.0 / (model.c**2 * mhw * mhw)
    shift = -(model.m**2 * model.c**4) * scale + 1.0 / mhw - g * model.beta
    return DiracUpperProblem(g, scale, shift)


def dirac_coefficient_residual(model: DiracGUP) -> float:
    """``|g (g-1) beta^2 - (1 - m hbar w beta)/(m hbar w)^2|`` relative to the second term's scale."""
    g = dirac_g(model)
    mhw = model.m * model.hbar * model.omega
    target = (1.0 - model.coupling) / (mhw * mhw)
    scale = max(abs(target), 1.0 / (mhw * mhw))
    return abs(g * (g - 1.0) * model.beta**2 - target) / scale


def dirac_inversion_residual(n: int, model: DiracGUP, branch: int = +1) -> float:
    """Relative mismatch between the closed-form ``E_n`` fed back into the
    upper-component eigenvalue and ``(n^2 + 2 g n) beta + g beta``."""
    E = dirac_energy(n, model, branch)
    mc2 = model.m * model.c**2
    # E^2 - m^2 c^4 = (|E| - mc^2)(|E| + mc^2); subtracting squares directly loses digits when hbar w << mc^2
    d = dirac_excitation(n, model)
    mhw = model.m * model.hbar * model.omega
    lhs = (d * (abs(E) + mc2) / model.c**2 + mhw) / (mhw * mhw)
    g = dirac_g(model)
    rhs = (n * n + 2.0 * g * n) * model.beta + g * model.beta
    return abs(lhs - rhs) / abs(rhs)


@dataclass(frozen=True)
class SpinorProfile:
    """Upper and lower components of a Dirac-oscillator eigenstate.

    The physical lower component is ``1j * f2``; only ``f2`` is stored.
    """

    f1: AlgebraicFunction
    f2: AlgebraicFunction
    energy: float
    eigenvalue: float
    normalized: bool = True

    def norm_sq(self) -> float:
        return inner_product(self.f1, self.f1) + inner_product(self.f2, self.f2)


def dirac_spinor(n: int, model: DiracGUP) -> SpinorProfile:
    """Jointly normalized positive-branch spinor at level ``n``.

    The lower component follows from the first-order relation
    ``(E + m c^2) f2 = i c m hbar w A(g) f1`` (with ``sigma_z = diag(1, -1)``).
    """
    g = dirac_g(model)
    E = dirac_energy(n, model, +1)
    lam = energy(n, g, model.beta)
    f1 = eigenfunction(n, g, model.beta)
    mc2 = model.m * model.c**2
    k = model.c * model.m * model.hbar * model.omega / (E + mc2)
    f2 = k * apply_A(g, f1)
    total = inner_product(f1, f1) + inner_product(f2, f2)
    a = 1.0 / math.sqrt(total)
    return SpinorProfile(a * f1, a * f2, E, lam, True)


def lower_component_residual(spinor: SpinorProfile, model: DiracGUP) -> float:
    """Residual of ``Htilde(g) f2 = lam f2`` relative to ``lam`` times the size of ``f2``."""
    if spinor.f2.is_zero:
        return 0.0
    g = dirac_g(model)
    diff = apply_Htilde(g, spinor.f2) - spinor.eigenvalue * spinor.f2
    return residual(diff, spinor.eigenvalue * spinor.f2.magnitude)
