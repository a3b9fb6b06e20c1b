"""Normalized eigenfunctions of ``H(g)`` and the weighted inner product.

The inner product is ``<f1|f2> = int dp / (1 + beta p^2) f1 f2``. On the
algebraic family it is a finite sum of Beta-function moments
``int p^{2k} (1 + beta p^2)^{-a} dp``, so it is evaluated exactly rather
than by quadrature.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import polynomial as npoly

from .algebra import AlgebraicFunction, apply_Abar
from .su2 import descent_coefficient, descent_coefficient_n, validate_label


class DivergentIntegralError(ValueError):
    """The weighted inner product does not converge."""


def moment(k: int, a: float, beta: float) -> float:
    """``int p^{2k} (1 + beta p^2)^{-a} dp`` over the real line.

    Equal to ``beta^{-k-1/2} Gamma(k+1/2) Gamma(a-k-1/2) / Gamma(a)``;
    finite only when ``a > k + 1/2``.
    """
    if a <= k + 0.5:
        raise DivergentIntegralError(f"moment diverges for k={k}, a={a}")
    log_m = (
        -(k + 0.5) * math.log(beta)
        + math.lgamma(k + 0.5)
        + math.lgamma(a - k - 0.5)
        - math.lgamma(a)
    )
    return math.exp(log_m)


def inner_product(f1: AlgebraicFunction, f2: AlgebraicFunction) -> float:
    """Exact weighted inner product of two members of the family."""
    if f1.beta != f2.beta:
        raise ValueError(f"beta mismatch: {f1.beta} vs {f2.beta}")
    if f1.is_zero or f2.is_zero:
        return 0.0
    prod = npoly.polymul(f1.coeffs, f2.coeffs)
    deg = prod.size - 1
    if f1.s + f2.s + 2.0 <= deg + 1:
        raise DivergentIntegralError(
            f"integrand ~ p^{deg} (1+beta p^2)^-{(f1.s + f2.s) / 2 + 1} is not integrable"
        )
    a = 0.5 * (f1.s + f2.s) + 1.0
    total = 0.0
    for k in range(0, deg // 2 + 1):
        c = prod[2 * k]
        if c != 0.0:
            total += c * moment(k, a, f1.beta)
    return total


def norm(f: AlgebraicFunction) -> float:
    return math.sqrt(inner_product(f, f))


def normalize(f: AlgebraicFunction) -> AlgebraicFunction:
    return f / norm(f)


def ground_profile(G: float, beta: float) -> AlgebraicFunction:
    """Unit-norm ``N (1 + beta p^2)^{-G/2}``, annihilated by ``A(G)``.

    ``N`` comes from the exact inner product:
    ``N^2 = sqrt(beta/pi) Gamma(G+1) / Gamma(G+1/2)``.
    """
    if G <= 0:
        raise ValueError(f"G must be positive, got {G}")
    return AlgebraicFunction([1.0 / math.sqrt(moment(0, G + 1.0, beta))], G, beta)


def printed_ground_constant(G: float, beta: float) -> float:
    """The ground-state constant ``(beta/pi)^{1/4} sqrt(Gamma((G+2)/2) / Gamma((G+1)/2))``.

    This is the closed-form constant that is often quoted for the ground
    profile; it does *not* give unit weighted norm (see
    :func:`normalization_report`).
    """
    return (beta / math.pi) ** 0.25 * math.exp(
        0.5 * (math.lgamma(0.5 * G + 1.0) - math.lgamma(0.5 * G + 0.5))
    )


def normalization_report(G: float, beta: float) -> dict:
    """Compare the implemented ground-profile constant with the quoted one."""
    implemented = float(ground_profile(G, beta).coeffs[0])
    printed = printed_ground_constant(G, beta)
    unit = AlgebraicFunction([1.0], G, beta)
    return {
        "G": G,
        "beta": beta,
        "implemented_constant": implemented,
        "implemented_constant_sq": implemented**2,
        "printed_constant": printed,
        "printed_constant_sq": printed**2,
        "ratio_printed_to_implemented": printed / implemented,
        "norm_sq_with_implemented": inner_product(unit, unit) * implemented**2,
        "norm_sq_with_printed": inner_product(unit, unit) * printed**2,
    }


def is_normalizable(f: AlgebraicFunction) -> bool:
    """Whether ``<f|f>`` converges."""
    return f.is_zero or 2.0 * f.s + 2.0 > 2 * f.degree + 1


def descent_state(j: float, g: float, beta: float) -> AlgebraicFunction:
    """``descent_coefficient(j, g) * (J-)^{j-g} |j, j>`` as a function of ``p``.

    Lowering uses ``J-: (g', f) -> (g'-1, Abar(g'-1) f)`` starting from the
    unit ground profile with exponent ``j``. No renormalization is applied.
    """
    if not validate_label(j, g):
        raise ValueError(f"invalid su(2) label (j={j}, g={g})")
    f = ground_profile(j, beta)
    for w in range(round(j - g)):
        f = apply_Abar(j - 1.0 - w, f)
    return descent_coefficient(j, g, beta) * f


def rep_state(j: float, g: float, beta: float) -> AlgebraicFunction:
    """The unit state ``|j, g>`` as a function of ``p``.

    For half-integer ``j`` every lowered state is square integrable and
    :func:`descent_state` is returned. For integer ``j`` lowering past
    ``g = 0`` leaves the weighted L^2 space; those labels (``g <= -1``) are
    realized by the square-integrable eigenfunction of ``H(g)`` with
    eigenvalue ``beta (j^2 - g^2)``, which is ``descent_state(j, 1 - g)``
    because ``H(g) = H(1-g) + (1-2g) beta``.
    """
    f = descent_state(j, g, beta)
    if is_normalizable(f):
        return f
    return descent_state(j, 1.0 - g, beta)


def eigenfunction(n: int, g: float, beta: float) -> AlgebraicFunction:
    """Unit-norm eigenfunction of ``H(g)`` at level ``n``.

    Result is ``Abar(g) Abar(g+1) ... Abar(g+n-1) psi_{g+n}`` (rightmost
    operator applied first) scaled by the descent coefficient, then
    renormalized with the exact inner product. It has exponent ``s = g+n``,
    a degree-``n`` polynomial and parity ``(-1)^n``.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    n = int(n)
    f = ground_profile(g + n, beta)
    for k in range(n - 1, -1, -1):
        f = apply_Abar(g + k, f)
    f = descent_coefficient_n(n, g, beta) * f
    return normalize(f)


def gegenbauer(n: int, a: float, x):
    """``C_n^a(x)`` by the three-term recurrence.

    ``C_0 = 1``, ``C_1 = 2 a x``,
    ``k C_k = 2 x (k + a - 1) C_{k-1} - (k + 2a - 2) C_{k-2}``.
    """
    x = np.asarray(x, dtype=float)
    c_prev = np.ones_like(x)
    if n == 0:
        return c_prev if c_prev.ndim else float(c_prev)
    c = 2.0 * a * x
    for k in range(2, n + 1):
        c_prev, c = c, (2.0 * x * (k + a - 1.0) * c - (k + 2.0 * a - 2.0) * c_prev) / k
    return c if c.ndim else float(c)


def xi(p, beta: float):
    """``sqrt(beta) p / sqrt(1 + beta p^2)``, mapping the real line onto ``(-1, 1)``."""
    p = np.asarray(p, dtype=float)
    return math.sqrt(beta) * p / np.sqrt(1.0 + beta * p * p)


def gegenbauer_match(n: int, g: float, beta: float, samples, rtol: float = 1e-8) -> float:
    """Proportionality defect between ``eigenfunction(n, g, beta)`` and
    ``(1 + beta p^2)^{-g/2} C_n^g(xi(p))`` on ``samples``.

    Returns ``max |r(p)/r(p0) - 1|`` with ``r`` the pointwise ratio and
    ``p0 = samples[0]``. Raises ``ValueError`` if a sample lies within
    ``rtol`` (relative to the largest sampled value) of a zero of the
    Gegenbauer factor.
    """
    p = np.atleast_1d(np.asarray(samples, dtype=float))
    c = gegenbauer(n, g, xi(p, beta))
    c = np.atleast_1d(c)
    if np.any(np.abs(c) <= rtol * np.max(np.abs(c))):
        bad = p[np.abs(c) <= rtol * np.max(np.abs(c))]
        raise ValueError(f"sample points at zeros of C_{n}^{g}: {bad.tolist()}")
    # the common factor (1 + beta p^2)^{-g/2} cancels analytically, so compare
    # P(p) (1 + beta p^2)^{-n/2} with C_n^g(xi) directly
    f = eigenfunction(n, g, beta)
    w = 1.0 + beta * p * p
    r = npoly.polyval(p, f.coeffs) * w ** (-0.5 * n) / c
    return float(np.max(np.abs(r / r[0] - 1.0)))
