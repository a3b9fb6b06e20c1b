"""Finite-difference eigenvalue oracle for ``H(g)``.

With ``u = arctan(sqrt(beta) p) / sqrt(beta)`` the operator
``-(1+beta p^2) d/dp (1+beta p^2) d/dp`` becomes ``-d^2/du^2`` and the
measure ``dp / (1+beta p^2)`` becomes ``du``. ``H(g)`` turns into the
trigonometric Poschl-Teller problem

    -y'' + beta [g (g-1) tan^2(sqrt(beta) u) - g] y = E y

on ``|u| < pi / (2 sqrt(beta))`` with Dirichlet ends. Central differences
give a symmetric tridiagonal matrix whose low eigenvalues are found with
Sturm-sequence bisection.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .su2 import SpectralResult, energy

MIN_POINTS = 16


@dataclass(frozen=True, eq=False)
class TridiagonalOperator:
    """Symmetric tridiagonal matrix with grid metadata.

    When ``potential`` is given the matrix is understood as
    ``(1/h^2) tridiag(-1, 2, -1) + diag(potential)``; ``diag`` and
    ``offdiag`` then hold the rounded entries of that matrix.
    """

    diag: np.ndarray
    offdiag: np.ndarray
    h: float = 1.0
    g: float | None = None
    beta: float | None = None
    potential: np.ndarray | None = None

    def __post_init__(self):
        if self.potential is not None:
            v = np.asarray(self.potential, dtype=float)
            if v.shape != np.shape(self.diag):
                raise ValueError("potential must match diag")
            object.__setattr__(self, "potential", v)
        d = np.asarray(self.diag, dtype=float)
        e = np.asarray(self.offdiag, dtype=float)
        if d.ndim != 1 or e.shape != (max(d.size - 1, 0),):
            raise ValueError("offdiag must have length len(diag) - 1")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def N(self) -> int:
        return self.diag.size

    @property
    def singular_boundary(self) -> bool:
        """True when ``g < 1``: the boundary potential is attractive and convergence is slow."""
        return self.g is not None and self.g < 1.0

    def gershgorin(self) -> tuple[float, float]:
        r = np.zeros(self.N)
        r[:-1] += np.abs(self.offdiag)
        r[1:] += np.abs(self.offdiag)
        return float(np.min(self.diag - r)), float(np.max(self.diag + r))

    def norm(self) -> float:
        lo, hi = self.gershgorin()
        return max(abs(lo), abs(hi))

    def todense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


def pt_potential(u, g: float, beta: float):
    """``beta [g (g-1) tan^2(sqrt(beta) u) - g]``."""
    t = np.tan(math.sqrt(beta) * np.asarray(u, dtype=float))
    return beta * (g * (g - 1.0) * t * t - g)


def grid(beta: float, N: int) -> tuple[np.ndarray, float]:
    """Interior nodes ``u_i = -L/2 + i h`` (``i = 1..N``) with ``h = L/(N+1)``, ``L = pi/sqrt(beta)``."""
    L = math.pi / math.sqrt(beta)
    h = L / (N + 1)
    return -0.5 * L + h * np.arange(1, N + 1), h


def to_sturm(g: float, beta: float, N: int) -> TridiagonalOperator:
    """Discretize ``H(g)`` in the ``u`` variable on ``N`` interior nodes."""
    if g < 0.5:
        raise ValueError(f"oracle requires g >= 1/2, got {g}")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    if N < MIN_POINTS:
        raise ValueError(f"N must be >= {MIN_POINTS}, got {N}")
    if g < 1.0:
        warnings.warn(
            f"g={g} < 1: boundary-singular potential, finite differences converge slowly",
            RuntimeWarning,
            stacklevel=2,
        )
    u, h = grid(beta, N)
    inv_h2 = 1.0 / (h * h)
    v = pt_potential(u, g, beta)
    diag = 2.0 * inv_h2 + v
    off = np.full(N - 1, -inv_h2)
    return TridiagonalOperator(diag, off, h, g, beta, potential=v)


def _count_plain(d: list, e2: list, x: float, pivmin: float) -> int:
    count = 0
    q = 1.0
    for i in range(len(d)):
        q = (d[i] - x) - (e2[i - 1] / q if i else 0.0)
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
    return count


def _count_differential(v: list, c: float, x: float, pivmin: float) -> int:
    # pivots of (T - x)/c written as q_i = 1 + r_i, with T = c * tridiag(-1, 2, -1) + diag(v):
    #   r_0 = 1 + t_0,  r_i = t_i + r_{i-1} / q_{i-1},  t_i = (v_i - x)/c
    # 2 is never added to the small t_i, so low eigenvalues keep full relative accuracy
    inv_c = 1.0 / c
    count = 0
    r = 0.0
    q = 1.0
    for i in range(len(v)):
        r = (v[i] - x) * inv_c + (r / q if i else 1.0)
        q = 1.0 + r
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0:
            count += 1
    return count


def sturm_count(T: TridiagonalOperator, x) -> np.ndarray:
    """Number of eigenvalues of ``T`` strictly below each shift in ``x``.

    Counts negative pivots of the LDL^T factorization of ``T - x I``.
    Operators carrying a ``potential`` use the differential form of the
    recurrence.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(T.offdiag**2, initial=0.0)))
    if T.potential is not None:
        v = T.potential.tolist()
        c = 1.0 / (T.h * T.h)
        return np.array([_count_differential(v, c, float(xi), pivmin) for xi in xs])
    d = T.diag.tolist()
    e2 = (T.offdiag**2).tolist()
    return np.array([_count_plain(d, e2, float(xi), pivmin) for xi in xs])


def _bisect(T: TridiagonalOperator, k: int, max_iter: int = 256) -> np.ndarray:
    lo_b, hi_b = T.gershgorin()
    eps = np.finfo(float).eps
    pad = 2.0 * eps * max(abs(lo_b), abs(hi_b), 1.0)
    out = np.empty(k)
    lo = lo_b - pad
    for idx in range(k):
        # eigenvalue idx lies in [lo, hi]; lo carries over from the previous index
        a, b = lo, hi_b + pad
        for _ in range(max_iter):
            if b - a <= 2.0 * eps * max(abs(a), abs(b)) + np.finfo(float).tiny:
                break
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if sturm_count(T, mid)[0] > idx:
                b = mid
            else:
                a = mid
        out[idx] = 0.5 * (a + b)
        lo = a
    return out


def lowest_eigenvalues(T: TridiagonalOperator, k: int, method: str = "bisect") -> np.ndarray:
    """The ``k`` smallest eigenvalues of ``T``, ascending.

    ``method="bisect"`` runs Sturm-count bisection (:func:`sturm_count`) to a
    relative width of a few ulps per eigenvalue; ``method="stebz"`` calls
    LAPACK's bisection driver on the stored diagonal, which is accurate to
    ``eps * ||T||`` in absolute terms.
    """
    if not 1 <= k <= T.N:
        raise ValueError(f"k must be in [1, {T.N}], got {k}")
    if method == "bisect":
        vals = _bisect(T, k)
    elif method == "stebz":
        if T.N == 1:
            vals = T.diag.copy()
        else:
            vals = eigh_tridiagonal(
                T.diag,
                T.offdiag,
                eigvals_only=True,
                select="i",
                select_range=(0, k - 1),
                lapack_driver="stebz",
                tol=np.finfo(float).tiny,
            )
    else:
        raise ValueError(f"unknown method {method!r}")
    return np.sort(np.asarray(vals, dtype=float))


def box_eigenvalues(beta: float, N: int, k: int) -> np.ndarray:
    """Exact eigenvalues of the ``g = 1`` matrix: ``(4/h^2) sin^2(m pi h / (2L)) - beta``, ``m = 1..k``."""
    L = math.pi / math.sqrt(beta)
    h = L / (N + 1)
    m = np.arange(1, k + 1)
    return (4.0 / (h * h)) * np.sin(m * math.pi * h / (2.0 * L)) ** 2 - beta


def oracle_spectrum(g: float, beta: float, N: int = 4096, k: int = 5, method: str = "bisect") -> SpectralResult:
    """Lowest ``k`` levels of ``H(g)`` from the finite-difference matrix."""
    T = to_sturm(g, beta, N)
    vals = lowest_eigenvalues(T, k, method=method)
    return SpectralResult(
        list(enumerate(vals)),
        "oracle",
        g,
        beta,
        meta={"N": N, "h": T.h, "method": method, "singular_boundary": T.singular_boundary},
    )


def relative_errors(result: SpectralResult) -> np.ndarray:
    """``|E_oracle - E_closed| / ((n+1)^2 beta)`` for each line of ``result``."""
    n = np.array([m for m, _ in result.lines])
    exact = energy(n, result.g, result.beta)
    return np.abs(result.levels - exact) / ((n + 1.0) ** 2 * result.beta)
