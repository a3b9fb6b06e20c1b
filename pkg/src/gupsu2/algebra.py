"""Exact ladder-operator algebra on the family ``P(p) * (1 + beta p^2)^(-s/2)``.

Every operator used in the momentum-space factorization (``A``, ``Abar``,
``H``, ``Htilde``) and in the two realizations of the potential algebra
maps this family into itself, so identities between operators reduce to
identities between polynomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np
from numpy.polynomial import polynomial as npoly

#: coefficients below this magnitude are dropped when canonicalizing
COEFF_FLOOR = 1e-300

#: default tolerance for exact-identity residuals
RESIDUAL_TOL = 1e-12


def _trim(coeffs: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(coeffs) >= COEFF_FLOOR)
    if nz.size == 0:
        return np.zeros(0)
    return coeffs[: nz[-1] + 1]


def _padded_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(max(a.size, b.size))
    out[: a.size] += a
    out[: b.size] += b
    return out


@dataclass(frozen=True, eq=False)
class AlgebraicFunction:
    """The function ``P(p) * (1 + beta p^2)^(-s/2)``.

    Parameters
    ----------
    coeffs : array_like
        Coefficients of ``P`` in ascending powers of ``p``.
    s : float
        Exponent of the algebraic factor.
    beta : float
        Deformation parameter, strictly positive.
    """

    coeffs: np.ndarray
    s: float
    beta: float

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float, ndmin=1)
        if c.ndim != 1:
            raise ValueError("coeffs must be one-dimensional")
        if not np.all(np.isfinite(c)):
            raise ValueError("coeffs must be finite")
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise ValueError(f"beta must be positive, got {self.beta}")
        c = _trim(c)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "beta", float(self.beta))

    @classmethod
    def zero(cls, s: float, beta: float) -> "AlgebraicFunction":
        return cls(np.zeros(0), s, beta)

    @property
    def degree(self) -> int:
        """Degree of ``P``; ``-1`` for the zero function."""
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def magnitude(self) -> float:
        """Largest absolute coefficient (0 for the zero function)."""
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def __call__(self, p):
        p = np.asarray(p, dtype=float)
        poly = npoly.polyval(p, self.coeffs) if self.coeffs.size else np.zeros_like(p)
        return poly * (1.0 + self.beta * p * p) ** (-0.5 * self.s)

    def _check_compatible(self, other: "AlgebraicFunction") -> None:
        if self.beta != other.beta:
            raise ValueError(f"beta mismatch: {self.beta} vs {other.beta}")
        if self.s != other.s:
            raise ValueError(f"exponent mismatch: {self.s} vs {other.s}")

    def __add__(self, other: "AlgebraicFunction") -> "AlgebraicFunction":
        if not isinstance(other, AlgebraicFunction):
            return NotImplemented
        self._check_compatible(other)
        return AlgebraicFunction(_padded_sum(self.coeffs, other.coeffs), self.s, self.beta)

    def __neg__(self) -> "AlgebraicFunction":
        return AlgebraicFunction(-self.coeffs, self.s, self.beta)

    def __sub__(self, other: "AlgebraicFunction") -> "AlgebraicFunction":
        if not isinstance(other, AlgebraicFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "AlgebraicFunction":
        if isinstance(scalar, AlgebraicFunction):
            return NotImplemented
        return AlgebraicFunction(float(scalar) * self.coeffs, self.s, self.beta)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AlgebraicFunction":
        return self * (1.0 / float(scalar))

    def __repr__(self) -> str:
        return (
            f"AlgebraicFunction(coeffs={self.coeffs.tolist()!r}, "
            f"s={self.s!r}, beta={self.beta!r})"
        )

    def to_dict(self) -> dict:
        return {"beta": self.beta, "s": self.s, "coeffs": self.coeffs.tolist()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "AlgebraicFunction":
        return cls(data["coeffs"], data["s"], data["beta"])


def residual(diff: AlgebraicFunction, scale: float) -> float:
    """Max absolute coefficient of ``diff`` relative to ``scale``."""
    if scale == 0.0:
        return diff.magnitude
    return diff.magnitude / scale


def _first_order(f: AlgebraicFunction, sign: float, g: float) -> AlgebraicFunction:
    # sign * (1 + beta p^2) f' + g beta p f on P (1+beta p^2)^(-s/2) gives, power by power,
    #   p^k     <- sign * (k+1) c_{k+1}
    #   p^{k+1} <- beta c_k (sign * k + g - sign * s)
    # the bracket is formed first so that exact cancellations (half-integer labels) stay exact
    if f.is_zero:
        return f
    c = f.coeffs
    n = c.size
    k = np.arange(n, dtype=float)
    out = np.zeros(n + 1)
    out[: n - 1] += sign * k[1:] * c[1:]
    out[1:] += f.beta * c * (sign * k + g - sign * f.s)
    return AlgebraicFunction(out, f.s, f.beta)


def apply_A(g: float, f: AlgebraicFunction) -> AlgebraicFunction:
    """``A(g) f = (1 + beta p^2) f' + g beta p f``."""
    return _first_order(f, 1.0, g)


def apply_Abar(g: float, f: AlgebraicFunction) -> AlgebraicFunction:
    """``Abar(g) f = -(1 + beta p^2) f' + g beta p f``."""
    return _first_order(f, -1.0, g)


def apply_H(g: float, f: AlgebraicFunction) -> AlgebraicFunction:
    """``H(g) = Abar(g) A(g)``."""
    return apply_Abar(g, apply_A(g, f))


def apply_Htilde(g: float, f: AlgebraicFunction) -> AlgebraicFunction:
    """``Htilde(g) = A(g) Abar(g)``."""
    return apply_A(g, apply_Abar(g, f))


def shape_invariance_residual(g: float, f: AlgebraicFunction) -> float:
    """Relative residual of ``Htilde(g) f - H(g+1) f - (2g+1) beta f``."""
    diff = apply_Htilde(g, f) - apply_H(g + 1.0, f) - (2.0 * (g + 1.0) - 1.0) * f.beta * f
    return residual(diff, f.magnitude)


def _canon_label(label: float) -> float:
    # labels are reached by repeated +/-1 steps; snap away the accumulated rounding
    return round(float(label), 10) + 0.0


class _LabelledState:
    """Finite map from a real label to an ``AlgebraicFunction``.

    Labels in one state differ by integers. Zero components are dropped.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Mapping[float, AlgebraicFunction] | None = None):
        comps = {}
        for label, f in (components or {}).items():
            if not isinstance(f, AlgebraicFunction):
                raise TypeError(f"component {label!r} is not an AlgebraicFunction")
            if not f.is_zero:
                comps[_canon_label(label)] = f
        labels = sorted(comps)
        if labels:
            offsets = np.asarray(labels) - labels[0]
            if not np.allclose(offsets, np.round(offsets), rtol=0, atol=1e-12):
                raise ValueError(f"labels must differ by integers, got {labels}")
            betas = {f.beta for f in comps.values()}
            if len(betas) > 1:
                raise ValueError(f"beta mismatch across components: {sorted(betas)}")
        self._components = MappingProxyType({k: comps[k] for k in labels})

    @property
    def components(self) -> Mapping[float, AlgebraicFunction]:
        return self._components

    @property
    def is_zero(self) -> bool:
        return not self._components

    @property
    def magnitude(self) -> float:
        return max((f.magnitude for f in self._components.values()), default=0.0)

    def _combine(self, other, sign: float):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._components)
        for label, f in other.components.items():
            g = sign * f
            out[label] = out[label] + g if label in out else g
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1.0)

    def __sub__(self, other):
        return self._combine(other, -1.0)

    def __mul__(self, scalar):
        return type(self)({k: scalar * f for k, f in self._components.items()})

    __rmul__ = __mul__

    def map(self, fn) -> "_LabelledState":
        """Apply ``fn(label, f) -> (new_label, new_f)`` to every component."""
        out: dict[float, AlgebraicFunction] = {}
        for label, f in self._components.items():
            new_label, new_f = fn(label, f)
            new_label = _canon_label(new_label)
            out[new_label] = out[new_label] + new_f if new_label in out else new_f
        return type(self)(out)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self._components)!r})"


class ModeState(_LabelledState):
    """Superposition ``sum_g f_g(p) e^{i g theta}`` over weights ``g``."""

    @property
    def modes(self) -> Mapping[float, AlgebraicFunction]:
        return self._components


class SequenceState(_LabelledState):
    """Function of a discrete index ``n`` with values in the function family."""

    @property
    def entries(self) -> Mapping[float, AlgebraicFunction]:
        return self._components


def state_residual(diff: _LabelledState, scale: float) -> float:
    if scale == 0.0:
        return diff.magnitude
    return diff.magnitude / scale


# -- angular realization: J_z = -i d/dtheta, J+ = e^{i theta} A(J_z), J- = Abar(J_z) e^{-i theta}


def apply_Jplus(st: ModeState) -> ModeState:
    return st.map(lambda g, f: (g + 1.0, apply_A(g, f)))


def apply_Jminus(st: ModeState) -> ModeState:
    return st.map(lambda g, f: (g - 1.0, apply_Abar(g - 1.0, f)))


def apply_Jz(st: ModeState) -> ModeState:
    return st.map(lambda g, f: (g, g * f))


def _number_shift(st: _LabelledState) -> _LabelledState:
    # 2 beta (J_z - 1/2) acting componentwise
    return st.map(lambda g, f: (g, 2.0 * f.beta * (g - 0.5) * f))


def commutator_residuals(st: ModeState) -> tuple[float, float]:
    """Residuals of ``[J+, J-] = 2 beta (J_z - 1/2)`` and ``[J_z, J+] = J+``."""
    if st.is_zero:
        return 0.0, 0.0
    scale = st.magnitude
    jp, jm, jz = apply_Jplus, apply_Jminus, apply_Jz
    lhs1 = jp(jm(st)) - jm(jp(st))
    r1 = state_residual(lhs1 - _number_shift(st), scale)
    lhs2 = jz(jp(st)) - jp(jz(st))
    r2 = state_residual(lhs2 - jp(st), scale)
    return r1, r2


# -- index realization: J_z = n, J+ = e^{-d/dn} A(n), J- = Abar(n) e^{d/dn}


def caseA_Jplus(st: SequenceState) -> SequenceState:
    """``(J+ psi)(n) = A(n-1) psi(n-1)``: the entry at ``n`` moves to ``n+1``."""
    return st.map(lambda n, f: (n + 1.0, apply_A(n, f)))


def caseA_Jminus(st: SequenceState) -> SequenceState:
    """``(J- psi)(n) = Abar(n) psi(n+1)``: the entry at ``n`` moves to ``n-1``."""
    return st.map(lambda n, f: (n - 1.0, apply_Abar(n - 1.0, f)))


def caseA_Jz(st: SequenceState) -> SequenceState:
    return st.map(lambda n, f: (n, n * f))


def appendixA_residuals(st: SequenceState) -> tuple[float, float, float]:
    """Residuals of the index-realization product and commutator identities.

    Returns the residuals of ``J- J+ = Abar(n) A(n)``,
    ``J+ J- = A(n-1) Abar(n-1)`` and ``[J+, J-] = 2 beta (n - 1/2)``,
    each relative to the largest input coefficient.
    """
    if st.is_zero:
        return 0.0, 0.0, 0.0
    scale = st.magnitude
    jp, jm = caseA_Jplus, caseA_Jminus
    mp = jm(jp(st))
    pm = jp(jm(st))
    r1 = state_residual(mp - st.map(lambda n, f: (n, apply_H(n, f))), scale)
    r2 = state_residual(pm - st.map(lambda n, f: (n, apply_Htilde(n - 1.0, f))), scale)
    r3 = state_residual(pm - mp - _number_shift(st), scale)
    return r1, r2, r3
