"""Unitary su(2) representation data for the potential algebra.

States ``|j, g>`` carry the Casimir eigenvalue ``j^2 - 1/4`` and weight
``g``. The ``n``-th excited level of ``H(g)`` is the state ``|g + n, g>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

_LABEL_ATOL = 1e-12


def _is_integer(x: float) -> bool:
    return abs(x - round(x)) <= _LABEL_ATOL


def validate_label(j: float, g: float) -> bool:
    """True iff ``2j`` is a positive integer and ``g`` is in ``{j, j-1, ..., 1-j}``."""
    two_j = 2.0 * j
    if not _is_integer(two_j) or round(two_j) < 1:
        return False
    if not _is_integer(j - g):
        return False
    return 1.0 - j - _LABEL_ATOL <= g <= j + _LABEL_ATOL


def _require_label(j: float, g: float) -> None:
    if not validate_label(j, g):
        raise ValueError(f"invalid su(2) label (j={j}, g={g})")


@dataclass(frozen=True)
class RepLabel:
    """A validated su(2) label ``|j, g>``."""

    j: float
    g: float

    def __post_init__(self):
        _require_label(self.j, self.g)

    @property
    def casimir(self) -> float:
        return casimir_eigenvalue(self.j)

    @property
    def descents(self) -> int:
        """Number of lowering steps from the highest weight ``|j, j>``."""
        return int(round(self.j - self.g))


def labels(j_max: float) -> list[RepLabel]:
    """All valid labels with ``j <= j_max``, ordered by ``j`` then descending ``g``."""
    out = []
    for two_j in range(1, int(math.floor(2 * j_max + _LABEL_ATOL)) + 1):
        j = two_j / 2
        for k in range(two_j):
            out.append(RepLabel(j, j - k))
    return out


def _root(arg: float, what: str) -> float:
    if arg < 0.0:
        if arg > -1e-14:
            return 0.0
        raise ValueError(f"{what}: negative norm squared {arg}")
    return math.sqrt(arg)


def ladder_norm_up(j: float, g: float, beta: float) -> float:
    """``||J+ |j,g>|| = sqrt(beta (j^2 - g^2))``."""
    _require_label(j, g)
    return _root(beta * (j * j - g * g), "ladder_norm_up")


def ladder_norm_down(j: float, g: float, beta: float) -> float:
    """``||J- |j,g>|| = sqrt(beta (j^2 - (g-1)^2))``."""
    _require_label(j, g)
    return _root(beta * (j * j - (g - 1.0) ** 2), "ladder_norm_down")


def casimir_eigenvalue(j: float) -> float:
    if j < 0.5:
        raise ValueError(f"j must be >= 1/2, got {j}")
    return j * j - 0.25


def energy(n, g: float, beta: float):
    """Level ``n`` of ``H(g)``: ``(n^2 + 2 n g) beta``.

    Any real ``g > 0`` is accepted; ``n`` may be an integer or an integer array.
    """
    n = np.asarray(n) if not np.isscalar(n) else n
    return (n * n + 2.0 * n * g) * beta


def descent_coefficient(j: float, g: float, beta: float) -> float:
    """Normalization of ``(J-)^{j-g} |j,j>`` giving the unit state ``|j,g>``.

    Evaluated through log-gamma differences so that large ``j`` does not
    overflow.
    """
    _require_label(j, g)
    d = round(j - g)
    log_c2 = (
        math.lgamma(j + g)
        - d * math.log(beta)
        - math.lgamma(2.0 * j)
        - math.lgamma(d + 1.0)
    )
    return math.exp(0.5 * log_c2)


def descent_coefficient_n(n: int, g: float, beta: float) -> float:
    """``descent_coefficient(g + n, g, beta)`` for any real ``g > 0``."""
    if g <= 0:
        raise ValueError(f"g must be positive, got {g}")
    if n < 0 or int(n) != n:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    log_c2 = (
        math.lgamma(2.0 * g + n)
        - n * math.log(beta)
        - math.lgamma(n + 1.0)
        - math.lgamma(2.0 * g + 2.0 * n)
    )
    return math.exp(0.5 * log_c2)


@dataclass(frozen=True)
class SpectralResult:
    """Energy levels ``(n, E_n)`` of ``H(g)`` and where they came from."""

    lines: Sequence[tuple[int, float]]
    source: str
    g: float
    beta: float
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.source not in ("closed-form", "oracle"):
            raise ValueError(f"unknown source {self.source!r}")
        object.__setattr__(self, "lines", tuple((int(n), float(e)) for n, e in self.lines))

    @property
    def levels(self) -> np.ndarray:
        return np.array([e for _, e in self.lines])

    def is_increasing(self) -> bool:
        lv = self.levels
        return bool(np.all(np.diff(lv) > 0))


def closed_form_spectrum(g: float, beta: float, n_max: int) -> SpectralResult:
    if n_max < 0:
        return SpectralResult((), "closed-form", g, beta)
    ns = range(n_max + 1)
    return SpectralResult([(n, energy(n, g, beta)) for n in ns], "closed-form", g, beta)
