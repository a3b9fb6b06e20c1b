"""Exact su(2) potential-algebra solution of minimal-length oscillators.

Subpackages are flat modules:

- :mod:`gupsu2.algebra`: the function family and ladder operators
- :mod:`gupsu2.su2`: representation labels, norms and the closed-form spectrum
- :mod:`gupsu2.eigenfunctions`: exact inner product and normalized states
- :mod:`gupsu2.oracle`: finite-difference eigenvalue oracle
- :mod:`gupsu2.models`: harmonic and Dirac oscillators
"""

from .algebra import (
    AlgebraicFunction,
    ModeState,
    SequenceState,
    apply_A,
    apply_Abar,
    apply_H,
    apply_Htilde,
    apply_Jminus,
    apply_Jplus,
    apply_Jz,
    shape_invariance_residual,
)
from .eigenfunctions import (
    DivergentIntegralError,
    eigenfunction,
    gegenbauer,
    ground_profile,
    inner_product,
    norm,
    normalization_report,
    rep_state,
    xi,
)
from .models import DiracGUP, HarmonicGUP, dirac_energy, harmonic_energy, minimal_length
from .oracle import TridiagonalOperator, oracle_spectrum, sturm_count, to_sturm
from .su2 import (
    RepLabel,
    SpectralResult,
    casimir_eigenvalue,
    closed_form_spectrum,
    descent_coefficient,
    energy,
    ladder_norm_down,
    ladder_norm_up,
    validate_label,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicFunction",
    "ModeState",
    "SequenceState",
    "apply_A",
    "apply_Abar",
    "apply_H",
    "apply_Htilde",
    "apply_Jminus",
    "apply_Jplus",
    "apply_Jz",
    "shape_invariance_residual",
    "DivergentIntegralError",
    "eigenfunction",
    "gegenbauer",
    "ground_profile",
    "inner_product",
    "norm",
    "normalization_report",
    "rep_state",
    "xi",
    "DiracGUP",
    "HarmonicGUP",
    "dirac_energy",
    "harmonic_energy",
    "minimal_length",
    "TridiagonalOperator",
    "oracle_spectrum",
    "sturm_count",
    "to_sturm",
    "RepLabel",
    "SpectralResult",
    "casimir_eigenvalue",
    "closed_form_spectrum",
    "descent_coefficient",
    "energy",
    "ladder_norm_down",
    "ladder_norm_up",
    "validate_label",
]
