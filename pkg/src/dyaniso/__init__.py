"""
dyaniso - anisotropic long-range interactions between ground-state dysprosium atoms.

Builds the dispersion (C6) and magnetic dipole-dipole (C3) interaction matrices of a
pair of j = 8 atoms, their adiabatic potentials and splitting scales, and first
estimates of spin-changing loss rates from a universal absorbing-boundary model and
the Born approximation.
"""

__version__ = "0.1.0"
__author__ = "dyaniso developers"

from .client import PairInteractionClient
from .core.config import Settings
from .core.run_config import RunConfig, load_run_config
from .models import (
    AdiabaticSpectrum,
    KTensor,
    Parity,
    PotentialCurveSet,
    RateTable,
    SpectrumSummary,
)

__all__ = [
    "PairInteractionClient",
    "Settings",
    "RunConfig",
    "load_run_config",
    "AdiabaticSpectrum",
    "KTensor",
    "Parity",
    "PotentialCurveSet",
    "RateTable",
    "SpectrumSummary",
]
