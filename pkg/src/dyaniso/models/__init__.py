from .atomic import KTensor, TransitionLine
from .potentials import (
    AdiabaticSpectrum,
    BlockDeviation,
    C6EquivalenceReport,
    CoupledState,
    Crossing,
    OmegaBlock,
    Parity,
    PotentialCurveSet,
    ScaleCurve,
    ScaleKind,
    SpectrumSummary,
)
from .scattering import (
    BarrierInfo,
    BornRates,
    CollisionConfig,
    RateTable,
    SMatrixEntry,
    TotalRate,
)

__all__ = [
    "AdiabaticSpectrum",
    "BarrierInfo",
    "BlockDeviation",
    "BornRates",
    "C6EquivalenceReport",
    "CollisionConfig",
    "CoupledState",
    "Crossing",
    "KTensor",
    "OmegaBlock",
    "Parity",
    "PotentialCurveSet",
    "RateTable",
    "SMatrixEntry",
    "ScaleCurve",
    "ScaleKind",
    "SpectrumSummary",
    "TotalRate",
    "TransitionLine",
]
