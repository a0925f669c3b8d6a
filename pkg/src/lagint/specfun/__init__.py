"""Real-argument special-function evaluators returning values and analytic derivatives.

Every evaluator accepts a scalar or an array argument and returns a
:class:`FnEval` (floats for scalar input, arrays otherwise).  The compiled
kernels run under numba unless ``LAGINT_DISABLE_NUMBA=1`` is set, in which
case the vectorized numpy implementations are used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ._core import FnEval
from .airy import eval_airy_scorer
from .bessel import eval_bessel
from .elliptic import eval_elliptic
from .gamma import eval_gamma
from .hypergeometric import eval_hyp2f1
from .legendre import eval_legendre
from .struve import eval_struve_lommel
from ..errors import ParameterError


class Family(str, enum.Enum):
    BesselJ = "BesselJ"
    BesselY = "BesselY"
    BesselI = "BesselI"
    BesselK = "BesselK"
    AiryAi = "AiryAi"
    AiryBi = "AiryBi"
    ScorerGi = "ScorerGi"
    ScorerHi = "ScorerHi"
    LegendreP = "LegendreP"
    LegendreQ = "LegendreQ"
    AssocLegendreP = "AssocLegendreP"
    AssocLegendreQ = "AssocLegendreQ"
    Hyp2F1 = "Hyp2F1"
    EllipticK = "EllipticK"
    EllipticE = "EllipticE"
    StruveH = "StruveH"
    LommelS = "LommelS"
    Gamma = "Gamma"


ARITY = {
    Family.BesselJ: 1, Family.BesselY: 1, Family.BesselI: 1, Family.BesselK: 1,
    Family.AiryAi: 0, Family.AiryBi: 0, Family.ScorerGi: 0, Family.ScorerHi: 0,
    Family.LegendreP: 1, Family.LegendreQ: 1,
    Family.AssocLegendreP: 2, Family.AssocLegendreQ: 2,
    Family.Hyp2F1: 3, Family.EllipticK: 0, Family.EllipticE: 0,
    Family.StruveH: 1, Family.LommelS: 2, Family.Gamma: 0,
}


@dataclass(frozen=True)
class SpecFnId:
    """A special function family together with its real parameters."""

    family: Family
    parameters: tuple = field(default_factory=tuple)

    def __post_init__(self):
        fam = Family(self.family)
        params = tuple(float(p) for p in self.parameters)
        if len(params) != ARITY[fam]:
            raise ParameterError(f"{fam.value} takes {ARITY[fam]} parameter(s), got {len(params)}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "parameters", params)

    def __call__(self, x) -> FnEval:
        return evaluate(self, x)


def evaluate(spec: SpecFnId, x) -> FnEval:
    """Dispatch a :class:`SpecFnId` to its evaluator."""
    fam, p = spec.family, spec.parameters
    if fam.value.startswith("Bessel"):
        return eval_bessel(fam.value[-1], p[0], x)
    if fam in (Family.AiryAi, Family.AiryBi, Family.ScorerGi, Family.ScorerHi):
        return eval_airy_scorer(fam.value[-2:], x)
    if fam is Family.LegendreP:
        return eval_legendre("P", p[0], 0.0, x)
    if fam is Family.LegendreQ:
        return eval_legendre("Q", p[0], 0.0, x)
    if fam is Family.AssocLegendreP:
        return eval_legendre("P", p[0], p[1], x)
    if fam is Family.AssocLegendreQ:
        return eval_legendre("Q", p[0], p[1], x)
    if fam is Family.Hyp2F1:
        return eval_hyp2f1(p[0], p[1], p[2], x)
    if fam is Family.EllipticK:
        return eval_elliptic("K", x)
    if fam is Family.EllipticE:
        return eval_elliptic("E", x)
    if fam is Family.StruveH:
        return eval_struve_lommel("StruveH", 0.0, p[0], x)
    if fam is Family.LommelS:
        return eval_struve_lommel("LommelS", p[0], p[1], x)
    return eval_gamma(x)


__all__ = [
    "ARITY",
    "Family",
    "FnEval",
    "SpecFnId",
    "evaluate",
    "eval_airy_scorer",
    "eval_bessel",
    "eval_elliptic",
    "eval_gamma",
    "eval_hyp2f1",
    "eval_legendre",
    "eval_struve_lommel",
]
