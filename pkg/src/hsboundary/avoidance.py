"""Weight avoidance of the boundary motive, computed two independent ways.

:func:`closed_form_avoidance` runs the case analysis on ``k1, k2`` directly.
:func:`profile_avoidance` knows nothing about the cases: it aggregates the
perverse bounds extracted from the stratum profiles.  The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidBeta
from .lattice import (
    HighestWeight,
    ParallelPresentation,
    _is_constant,
    classify_weight,
    kostant_parallel_presentations,
)
from .profiles import Condition, perverse_bounds
from .weyl import KLINGEN, SIEGEL

ALL = "ALL"


@dataclass(frozen=True, order=True)
class AppearingWeight:
    weight: int
    condition: Condition

    def to_json(self) -> dict:
        return {"w": self.weight, "condition": self.condition.value}


@dataclass(frozen=True)
class AvoidanceReport:
    lam: HighestWeight
    corank: int
    completely_irregular: bool
    presentations: tuple[ParallelPresentation, ...]
    boundary_zero: bool
    avoided_interval: Union[None, str, tuple[int, int]]
    appearing_weights: tuple[AppearingWeight, ...]
    weights01_present: bool
    intersection_motive_exists: bool
    multi_presentation: bool

    @property
    def beta(self) -> Optional[int]:
        """The largest avoided ``beta``; ``None`` for the zero motive, 0 if nothing is avoided."""
        if self.boundary_zero:
            return None
        return self.avoided_interval[1] if self.avoided_interval else 0

    def to_json(self) -> dict:
        if self.avoided_interval == ALL:
            interval = ALL
        elif self.avoided_interval is None:
            interval = None
        else:
            interval = {"lo": self.avoided_interval[0], "hi": self.avoided_interval[1]}
        return {
            "lambda": self.lam.to_json(),
            "corank": self.corank,
            "completelyIrregular": self.completely_irregular,
            "presentations": [p.to_json() for p in self.presentations],
            "boundaryZero": self.boundary_zero,
            "avoidedInterval": interval,
            "appearingWeights": [a.to_json() for a in self.appearing_weights],
            "weights01Present": self.weights01_present,
            "intersectionMotiveExists": self.intersection_motive_exists,
            "multiPresentation": self.multi_presentation,
        }


def _pair(beta: int, cond: Condition) -> list[AppearingWeight]:
    return [AppearingWeight(-beta, cond), AppearingWeight(beta + 1, cond)]


def _normalize(appearing) -> tuple[AppearingWeight, ...]:
    always = {a.weight for a in appearing if a.condition is Condition.ALWAYS}
    kept = {a for a in appearing if a.condition is Condition.ALWAYS or a.weight not in always}
    return tuple(sorted(kept, key=lambda a: (a.weight, a.condition.value)))


def _parity_holds(lam: HighestWeight) -> bool:
    return _is_constant(lam.k1) and _is_constant(lam.k2) and (lam.k1[0] - lam.k2[0]) % 2 == 0


def _weights01(lam: HighestWeight, boundary_zero, interval, appearing) -> bool:
    if boundary_zero or interval is not None:
        return False
    seen = {
        a.weight
        for a in appearing
        if a.condition is Condition.ALWAYS or _parity_holds(lam)
    }
    return {0, 1} <= seen


def _report(lam, presentations, beta, appearing) -> AvoidanceReport:
    cls = classify_weight(lam)
    boundary_zero = beta is None
    if boundary_zero:
        interval, appearing = ALL, ()
    else:
        interval = (-beta + 1, beta) if beta >= 1 else None
        appearing = _normalize(appearing)
    present = _weights01(lam, boundary_zero, interval, appearing)
    return AvoidanceReport(
        lam=lam,
        corank=cls.corank,
        completely_irregular=cls.completely_irregular,
        presentations=tuple(presentations),
        boundary_zero=boundary_zero,
        avoided_interval=interval,
        appearing_weights=appearing,
        weights01_present=present,
        intersection_motive_exists=not present,
        multi_presentation=len(presentations) > 1,
    )


def closed_form_avoidance(lam: HighestWeight) -> AvoidanceReport:
    d = lam.d
    presentations = kostant_parallel_presentations(lam)
    cor = classify_weight(lam).corank
    if not presentations:
        return _report(lam, presentations, None, ())
    if cor == 0:
        kappa = presentations[0].kappa
        d1 = min(p.d1 for p in presentations)
        beta = d1 + d * kappa
        return _report(lam, presentations, beta, _pair(beta, Condition.ALWAYS))
    kappa2 = lam.k2[0]
    if not _is_constant(lam.k1):
        beta = d * kappa2
        return _report(lam, presentations, beta, _pair(beta, Condition.ALWAYS))
    kappa1 = lam.k1[0]
    beta = d * min(kappa1 - kappa2, kappa2)
    appearing = _pair(d * kappa2, Condition.ALWAYS) + _pair(
        d * (kappa1 - kappa2), Condition.IF_PARITY
    )
    return _report(lam, presentations, beta, appearing)


def profile_avoidance(lam: HighestWeight) -> AvoidanceReport:
    bounds = [perverse_bounds(lam, s) for s in (SIEGEL, KLINGEN)]
    live = [b for b in bounds if b.applicable]
    presentations = kostant_parallel_presentations(lam)
    if not live:
        return _report(lam, presentations, None, ())
    beta = min(b.beta for b in live)
    appearing = []
    for b in live:
        for a in b.attained:
            appearing += _pair(a.degree - a.weight, a.condition)
    return _report(lam, presentations, beta, appearing)


def check_avoids(lam: HighestWeight, beta: int) -> bool:
    """Does the boundary motive avoid the weights ``-beta+1 .. beta``?"""
    if beta < 1:
        raise InvalidBeta(f"beta must be at least 1, got {beta}")
    for stratum in (SIEGEL, KLINGEN):
        b = perverse_bounds(lam, stratum)
        if b.applicable and b.beta < beta:
            return False
    return True


def weights01_present(lam: HighestWeight) -> bool:
    return profile_avoidance(lam).weights01_present
