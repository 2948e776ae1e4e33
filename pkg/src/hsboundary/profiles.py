"""Degree-by-degree degeneration profiles along the boundary strata.

Degrees in the profiles are classical; :func:`perverse_bounds` converts them
to perverse degrees and extracts the weight bound ``weight <= n - beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .kostant import KostantDecomposition, admissible_decompositions, levi_weight
from .lattice import HighestWeight, _is_constant, kostant_parallel_presentations
from .weyl import KLINGEN, SIEGEL, STRATUM_NAMES


class Status(str, Enum):
    ZERO = "ZERO"
    NONZERO = "NONZERO"
    NONZERO_IF_PARITY = "NONZERO_IF_PARITY"
    MAY_BE_NONZERO = "MAY_BE_NONZERO"
    NOT_DETERMINED_BY_PAPER = "NOT_DETERMINED_BY_PAPER"

    @property
    def possibly_nonzero(self) -> bool:
        return self in (Status.NONZERO, Status.NONZERO_IF_PARITY, Status.MAY_BE_NONZERO)


class Condition(str, Enum):
    ALWAYS = "ALWAYS"
    IF_PARITY = "IF_PARITY"


@dataclass(frozen=True)
class Summand:
    psi: Optional[KostantDecomposition]
    source_degrees: Optional[tuple[int, int]]
    weight: Optional[int]
    status: Status

    def to_json(self) -> dict:
        return {
            "psi": self.psi.to_json() if self.psi is not None else None,
            "sourceDegrees": list(self.source_degrees) if self.source_degrees else None,
            "weight": self.weight,
            "status": self.status.value,
        }


_STRENGTH = [
    Status.NONZERO,
    Status.NONZERO_IF_PARITY,
    Status.MAY_BE_NONZERO,
    Status.NOT_DETERMINED_BY_PAPER,
    Status.ZERO,
]
_UNDETERMINED = Summand(None, None, None, Status.NOT_DETERMINED_BY_PAPER)


@dataclass(frozen=True)
class ProfileEntry:
    degree: int
    summands: tuple[Summand, ...] = ()

    @property
    def status(self) -> Status:
        if not self.summands:
            return Status.ZERO
        # strongest claim wins: NONZERO beats the conditional and open statuses
        return min((s.status for s in self.summands), key=_STRENGTH.index)

    @property
    def weights(self) -> list[int]:
        return [s.weight for s in self.summands if s.weight is not None]

    def to_json(self) -> dict:
        return {
            "n": self.degree,
            "status": self.status.value,
            "summands": [s.to_json() for s in self.summands],
        }


def entry_at(profile: list[ProfileEntry], n: int) -> ProfileEntry:
    for e in profile:
        if e.degree == n:
            return e
    return ProfileEntry(n)


def _uniform(d: int, level: int) -> KostantDecomposition:
    return KostantDecomposition((level,) * d)


def siegel_profile(lam: HighestWeight) -> list[ProfileEntry]:
    d, w = lam.d, lam.motivic_weight
    parallel = _is_constant(lam.k1) and _is_constant(lam.k2)
    k1, k2 = lam.k1[0], lam.k2[0]
    i0, i1 = _uniform(d, 0), _uniform(d, 1)
    out = []
    for n in range(0, 6 * d - 1):
        summands: list[Summand] = []
        if n < d:
            if parallel and k1 == k2:
                st = Status.NONZERO if n == 0 else Status.MAY_BE_NONZERO
                summands.append(Summand(i0, (n, 0), w - 2 * d * k1, st))
        elif n < 2 * d:
            if parallel:
                st = Status.NONZERO if (n == d and k1 != k2) else Status.MAY_BE_NONZERO
                summands.append(Summand(i0, (n, 0), w - d * (k1 + k2), st))
        elif n < 3 * d:
            if parallel:
                summands.append(Summand(i0, (n, 0), w - d * (k1 + k2), Status.MAY_BE_NONZERO))
                st = Status.NONZERO if n == 2 * d else Status.MAY_BE_NONZERO
                summands.append(Summand(i1, (n - d, d), w + 2 * d - d * (k1 - k2), st))
        else:
            summands.append(_UNDETERMINED)
        out.append(ProfileEntry(n, tuple(summands)))
    return out


def klingen_profile(lam: HighestWeight) -> list[ProfileEntry]:
    d, w = lam.d, lam.motivic_weight
    presentations = kostant_parallel_presentations(lam)
    upper = []
    for q in range(2 * d, 3 * d):
        for psi, kappa in admissible_decompositions(lam, q, KLINGEN):
            if set(psi.levels) <= {2, 3} and 2 in psi.levels:
                upper.append((psi, kappa))
    out = []
    for n in range(0, 4 * d):
        summands: list[Summand] = []
        if n < d:
            for p in presentations:
                if p.i0 and n >= p.d1:
                    psi = KostantDecomposition.from_parts(d, p.i0, p.i1)
                    summands.append(Summand(psi, (n - p.d1, p.d1), w - d * p.kappa, Status.NONZERO))
        elif n < 2 * d:
            for p in presentations:
                if p.i1 and n <= d - 1 + p.d1:
                    psi = KostantDecomposition.from_parts(d, p.i0, p.i1)
                    kappa2 = p.kappa + 1
                    summands.append(
                        Summand(psi, (n - p.d1, p.d1), w + d - d * kappa2, Status.NONZERO)
                    )
        elif n < 3 * d:
            for psi, kappa in upper:
                d3 = psi.levels.count(3)
                if 0 <= n - 2 * d - d3 <= d - 1:
                    kappa3 = -kappa - 3
                    summands.append(
                        Summand(psi, (n - psi.q, psi.q), w + 3 * d + d * kappa3, Status.NONZERO)
                    )
        else:
            summands.append(_UNDETERMINED)
        out.append(ProfileEntry(n, tuple(summands)))
    return out


@dataclass(frozen=True)
class CuspCharacter:
    h: tuple[int, ...]
    g: int

    def __post_init__(self):
        if any(x < 0 for x in self.h):
            raise ValueError(f"cusp character needs h >= 0, got {self.h}")

    @property
    def d(self) -> int:
        return len(self.h)

    def to_json(self) -> dict:
        return {"h": list(self.h), "g": self.g}


def restrict_to_cusp_torus(e1, e2, c: int) -> CuspCharacter:
    total = c + sum(e1) + sum(e2)
    if total % 2:
        raise ValueError("restriction needs c + sum(e1 + e2) even")
    return CuspCharacter(tuple(e2), total // 2)


def cusp_restriction(lam: HighestWeight) -> CuspCharacter:
    return restrict_to_cusp_torus(lam.k1, lam.k2, lam.c)


@dataclass(frozen=True)
class CuspSummand:
    subset: frozenset[int]
    l: tuple[int, ...]
    g: int
    weight: int


def hb_cusp_raw_decomposition(chi: CuspCharacter, q: int) -> list[CuspSummand]:
    """The one-dimensional pieces of ``H^q`` of the unipotent radical, one per ``|I| = q``."""
    out = []
    for subset in combinations(range(chi.d), q):
        s = frozenset(subset)
        l = tuple(-h - 2 if i in s else h for i, h in enumerate(chi.h))
        shift = sum(chi.h[i] + 1 for i in s)
        out.append(CuspSummand(s, l, chi.g - shift, -2 * chi.g + 2 * shift))
    return out


def hb_cusp_profile(chi: CuspCharacter, d: Optional[int] = None) -> list[ProfileEntry]:
    if d is not None and d != chi.d:
        raise ValueError(f"character has length {chi.d}, expected {d}")
    d = chi.d
    out = []
    for n in range(0, 2 * d):
        summands = []
        if _is_constant(chi.h):
            # only I = {} (q = 0) and I = everything (q = d) survive the unit group
            q = 0 if n < d else d
            (piece,) = hb_cusp_raw_decomposition(chi, q)
            summands.append(Summand(None, (n - q, q), piece.weight, Status.NONZERO))
        out.append(ProfileEntry(n, tuple(summands)))
    return out


def double_degeneration_profile(lam: HighestWeight) -> list[ProfileEntry]:
    """Degeneration of the Klingen summands in degrees ``[2d, 3d)`` along their own cusps."""
    d = lam.d
    by_degree: dict[int, list[Summand]] = {n: [] for n in range(2 * d)}
    for q in range(2 * d, 3 * d):
        for psi, _kappa in admissible_decompositions(lam, q, KLINGEN):
            if not (set(psi.levels) <= {2, 3} and 2 in psi.levels):
                continue
            levi = levi_weight(lam, psi, KLINGEN)
            chi = restrict_to_cusp_torus(levi.e1, levi.e2, levi.c)
            for entry in hb_cusp_profile(chi):
                for s in entry.summands:
                    by_degree[entry.degree].append(Summand(psi, s.source_degrees, s.weight, s.status))
    return [ProfileEntry(n, tuple(by_degree[n])) for n in range(2 * d)]


@dataclass(frozen=True)
class Attained:
    degree: int
    weight: int
    condition: Condition

    def to_json(self) -> dict:
        return {"n": self.degree, "weight": self.weight, "condition": self.condition.value}


@dataclass(frozen=True)
class PerverseBoundSet:
    stratum: int
    applicable: bool
    degree_range: tuple[int, int]
    beta: Optional[int]
    attained: tuple[Attained, ...]

    def to_json(self) -> dict:
        return {
            "stratum": STRATUM_NAMES[self.stratum],
            "applicable": self.applicable,
            "degreeRange": list(self.degree_range),
            "beta": self.beta,
            "attained": [a.to_json() for a in self.attained],
        }


def _bound(stratum, lo, hi, candidates) -> PerverseBoundSet:
    """``candidates``: (perverse n, perverse weight, attains-with condition or None)."""
    if not candidates:
        return PerverseBoundSet(stratum, False, (lo, hi), None, ())
    beta = min(n - wt for n, wt, _ in candidates)
    attained = sorted(
        {Attained(n, wt, cond) for n, wt, cond in candidates if cond and n - wt == beta},
        key=lambda a: (a.degree, a.weight, a.condition.value),
    )
    return PerverseBoundSet(stratum, True, (lo, hi), beta, tuple(attained))


def _siegel_bounds(lam: HighestWeight) -> PerverseBoundSet:
    d, w = lam.d, lam.motivic_weight
    candidates = []
    for entry in siegel_profile(lam):
        if entry.degree >= 3 * d:
            continue
        for s in entry.summands:
            if not s.status.possibly_nonzero:
                continue
            cond = None
            if s.status is Status.NONZERO:
                # beyond degree 2d the summand must also escape the adjunction kernel,
                # which is only known under the parity hypothesis
                cond = Condition.ALWAYS if entry.degree < 2 * d else Condition.IF_PARITY
            candidates.append((entry.degree + w, s.weight, cond))
    # the double degeneration feeds degrees [w+2d, w+3d) through the connecting map
    low = [s.weight for e in double_degeneration_profile(lam) if e.degree < d for s in e.summands]
    for n in range(w + 2 * d, w + 3 * d):
        for wt in set(low):
            candidates.append((n, wt, None))
    return _bound(SIEGEL, w, w + 3 * d - 1, candidates)


def _klingen_bounds(lam: HighestWeight) -> PerverseBoundSet:
    d, w = lam.d, lam.motivic_weight
    candidates = []
    for entry in klingen_profile(lam):
        if entry.degree >= 2 * d:
            continue
        for s in entry.summands:
            if s.status is Status.NONZERO:
                # the stratum has dimension d: both degree and weight shift by it
                candidates.append((entry.degree + w + d, s.weight + d, Condition.ALWAYS))
    return _bound(KLINGEN, w + d, w + 3 * d - 1, candidates)


def perverse_bounds(lam: HighestWeight, stratum: int) -> PerverseBoundSet:
    if stratum == SIEGEL:
        return _siegel_bounds(lam)
    if stratum == KLINGEN:
        return _klingen_bounds(lam)
    raise ValueError(f"unknown stratum {stratum!r}")
