"""Kostant summands along the two boundary strata.

A decomposition assigns each embedding a level in {0, 1, 2, 3}; the summand
it indexes sits in cohomological degree ``q = sum of levels``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Optional

from .errors import DimensionMismatch
from .lattice import HighestWeight
from .weyl import KLINGEN, SIEGEL, Character, WeylElement


@dataclass(frozen=True, order=True)
class KostantDecomposition:
    levels: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.levels)

    @property
    def q(self) -> int:
        return sum(self.levels)

    @property
    def parts(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(s for s, lv in enumerate(self.levels) if lv == i) for i in range(4)
        )

    @classmethod
    def from_parts(cls, d: int, *parts) -> "KostantDecomposition":
        levels = [None] * d
        for i, part in enumerate(parts):
            for s in part:
                if levels[s] is not None:
                    raise ValueError(f"embedding {s} appears in two parts")
                levels[s] = i
        if None in levels:
            raise ValueError("parts do not cover every embedding")
        return cls(tuple(levels))

    def to_json(self) -> dict:
        return {f"I{i}": sorted(p) for i, p in enumerate(self.parts)}


@lru_cache(maxsize=None)
def _all_decompositions(d: int) -> tuple[KostantDecomposition, ...]:
    return tuple(KostantDecomposition(lv) for lv in product(range(4), repeat=d))


def decompositions(d: int, q: int) -> list[KostantDecomposition]:
    if d < 1:
        raise ValueError("d must be positive")
    return [psi for psi in _all_decompositions(d) if psi.q == q]


def decomposition_of(w: WeylElement) -> KostantDecomposition:
    return KostantDecomposition(w.factor_lengths())


# Levi highest weight of the summand, per level, as a function of (k1, k2).
_LEVI_TABLE: dict[int, tuple[Callable[[int, int], tuple[int, int]], ...]] = {
    SIEGEL: (
        lambda a, b: (a, b),
        lambda a, b: (a, -b - 2),
        lambda a, b: (b - 1, -a - 3),
        lambda a, b: (-b - 3, -a - 3),
    ),
    KLINGEN: (
        lambda a, b: (a, b),
        lambda a, b: (b - 1, a + 1),
        lambda a, b: (-b - 3, a + 1),
        lambda a, b: (-a - 4, b),
    ),
}

# Per-embedding contribution subtracted from w(lambda) in the weight formula.
_HODGE_TERMS = {
    SIEGEL: (
        lambda a, b: a + b,
        lambda a, b: a - b - 2,
        lambda a, b: -(a - b + 4),
        lambda a, b: -(a + b + 6),
    ),
    KLINGEN: (
        lambda a, b: a,
        lambda a, b: b - 1,
        lambda a, b: -(b + 3),
        lambda a, b: -(a + 4),
    ),
}


@dataclass(frozen=True)
class LeviCharacter:
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    c: int
    stratum: int
    psi: KostantDecomposition
    hodge_weight: int

    @property
    def character(self) -> Character:
        return Character(self.e1, self.e2, self.c)

    def pairing_weight(self) -> int:
        """Weight read off from the Levi coordinates alone."""
        if self.stratum == SIEGEL:
            return -self.c - sum(self.e1) - sum(self.e2)
        return -self.c - sum(self.e1)

    def to_json(self) -> dict:
        return {
            "e1": list(self.e1),
            "e2": list(self.e2),
            "c": self.c,
            "hodgeWeight": self.hodge_weight,
        }


def _check(lam: HighestWeight, psi: KostantDecomposition, m: int) -> None:
    if lam.d != psi.d:
        raise DimensionMismatch(f"weight has d={lam.d}, decomposition has d={psi.d}")
    if m not in (SIEGEL, KLINGEN):
        raise ValueError(f"unknown stratum {m!r}")


def hodge_weight(lam: HighestWeight, psi: KostantDecomposition, m: int) -> int:
    _check(lam, psi, m)
    terms = _HODGE_TERMS[m]
    return lam.motivic_weight - sum(terms[lv](a, b) for lv, (a, b) in zip(psi.levels, lam.pairs()))


def levi_weight(lam: HighestWeight, psi: KostantDecomposition, m: int) -> LeviCharacter:
    _check(lam, psi, m)
    table = _LEVI_TABLE[m]
    rows = [table[lv](a, b) for lv, (a, b) in zip(psi.levels, lam.pairs())]
    return LeviCharacter(
        e1=tuple(r[0] for r in rows),
        e2=tuple(r[1] for r in rows),
        c=lam.c,
        stratum=m,
        psi=psi,
        hodge_weight=hodge_weight(lam, psi, m),
    )


def parallel_condition(lam: HighestWeight, psi: KostantDecomposition, m: int) -> Optional[int]:
    """The kappa for which the unit group acts trivially on the summand, if any."""
    _check(lam, psi, m)
    terms = _HODGE_TERMS[m]
    values = {terms[lv](a, b) for lv, (a, b) in zip(psi.levels, lam.pairs())}
    return values.pop() if len(values) == 1 else None


def admissible_decompositions(
    lam: HighestWeight, q: int, m: int
) -> list[tuple[KostantDecomposition, int]]:
    out = []
    for psi in decompositions(lam.d, q):
        kappa = parallel_condition(lam, psi, m)
        if kappa is not None:
            out.append((psi, kappa))
    return out
