"""Highest weights of the genus-2 Hilbert-Siegel group and their classification.

A weight is a pair of integer vectors ``k1, k2`` indexed by the real
embeddings ``0..d-1`` together with a central integer ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import EmptyEmbeddingSet, NotDominant, ParityViolation, WeightError


def _is_constant(xs: Sequence[int]) -> bool:
    return len(set(xs)) <= 1


@dataclass(frozen=True)
class HighestWeight:
    """A dominant character ``lambda((k1_s, k2_s)_s, c)``.

    Construction validates dominance and parity, so every instance is legal.
    Use :func:`make_weight` to build one from lists and a defaulted ``c``.
    """

    k1: tuple[int, ...]
    k2: tuple[int, ...]
    c: int

    def __post_init__(self):
        if len(self.k1) == 0 and len(self.k2) == 0:
            raise EmptyEmbeddingSet("at least one embedding is required")
        if len(self.k1) != len(self.k2):
            raise WeightError(
                f"k1 and k2 have different lengths ({len(self.k1)} vs {len(self.k2)})"
            )
        for s, (a, b) in enumerate(zip(self.k1, self.k2)):
            if not (a >= b >= 0):
                raise NotDominant(f"embedding {s}: need k1 >= k2 >= 0, got ({a}, {b})")
        if (sum(self.k1) + sum(self.k2) - self.c) % 2:
            raise ParityViolation(
                f"sum(k1 + k2) = {sum(self.k1) + sum(self.k2)} and c = {self.c} differ in parity"
            )

    @property
    def d(self) -> int:
        return len(self.k1)

    @property
    def motivic_weight(self) -> int:
        return -self.c

    def pairs(self):
        return zip(self.k1, self.k2)

    def with_c(self, c: int) -> "HighestWeight":
        return HighestWeight(self.k1, self.k2, c)

    def to_json(self) -> dict:
        return {"k1": list(self.k1), "k2": list(self.k2), "c": self.c}

    @classmethod
    def from_json(cls, obj: dict) -> "HighestWeight":
        if not isinstance(obj, dict) or "k1" not in obj or "k2" not in obj:
            raise WeightError('expected an object with keys "k1", "k2" and optional "c"')
        return make_weight(obj["k1"], obj["k2"], obj.get("c"))


def make_weight(k1: Iterable[int], k2: Iterable[int], c: Optional[int] = None) -> HighestWeight:
    """Validate and build a weight; ``c`` defaults to ``sum(k1) + sum(k2)``."""
    k1 = tuple(_as_int(x) for x in k1)
    k2 = tuple(_as_int(x) for x in k2)
    if not k1 or not k2:
        raise EmptyEmbeddingSet("at least one embedding is required")
    if c is None:
        c = sum(k1) + sum(k2)
    return HighestWeight(k1, k2, _as_int(c))


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise WeightError(f"expected an integer, got {x!r}")
    return x


@dataclass(frozen=True)
class ParallelPresentation:
    """A split of the embeddings with ``k1 == kappa`` on ``i0`` and ``k2 == kappa + 1`` on ``i1``."""

    kappa: int
    i0: frozenset[int]
    i1: frozenset[int]

    @property
    def d1(self) -> int:
        return len(self.i1)

    def sort_key(self):
        return (self.kappa, len(self.i1), sorted(self.i1))

    def holds_for(self, lam: HighestWeight) -> bool:
        full = frozenset(range(lam.d))
        if self.i0 | self.i1 != full or self.i0 & self.i1:
            return False
        if self.kappa < (0 if self.i0 else -1):
            return False
        return all(lam.k1[s] == self.kappa for s in self.i0) and all(
            lam.k2[s] == self.kappa + 1 for s in self.i1
        )

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "i0": sorted(self.i0), "i1": sorted(self.i1)}


@dataclass(frozen=True)
class WeightClassification:
    regular_at: tuple[bool, ...]
    corank: int
    motivic_weight: int

    @property
    def regular(self) -> bool:
        return all(self.regular_at)

    @property
    def completely_irregular(self) -> bool:
        return not any(self.regular_at)


def corank(lam: HighestWeight) -> int:
    if not _is_constant(lam.k2):
        return 0
    return 2 if lam.k1 == lam.k2 else 1


def classify_weight(lam: HighestWeight) -> WeightClassification:
    regular_at = tuple(a > b > 0 for a, b in lam.pairs())
    return WeightClassification(regular_at, corank(lam), lam.motivic_weight)


def kostant_parallel_presentations(lam: HighestWeight) -> list[ParallelPresentation]:
    """Every ``(kappa, I0, I1)`` making ``lam`` Kostant parallel.

    Candidates for ``kappa`` are the values ``k1[s]`` and ``k2[s] - 1``; every
    split of the embeddings is tried against every candidate.
    """
    d = lam.d
    candidates = sorted(set(lam.k1) | {b - 1 for b in lam.k2})
    found = []
    for kappa in candidates:
        for mask in product((0, 1), repeat=d):
            i0 = frozenset(s for s in range(d) if mask[s] == 0)
            i1 = frozenset(s for s in range(d) if mask[s] == 1)
            p = ParallelPresentation(kappa, i0, i1)
            if p.holds_for(lam):
                found.append(p)
    found.sort(key=ParallelPresentation.sort_key)
    return found
