"""Cohomology of free abelian groups acting on a vector space through a character."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .errors import SizeLimit, UnsupportedField

KOSZUL_MAX_RANK = 4

# Fundamental unit x + y*sqrt(m) of Q(sqrt m).
FUNDAMENTAL_UNITS = {
    2: (1.0, 1.0),  # 1 + sqrt 2
    3: (2.0, 1.0),  # 2 + sqrt 3
    5: (0.5, 0.5),  # (1 + sqrt 5) / 2
}


@dataclass(frozen=True)
class CharacterAction:
    """A rank-``r`` free abelian group acting on ``dimV`` dimensions via ``t -> prod s(t)^n_s``."""

    rank: int
    exponents: tuple[int, ...]
    dim_v: int = 1

    def __post_init__(self):
        if self.rank < 0 or self.dim_v < 1:
            raise ValueError("need rank >= 0 and dimV >= 1")

    @property
    def trivial(self) -> bool:
        return unit_action_trivial(self.exponents)

    def cohomology_dims(self) -> list[int]:
        return [
            free_abelian_cohomology_dim(self.rank, s, self.trivial, self.dim_v)
            for s in range(self.rank + 1)
        ]


def unit_action_trivial(exponents: Sequence[int]) -> bool:
    if not exponents:
        raise ValueError("exponent list must be non-empty")
    return len(set(exponents)) == 1


def free_abelian_cohomology_dim(r: int, s: int, trivial: bool, dim_v: int) -> int:
    if r < 0 or dim_v < 1:
        raise ValueError("need r >= 0 and dimV >= 1")
    if not trivial or not 0 <= s <= r:
        return 0
    return dim_v * math.comb(r, s)


def koszul_differentials(char_values: Sequence, dim_v: int = 1) -> list[sympy.Matrix]:
    """Differentials ``d^s : C^s -> C^{s+1}`` of the cochain complex of ``Z^r``.

    ``C^s`` has basis ``e_S (x) v`` for ``|S| = s``; generator ``i`` acts on
    ``V`` by the scalar ``char_values[i]``.
    """
    r = len(char_values)
    chi = [sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in char_values]
    bases = [list(combinations(range(r), s)) for s in range(r + 1)]
    index = [{S: j for j, S in enumerate(b)} for b in bases]
    eye = sympy.eye(dim_v)
    mats = []
    for s in range(r):
        m = sympy.zeros(len(bases[s + 1]), len(bases[s]))
        for col, S in enumerate(bases[s]):
            for i in range(r):
                if i in S:
                    continue
                sign = (-1) ** sum(1 for j in S if j < i)
                target = tuple(sorted(S + (i,)))
                m[index[s + 1][target], col] = sign * (chi[i] - 1)
        mats.append(sympy.kronecker_product(m, eye))
    return mats


def koszul_oracle(r: int, char_values: Sequence, dim_v: int = 1) -> list[int]:
    """Dimensions of ``H^0..H^r`` by exact rank computation."""
    if r > KOSZUL_MAX_RANK:
        raise SizeLimit(f"rank {r} exceeds the oracle limit {KOSZUL_MAX_RANK}")
    if len(char_values) != r:
        raise ValueError(f"need {r} character values, got {len(char_values)}")
    dims = [dim_v * math.comb(r, s) for s in range(r + 1)]
    ranks = [m.rank() for m in koszul_differentials(char_values, dim_v)]
    out = []
    for s in range(r + 1):
        outgoing = ranks[s] if s < r else 0
        incoming = ranks[s - 1] if s > 0 else 0
        out.append(dims[s] - outgoing - incoming)
    return out


def quadratic_unit_check(m: int, exponents: Sequence[int], tol: float = 1e-9) -> bool:
    """Does the fundamental unit of Q(sqrt m) act trivially via ``|s1(u)|^n1 |s2(u)|^n2``?"""
    if m not in FUNDAMENTAL_UNITS:
        raise UnsupportedField(f"no fundamental unit on record for Q(sqrt {m})")
    if len(exponents) != 2:
        raise ValueError("a real quadratic field has two embeddings")
    x, y = FUNDAMENTAL_UNITS[m]
    root = math.sqrt(m)
    images = (x + y * root, x - y * root)
    value = math.prod(abs(u) ** n for u, n in zip(images, exponents))
    return abs(value - 1.0) <= tol
