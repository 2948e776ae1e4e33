import math

from hypothesis import given
from strategies import parallel_weights, weights

from hsboundary.kostant import hodge_weight
from hsboundary.lattice import classify_weight, kostant_parallel_presentations, make_weight
from hsboundary.profiles import (
    Condition,
    CuspCharacter,
    Status,
    cusp_restriction,
    double_degeneration_profile,
    entry_at,
    hb_cusp_profile,
    hb_cusp_raw_decomposition,
    klingen_profile,
    perverse_bounds,
    siegel_profile,
)
from hsboundary.weyl import KLINGEN, SIEGEL


def summary(entry):
    return sorted((s.weight, s.status.value) for s in entry.summands)


def constant(xs):
    return len(set(xs)) == 1


class TestSiegel:
    def test_d1_example(self):
        prof = siegel_profile(make_weight([3], [1], 4))
        assert entry_at(prof, 0).status is Status.ZERO
        assert summary(entry_at(prof, 1)) == [(-8, "NONZERO")]
        assert summary(entry_at(prof, 2)) == [(-8, "MAY_BE_NONZERO"), (-4, "NONZERO")]

    def test_k1_not_constant(self):
        prof = siegel_profile(make_weight([3, 2], [1, 1], 3))
        assert all(entry_at(prof, n).status is Status.ZERO for n in range(6))

    def test_equal_pair(self):
        assert summary(entry_at(siegel_profile(make_weight([2], [2], 4)), 0)) == [(-8, "NONZERO")]

    def test_range(self):
        prof = siegel_profile(make_weight([1, 1], [0, 0]))
        assert [e.degree for e in prof] == list(range(11))
        assert entry_at(prof, 11).status is Status.ZERO
        assert entry_at(prof, -1).status is Status.ZERO
        assert all(entry_at(prof, n).status is Status.NOT_DETERMINED_BY_PAPER for n in range(6, 11))

    @given(weights())
    def test_nonzero_carries_weight(self, lam):
        for e in siegel_profile(lam) + klingen_profile(lam):
            for s in e.summands:
                if s.status in (Status.NONZERO, Status.NONZERO_IF_PARITY):
                    assert s.weight is not None


class TestKlingen:
    def test_both_presentations_and_upper_half(self):
        # presentations (1, {}, all) and (3, all, {}); upper half via I2 = all with kappa = -5
        prof = klingen_profile(make_weight([3, 3], [2, 2], 10))
        expected = {0: [-16], 1: [-16], 2: [-12], 3: [-12], 4: [0], 5: [0]}
        for n, ws in expected.items():
            assert entry_at(prof, n).status is Status.NONZERO
            assert entry_at(prof, n).weights == ws
        assert entry_at(prof, 6).status is Status.NOT_DETERMINED_BY_PAPER
        assert entry_at(prof, 8).status is Status.ZERO

    def test_mixed_split(self):
        # kappa = 1 with I0 = {1}, I1 = {0}, d1 = 1
        prof = klingen_profile(make_weight([4, 1], [2, 0], 7))
        assert entry_at(prof, 0).status is Status.ZERO
        assert entry_at(prof, 1).weights == [-9]
        assert entry_at(prof, 2).weights == [-9]
        assert entry_at(prof, 3).status is Status.ZERO

    def test_not_parallel(self):
        prof = klingen_profile(make_weight([5, 4], [1, 3]))
        assert all(entry_at(prof, n).status is Status.ZERO for n in range(6))

    def test_d1_example(self):
        assert entry_at(klingen_profile(make_weight([3], [1], 4)), 0).weights == [-7]

    @given(weights())
    def test_low_and_middle_weights_cohere(self, lam):
        prof = klingen_profile(lam)
        d, w = lam.d, lam.motivic_weight
        for p in kostant_parallel_presentations(lam):
            if p.i0 and p.i1:
                low = w - d * p.kappa
                mid = w + d - d * (p.kappa + 1)
                assert low == mid
                assert low in entry_at(prof, d - 1).weights
                assert mid in entry_at(prof, d).weights

    @given(weights())
    def test_summands_match_kostant_weights(self, lam):
        for e in klingen_profile(lam):
            for s in e.summands:
                if s.status is Status.NONZERO:
                    p, q = s.source_degrees
                    assert p + q == e.degree and 0 <= p <= lam.d - 1
                    assert q == s.psi.q
                    assert s.weight == hodge_weight(lam, s.psi, KLINGEN)


class TestCusp:
    def test_restriction(self):
        assert cusp_restriction(make_weight([3, 3], [1, 1], 8)) == CuspCharacter((1, 1), 8)
        assert cusp_restriction(make_weight([0], [0], 0)) == CuspCharacter((0,), 0)
        assert cusp_restriction(make_weight([3], [1], 4)) == CuspCharacter((1,), 4)

    def test_parallel_profile(self):
        prof = hb_cusp_profile(CuspCharacter((2, 2), 1), 2)
        assert [e.weights for e in prof] == [[-2], [-2], [10], [10]]

    def test_non_parallel_profile(self):
        prof = hb_cusp_profile(CuspCharacter((1, 2), 0), 2)
        assert all(e.status is Status.ZERO for e in prof)
        assert entry_at(prof, 4).status is Status.ZERO

    def test_raw_decomposition(self):
        raw = hb_cusp_raw_decomposition(CuspCharacter((1, 2), 0), 1)
        assert sorted(p.weight for p in raw) == [4, 6]
        assert {p.l for p in raw} == {(-3, 2), (1, -4)}

    def test_raw_counts(self):
        chi = CuspCharacter((0, 1, 3), 2)
        for q in range(4):
            assert len(hb_cusp_raw_decomposition(chi, q)) == math.comb(3, q)


class TestDoubleDegeneration:
    def test_example(self):
        prof = double_degeneration_profile(make_weight([3, 3], [1, 1], 8))
        assert [e.weights for e in prof] == [[-8], [-8], [12], [12]]
        assert entry_at(prof, 4).status is Status.ZERO

    def test_k1_not_constant(self):
        prof = double_degeneration_profile(make_weight([3, 2], [1, 1]))
        assert all(e.status is Status.ZERO for e in prof)

    @given(weights())
    def test_matches_closed_form(self, lam):
        d, w = lam.d, lam.motivic_weight
        prof = double_degeneration_profile(lam)
        both = constant(lam.k1) and constant(lam.k2)
        for n in range(-1, 2 * d + 1):
            entry = entry_at(prof, n)
            if not both or not 0 <= n < 2 * d:
                assert entry.status is Status.ZERO
                continue
            k1, k2 = lam.k1[0], lam.k2[0]
            expected = w + 2 * d - d * (k1 - k2) if n < d else w + 6 * d + d * (k1 + k2)
            assert entry.weights == [expected]

    @given(parallel_weights())
    def test_low_weight_is_siegel_attained_weight(self, lam):
        low = entry_at(double_degeneration_profile(lam), 0).weights
        attained = [a for a in perverse_bounds(lam, SIEGEL).attained if a.condition is Condition.IF_PARITY]
        assert [a.weight for a in attained] == low


class TestPerverseBounds:
    def test_d1_example(self):
        lam = make_weight([3], [1], 4)
        s, k = perverse_bounds(lam, SIEGEL), perverse_bounds(lam, KLINGEN)
        assert s.beta == 2
        assert [(a.degree, a.condition) for a in s.attained] == [(-2, Condition.IF_PARITY)]
        assert k.beta == 1
        assert [(a.degree, a.condition) for a in k.attained] == [(-2, Condition.ALWAYS)]

    def test_klingen_only(self):
        lam = make_weight([3, 2], [1, 1])
        assert not perverse_bounds(lam, SIEGEL).applicable
        k = perverse_bounds(lam, KLINGEN)
        assert k.beta == 2 and [a.degree for a in k.attained] == [lam.motivic_weight + 4]

    def test_neither(self):
        lam = make_weight([5, 4], [1, 3])
        assert not perverse_bounds(lam, SIEGEL).applicable
        assert not perverse_bounds(lam, KLINGEN).applicable

    @given(weights())
    def test_attained_inside_range(self, lam):
        for stratum in (SIEGEL, KLINGEN):
            b = perverse_bounds(lam, stratum)
            lo, hi = b.degree_range
            for a in b.attained:
                assert lo <= a.degree <= hi
                assert a.degree - a.weight == b.beta

    @given(weights())
    def test_siegel_bound(self, lam):
        b = perverse_bounds(lam, SIEGEL)
        both = constant(lam.k1) and constant(lam.k2)
        assert b.applicable == both
        if both:
            d, w = lam.d, lam.motivic_weight
            assert b.beta == d * (lam.k1[0] - lam.k2[0])
            assert any(
                a.degree == w + 2 * d and a.condition is Condition.IF_PARITY for a in b.attained
            )

    @given(weights())
    def test_klingen_bound(self, lam):
        b = perverse_bounds(lam, KLINGEN)
        pres = kostant_parallel_presentations(lam)
        assert b.applicable == bool(pres)
        if not pres:
            return
        d, w = lam.d, lam.motivic_weight
        if classify_weight(lam).corank == 0:
            (p,) = pres
            assert b.beta == p.d1 + d * p.kappa
            assert w + d + p.d1 in [a.degree for a in b.attained]
        else:
            assert b.beta == d * lam.k2[0]
            assert w + 2 * d in [a.degree for a in b.attained]
        assert all(a.condition is Condition.ALWAYS for a in b.attained)

    @given(weights())
    def test_klingen_beta_from_profile(self, lam):
        b = perverse_bounds(lam, KLINGEN)
        w, d = lam.motivic_weight, lam.d
        gaps = [
            (n + w + d) - (wt + d)
            for n in range(2 * d)
            for wt in entry_at(klingen_profile(lam), n).weights
        ]
        assert b.beta == (min(gaps) if gaps else None)
