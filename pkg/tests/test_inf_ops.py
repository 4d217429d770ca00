"""Infinite-dimensional operators: actions, momentum, dualities, symbols."""

import random
from fractions import Fraction

import pytest

from cmsops.coeffs import CoeffFrac
from cmsops.inf_ops import (
    FAMILIES,
    InfOperator,
    apply_inf,
    commutator_vanishes,
    fourier_swap_check,
    momentum,
    normal_symbol,
    rat_a,
    rat_b,
    scaling_conjugate,
    scaling_conjugate_bc,
    trig_a,
    trig_bc,
)
from cmsops.partitions import partitions_upto, weight
from cmsops.symfun import SymFun

K = CoeffFrac.var("k")
L = CoeffFrac.var("l")
P = CoeffFrac.var("p")
H = CoeffFrac.var("h")
P0 = CoeffFrac.var("p0")
one = CoeffFrac.one()


def _op(family: str) -> InfOperator:
    return {
        "trigA": trig_a,
        "ratA": rat_a,
        "ratB": rat_b,
        "trigBC": trig_bc,
    }[family]()


class TestFrozenImages:
    def test_any_family_kills_constants(self):
        for family in FAMILIES:
            assert apply_inf(_op(family), SymFun.one()).is_zero()

    def test_trig_a_p1(self):
        expected = SymFun.term((1,), one + K - K * P0)
        assert (apply_inf(trig_a(), SymFun.p(1)) - expected).is_zero()

    def test_trig_a_p2(self):
        expected = SymFun.term((2,), CoeffFrac.const(4) + K * 4 - K * P0 * 2) \
            + SymFun.term((1, 1), -(K * 2))
        assert (apply_inf(trig_a(), SymFun.p(2)) - expected).is_zero()

    def test_rat_b_p1(self):
        expected = SymFun.term((), (K + Fraction(1, 2) - L) * P0 - K * P0 * P0)
        assert (apply_inf(rat_b(), SymFun.p(1)) - expected).is_zero()

    def test_trig_bc_p1(self):
        ev = one + K * 2 + H * 2
        expected = SymFun.term((1,), ev) + SymFun.term((), (ev - P) * P0)
        assert (apply_inf(trig_bc(), SymFun.p(1)) - expected).is_zero()


class TestDegreeBehavior:
    def _random_homogeneous(self, rng, d):
        from cmsops.partitions import partitions_of

        f = SymFun.zero()
        for lam in partitions_of(d):
            f = f + SymFun.term(lam, rng.randint(-3, 3))
        return f

    def test_contracts(self):
        rng = random.Random(5)
        shifts = {"trigA": 0, "ratA": 2, "ratB": 1}
        for family, shift in shifts.items():
            op = _op(family)
            for _ in range(12):
                d = rng.randint(1, 5)
                f = self._random_homogeneous(rng, d)
                img = apply_inf(op, f)
                if img.is_zero():
                    continue
                degrees = {weight(lam) for lam in img.coeffs}
                assert degrees == {d - shift}, (family, d, degrees)

    def test_bc_preserves_filtration(self):
        rng = random.Random(6)
        op = trig_bc()
        for _ in range(12):
            d = rng.randint(1, 5)
            f = self._random_homogeneous(rng, d)
            img = apply_inf(op, f)
            assert all(weight(lam) <= d for lam in img.coeffs)

    def test_linearity(self):
        rng = random.Random(9)
        for family in FAMILIES:
            op = _op(family)
            for _ in range(12):
                f = self._random_homogeneous(rng, rng.randint(1, 4))
                g = self._random_homogeneous(rng, rng.randint(1, 4))
                a = CoeffFrac.const(rng.randint(-3, 3))
                b = CoeffFrac.const(rng.randint(-3, 3))
                lhs = apply_inf(op, f.scale(a) + g.scale(b))
                rhs = apply_inf(op, f).scale(a) + apply_inf(op, g).scale(b)
                assert (lhs - rhs).is_zero()

    def test_degree_cap_guard(self):
        with pytest.raises(ValueError):
            apply_inf(trig_a(), SymFun.p((3, 2)), degree_cap=4)


class TestMomentum:
    def test_grading(self):
        assert (momentum(SymFun.p(2)) - SymFun.p(2).scale(2)).is_zero()
        assert (momentum(SymFun.p((2, 1))) - SymFun.p((2, 1)).scale(3)).is_zero()
        assert momentum(SymFun.one()).is_zero()

    def test_commutator_trig_a(self):
        assert commutator_vanishes(trig_a(), 1)
        assert commutator_vanishes(trig_a(), 4)

    def test_commutator_rejects_rat_a(self):
        with pytest.raises(ValueError):
            commutator_vanishes(rat_a(), 3)


class TestScalingDuality:
    def test_trig_a_fit(self):
        report = scaling_conjugate(trig_a(), 4)
        assert report.verified
        assert report.scalar == K
        assert report.parameter_map["k"] == one / K
        assert report.parameter_map["p0"] == K * P0
        assert report.involutive

    def test_bc_fit_relations(self):
        report = scaling_conjugate_bc(trig_bc(), 3)
        assert report.verified
        assert report.scalar == K
        p_hat = report.parameter_map["p"]
        q_hat = report.parameter_map["q"]
        h_hat = report.parameter_map["h"]
        assert p_hat == P / K
        assert (q_hat * 2 + one) * K == CoeffFrac.var("q") * 2 + one
        h_bound = -(K * P0 + P * Fraction(1, 2) + CoeffFrac.var("q"))
        assert (h_hat * 2 - one) * K == h_bound * 2 - one
        assert report.involutive

    def test_wrong_family_rejected(self):
        with pytest.raises(ValueError):
            scaling_conjugate(rat_b(), 2)


class TestNormalSymbol:
    def test_trig_a_window_entries(self):
        sym = normal_symbol(trig_a(), (2, 2))
        assert sym.coefficient((2,), (1, 1)) == one
        assert sym.coefficient((1, 1), (2,)) == -K
        assert sym.coefficient((1,), (1,)) == one + K - K * P0

    def test_round_trip_all_families(self):
        for family in FAMILIES:
            op = _op(family)
            sym = normal_symbol(op, (4, 4))
            for lam in partitions_upto(4):
                f = SymFun.p(lam)
                assert (sym.apply(f) - apply_inf(op, f)).is_zero(), (family, lam)

    def test_window_bounds(self):
        sym = normal_symbol(trig_a(), (2, 2))
        assert all(weight(lam) <= 2 and weight(mu) <= 2 for lam, mu in sym.terms)

    def test_bad_window(self):
        with pytest.raises(ValueError):
            normal_symbol(trig_a(), (0, 2))


class TestFourierSwap:
    def test_quadratic_blocks_exchange(self):
        report = fourier_swap_check(trig_a(), 4)
        assert report.quadratic_exchange
        assert report.diagonal_matches

    def test_diagonal_constants(self):
        report = fourier_swap_check(trig_a(), 3)
        by_index = dict(report.diagonal_constants)
        for a in (1, 2, 3):
            expected = ((one + K) * a - K * P0) * a
            assert by_index[a] == expected

    def test_wrong_family(self):
        with pytest.raises(ValueError):
            fourier_swap_check(rat_a(), 3)
