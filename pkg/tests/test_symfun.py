"""Symmetric functions: evaluation maps and basis conversions."""

import random
from fractions import Fraction

import pytest

from cmsops.coeffs import CoeffFrac
from cmsops.finite_ops import kernel_basis
from cmsops.mpoly import MPoly, z_vars
from cmsops.partitions import partitions_of, partitions_upto
from cmsops.symfun import (
    MBasisExpansion,
    SymFun,
    m_basis_symfun,
    m_to_p,
    p_to_m,
    phi_N,
)

one = CoeffFrac.one()


class TestPhiN:
    def test_p1_two_vars(self):
        assert phi_N(SymFun.p(1), 2) == MPoly.power_sum(z_vars(2), 1)

    def test_kernel_element_one_var(self):
        f = SymFun.p(2) - SymFun.p((1, 1))
        assert phi_N(f, 1).is_zero()

    def test_p0_specializes_to_n(self):
        f = SymFun.term((1,), CoeffFrac.var("p0"))
        expected = MPoly.power_sum(z_vars(3), 1).scale(3)
        assert phi_N(f, 3) == expected

    def test_multiplicative_on_random_pairs(self):
        rng = random.Random(7)
        pool = partitions_upto(3)
        for _ in range(8):
            f = SymFun.zero()
            g = SymFun.zero()
            for lam in rng.sample(pool, 3):
                f = f + SymFun.term(lam, rng.randint(-4, 4))
            for lam in rng.sample(pool, 3):
                g = g + SymFun.term(lam, rng.randint(-4, 4))
            for N in (1, 3, 5):
                assert phi_N(f * g, N) == phi_N(f, N) * phi_N(g, N)

    def test_injective_up_to_n(self):
        # kernel of phi_N in degree d is zero when d <= N
        for N in (1, 2, 3, 4):
            assert kernel_basis(("phi_N", N), N) == []


def _augmented_p_to_m(lam) -> dict:
    """Independent oracle: expand p_lam by part insertion into augmented
    monomials, then divide by multiplicity factorials."""
    from collections import Counter
    from math import factorial

    aug = {(): Fraction(1)}
    for a in lam:
        nxt: dict = {}
        for mu, c in aug.items():
            grown = tuple(sorted(mu + (a,), reverse=True))
            nxt[grown] = nxt.get(grown, Fraction(0)) + c
            for v in sorted(set(mu)):
                bumped = list(mu)
                bumped.remove(v)
                bumped.append(v + a)
                key = tuple(sorted(bumped, reverse=True))
                nxt[key] = nxt.get(key, Fraction(0)) + c * mu.count(v)
        aug = nxt
    out = {}
    for mu, c in aug.items():
        mult = Fraction(1)
        for _, cnt in Counter(mu).items():
            mult *= factorial(cnt)
        if c:
            out[mu] = c * mult
    return out


class TestBasisConversion:
    def test_p2_is_m2(self):
        e = p_to_m(SymFun.p(2))
        assert e.coefficient((2,)) == one and len(e.coeffs) == 1

    def test_p11(self):
        e = p_to_m(SymFun.p((1, 1)))
        assert e.coefficient((2,)) == one
        assert e.coefficient((1, 1)) == CoeffFrac.const(2)

    def test_m11_in_p(self):
        f = m_basis_symfun((1, 1))
        expected = (SymFun.p((1, 1)) - SymFun.p(2)).scale(Fraction(1, 2))
        assert (f - expected).is_zero()

    def test_round_trip_through_degree_6(self):
        for d in range(7):
            for lam in partitions_of(d):
                f = SymFun.p(lam)
                assert (m_to_p(p_to_m(f)) - f).is_zero()

    def test_against_insertion_oracle(self):
        for d in range(7):
            for lam in partitions_of(d):
                got = p_to_m(SymFun.p(lam))
                expected = _augmented_p_to_m(lam)
                assert set(got.coeffs) == set(expected)
                for mu, c in expected.items():
                    assert got.coefficient(mu) == c

    def test_truncation_contract(self):
        f = SymFun.p((3, 1)) + SymFun.p(1)
        with pytest.raises(ValueError):
            p_to_m(f, 2)
        e = p_to_m(f.truncate(1), 1)
        assert isinstance(e, MBasisExpansion)


class TestSymFunAlgebra:
    def test_mul_concatenates_partitions(self):
        assert (SymFun.p(2) * SymFun.p((2, 1))).coefficient((2, 2, 1)) == one

    def test_truncate(self):
        f = SymFun.p((3, 1)) + SymFun.p(1)
        assert f.truncate(2).coefficient((3, 1)).is_zero()
        assert f.truncate(2).coefficient((1,)) == one

    def test_homogeneous_part(self):
        f = SymFun.p((2, 1)) + SymFun.p(1)
        assert f.homogeneous_part(3).coefficient((2, 1)) == one
        assert f.homogeneous_part(3).coefficient((1,)).is_zero()
