"""Eigen-solver: Jack, Jacobi, super Jacobi, Euler specializations."""

import itertools
import json
from fractions import Fraction

import pytest

from cmsops.coeffs import CoeffFrac, parse_coeff
from cmsops.eigen import (
    EigenResult,
    ResonanceError,
    jack,
    jacobi,
    matrix_basis,
    operator_matrix,
    specialize_euler,
    super_jacobi,
    verify_eigen,
)
from cmsops.finite_ops import (
    DeformedContext,
    apply_cms_trig_a,
    apply_gauged_bc_trig,
    is_in_deformed_algebra,
)
from cmsops.inf_ops import trig_a, trig_bc
from cmsops.mpoly import MPoly
from cmsops.partitions import (
    LESS,
    dominance_compare,
    partitions_of,
    partitions_upto,
)
from cmsops.symfun import MBasisExpansion, m_to_p, phi_N

K = CoeffFrac.var("k")
P = CoeffFrac.var("p")
H = CoeffFrac.var("h")
P0 = CoeffFrac.var("p0")
one = CoeffFrac.one()


class TestOperatorMatrix:
    def test_trig_a_degree_2(self):
        basis, m = operator_matrix(trig_a(), 2)
        assert basis == [(2,), (1, 1)]
        assert m[0][0] == CoeffFrac.const(4) + K * 2 - K * P0 * 2
        assert m[1][1] == CoeffFrac.const(2) + K * 4 - K * P0 * 2
        assert m[0][1].is_zero()  # m_(1,1) is already an eigenvector

    def test_trig_a_degree_1(self):
        _, m = operator_matrix(trig_a(), 1)
        assert m[0][0] == one + K - K * P0

    def test_trig_bc_degree_0(self):
        basis, m = operator_matrix(trig_bc(), 0)
        assert basis == [()]
        assert m[0][0].is_zero()


class TestJack:
    def test_degree_1(self):
        r = jack((1,))
        assert r.eigenvalue == one + K - K * P0
        assert r.expansion.coefficient((1,)) == one
        assert len(r.expansion.coeffs) == 1

    def test_degree_2_row(self):
        r = jack((2,))
        assert r.eigenvalue == CoeffFrac.const(4) + K * 2 - K * P0 * 2
        assert r.expansion.coefficient((1, 1)) == (K * 2) / (K - 1)

    def test_column_eigenvector(self):
        r = jack((1, 1))
        assert r.eigenvalue == CoeffFrac.const(2) + K * 4 - K * P0 * 2
        assert len(r.expansion.coeffs) == 1

    def test_verify_through_degree_5(self):
        op = trig_a()
        for d in range(6):
            for lam in partitions_of(d):
                assert verify_eigen(op, jack(lam)), lam

    def test_resonance_at_k_1(self):
        with pytest.raises(ResonanceError) as err:
            jack((2,), k=Fraction(1))
        assert "2" in str(err.value)

    def test_incomparable_equal_eigenvalues_are_not_resonant(self):
        # (3,3) and (4,1,1) share the symbolic eigenvalue but are
        # dominance-incomparable: the recursion never couples them
        e1 = jack((3, 3)).eigenvalue
        e2 = jack((4, 1, 1)).eigenvalue
        assert e1 == e2
        assert verify_eigen(trig_a(), jack((3, 3)))
        assert verify_eigen(trig_a(), jack((4, 1, 1)))

    def test_distinct_eigenvalues_on_comparable_pairs(self):
        for d in range(2, 7):
            for lam, mu in itertools.combinations(partitions_of(d), 2):
                if dominance_compare(lam, mu) != "incomparable":
                    assert not (jack(lam).eigenvalue - jack(mu).eigenvalue).is_zero()

    def test_specialization_consistency(self):
        # phi_N of a Jack function is an eigenvector of the finite operator
        for lam in partitions_upto(4):
            if not lam:
                continue
            r = jack(lam)
            for N in (sum(lam), sum(lam) + 1):
                fin = phi_N(m_to_p(r.expansion), N)
                assert not fin.is_zero()
                ev = r.eigenvalue.substitute({"p0": Fraction(N)})
                assert (apply_cms_trig_a(fin) - fin.scale(ev)).is_zero()


class TestJacobi:
    def test_empty_partition(self):
        r = jacobi(())
        assert r.eigenvalue.is_zero()
        assert r.expansion.coefficient(()) == one

    def test_degree_1_closed_form(self):
        r = jacobi((1,))
        ev = one + K * 2 + H * 2
        assert r.eigenvalue == ev
        assert r.expansion.coefficient(()) == (ev - P) * P0 / ev

    def test_constant_coupling_vanishes_at_special_p(self):
        r = jacobi((1,), p=one + K * 2 + H * 2)
        assert r.expansion.coefficient(()).is_zero()
        assert r.eigenvalue == one + K * 2 + H * 2

    def test_verify_at_rational_samples(self):
        samples = [
            (Fraction(2), Fraction(1, 3), Fraction(-1, 2)),
            (Fraction(-3, 2), Fraction(2), Fraction(1)),
            (Fraction(5, 7), Fraction(-4, 3), Fraction(3, 5)),
        ]
        for k, p, q in samples:
            op = trig_bc(k=k, p=p, q=q)
            for lam in partitions_upto(3):
                r = jacobi(lam, k=k, p=p, q=q)
                assert verify_eigen(op, r), (lam, k, p, q)

    def test_perturbed_expansion_fails(self):
        r = jack((2,))
        bad = MBasisExpansion(dict(r.expansion.coeffs))
        bad.coeffs[(1, 1)] = bad.coeffs[(1, 1)] + one
        fake = EigenResult(r.label, r.family, r.eigenvalue, bad)
        assert not verify_eigen(trig_a(), fake)


class TestSuperJacobi:
    def test_empty(self):
        sj = super_jacobi((), DeformedContext(1, 1))
        assert str(sj.value) == "1"

    def test_composition_m1_n0(self):
        ctx = DeformedContext(1, 0)
        sj = super_jacobi((1,), ctx)
        h = -K - P * Fraction(1, 2) - CoeffFrac.var("q")
        r = jacobi((1,), h=h, p0=one)
        expected = phi_N(m_to_p(r.expansion), 1)
        # same polynomial after renaming z1 -> u1
        assert [str(c) for _, c in sorted(sj.value.terms.items())] == \
            [str(c) for _, c in sorted(expected.terms.items())]

    def test_membership_and_eigen_n0(self):
        # at n = 0 the restriction is an eigenvector of the finite BC operator
        ctx = DeformedContext(2, 0)
        for lam in partitions_upto(2):
            sj = super_jacobi(lam, ctx)
            img = apply_gauged_bc_trig(sj.value)
            r = jacobi(lam, h=ctx.theorem_h(), p0=CoeffFrac.const(2))
            assert (img - sj.value.scale(r.eigenvalue)).is_zero()

    def test_value_in_deformed_algebra(self):
        ctx = DeformedContext(1, 1)
        for lam in partitions_upto(3):
            sj = super_jacobi(lam, ctx)
            assert is_in_deformed_algebra(sj.value, ctx)

    def test_constant_term_value(self):
        ctx = DeformedContext(1, 1)
        sj = super_jacobi((1,), ctx)
        zero_exp = (0, 0)
        const = sj.value.terms[zero_exp]
        ev = -(one + P + CoeffFrac.var("q") * 2)
        expected = (ev - P) * (one + one / K) / ev
        assert const == expected


class TestEulerSpecializations:
    def test_empty(self):
        assert str(specialize_euler((), 1, 1, "odd")) == "1"

    def test_row_one(self):
        e = specialize_euler((1,), 1, 1, "odd")
        vars = e.vars
        u = MPoly.var(vars, 0)
        v = MPoly.var(vars, 1)
        assert (e - (u - v)).is_zero()

    def test_pole_free_through_degree_3(self):
        for (m, n) in ((1, 1), (2, 1)):
            for d in range(4):
                for lam in partitions_of(d):
                    for variant in ("odd", "even"):
                        specialize_euler(lam, m, n, variant)

    def test_variants_differ(self):
        odd = specialize_euler((1,), 1, 1, "odd")
        even = specialize_euler((1,), 1, 1, "even")
        assert not (odd - even).is_zero()

    def test_bad_variant(self):
        with pytest.raises(ValueError):
            specialize_euler((1,), 1, 1, "huge")


class TestSerialization:
    def test_json_round_trip(self):
        r = jack((2,))
        payload = json.loads(r.to_json())
        assert payload["label"] == "2"
        assert payload["family"] == "trigA"
        assert parse_coeff(payload["eigenvalue"]) == r.eigenvalue
        coeffs = {item["partition"]: parse_coeff(item["coefficient"])
                  for item in payload["expansion"]}
        assert coeffs["1,1"] == (K * 2) / (K - 1)
