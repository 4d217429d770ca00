"""Gauge-recipe validation: constant remainders pin exponents and signs."""

import pytest

from cmsops.coeffs import CoeffFrac
from cmsops.gauge import (
    GaugeValidationError,
    deformed_bc_model,
    validate_gauge_recipe,
)

K = CoeffFrac.var("k")
P = CoeffFrac.var("p")
Q = CoeffFrac.var("q")


def test_rational_a_constant_zero():
    for n in (2, 3):
        assert validate_gauge_recipe("ratA", n).is_zero()


def test_rational_b_constant_zero():
    for n in (2, 3):
        assert validate_gauge_recipe("ratB", n).is_zero()


def test_trig_bc_single_particle_constant():
    # one-particle ground state sinh^-p(x) sinh^-q(2x): remainder (p + 2q)^2
    c = validate_gauge_recipe("trigBC", 1)
    assert c == (P + Q * 2) ** 2


def test_trig_bc_larger():
    validate_gauge_recipe("trigBC", 2)
    validate_gauge_recipe("trigBC", 3)


def test_deformed_all_contexts():
    for (m, n) in ((1, 1), (2, 1), (1, 2)):
        c = validate_gauge_recipe("deformedBC", m, n)
        assert not c.is_zero()


def test_deformed_reduces_to_bc_when_n_zero():
    c_bc = validate_gauge_recipe("trigBC", 2)
    c_def = validate_gauge_recipe("deformedBC", 2, 0)
    assert c_bc == c_def


def test_displayed_sign_rejected():
    # the one-particle x-potential printed with a plus sign admits no
    # ground-state exponents: the validation must reject it
    with pytest.raises(GaugeValidationError):
        deformed_bc_model(1, 1, x_potential_sign=-1).validate()


def test_unknown_family():
    with pytest.raises(ValueError):
        validate_gauge_recipe("nope", 2)
