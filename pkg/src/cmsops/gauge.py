"""Constant-remainder validation of the gauge recipe.

The finite rational A/B, trigonometric BC and deformed BC(m,n) operators
used in ``finite_ops`` come from conjugating Schroedinger forms D - V by a
ground-state product Psi0 and changing coordinates.  The recipe is only
trusted after checking, symbolically in the parameters, that

    Psi0^-1 (D - V) Psi0  -  (D + 2 sum_i c_i (d_i log Psi0) d_i)

is multiplication by a constant, i.e. that

    W := sum_i c_i [ (d_i log Psi0)^2 + d_i^2 log Psi0 ] - V

is constant.  Trigonometric factors are handled in exponential coordinates
t_i = e^{x_i}, where every sinh-product is a Laurent monomial times a
polynomial base and d/dx = t d/dt; the dropped monomial contributes a
constant shift to each logarithmic derivative.

W is assembled from atomic fraction terms and checked group by group:
every term is bucketed by the variable support of the pair of factors
producing it, each bucket is combined over a product-of-bases denominator
(no gcd needed) and must be constant on its own.  The sum of the bucket
constants is the gauge constant; any non-constant bucket rejects the
exponent/sign choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import CoeffFrac, as_coeff
from .mpoly import MPoly
from .polycore import Poly


class GaugeValidationError(ArithmeticError):
    """The ground-state ansatz failed the constant-remainder check."""


@dataclass
class _Factor:
    base: MPoly
    exponent: CoeffFrac
    mono: dict[int, int]  # dropped monomial degrees per variable (trig mode)
    support: frozenset


@dataclass
class _PotentialTerm:
    coeff: CoeffFrac
    numer: MPoly
    base_id: int
    support: frozenset


class GaugeModel:
    """Ground-state factors, potential and second-order weights."""

    def __init__(self, vars: tuple[str, ...], weights: list[CoeffFrac], trig: bool):
        self.vars = vars
        self.weights = weights
        self.trig = trig
        self.factors: list[_Factor] = []
        self.potentials: list[_PotentialTerm] = []
        self._base_ids: dict[int, int] = {}
        self._bases: list[MPoly] = []

    def _register_base(self, base: MPoly) -> int:
        key = id(base)
        if key not in self._base_ids:
            self._base_ids[key] = len(self._bases)
            self._bases.append(base)
        return self._base_ids[key]

    def add_factor(self, base: MPoly, exponent: CoeffFrac, mono: dict[int, int] | None = None):
        supp = frozenset(i for i in range(len(self.vars)) if base.degree_in(i) > 0)
        self._register_base(base)
        self.factors.append(_Factor(base, exponent, mono or {}, supp))

    def add_potential(self, coeff: CoeffFrac, numer: MPoly, base: MPoly):
        supp = frozenset(i for i in range(len(self.vars)) if base.degree_in(i) > 0)
        bid = self._register_base(base)
        self.potentials.append(_PotentialTerm(coeff, numer, bid, supp))

    def _D(self, f: MPoly, i: int) -> MPoly:
        return f.theta(i) if self.trig else f.diff(i)

    def validate(self) -> CoeffFrac:
        """Return the gauge constant; raise if any support group is non-constant."""
        nvars = len(self.vars)
        # bucket -> list of (numerator MPoly or CoeffFrac const, {base_id: exp})
        buckets: dict[frozenset, list] = {}

        def put(supp: frozenset, num, dens: dict[int, int]):
            buckets.setdefault(supp, []).append((num, dens))

        fac_base_id = [self._register_base(f.base) for f in self.factors]
        d_cache: dict[tuple[int, int], MPoly] = {}

        def D_of(fi: int, i: int) -> MPoly:
            key = (fi, i)
            if key not in d_cache:
                d_cache[key] = self._D(self.factors[fi].base, i)
            return d_cache[key]

        for i in range(nvars):
            c_i = self.weights[i]
            touching = [
                fi for fi, f in enumerate(self.factors)
                if i in f.support or f.mono.get(i)
            ]
            # squares: ordered pairs of factors
            for fi in touching:
                f = self.factors[fi]
                ef = f.exponent
                dbf = D_of(fi, i)
                mf = Fraction(f.mono.get(i, 0))
                for gi in touching:
                    g = self.factors[gi]
                    scale = c_i * ef * g.exponent
                    supp = f.support | g.support
                    dbg = D_of(gi, i)
                    mg = Fraction(g.mono.get(i, 0))
                    if not dbf.is_zero() and not dbg.is_zero():
                        dens = {fac_base_id[fi]: 1}
                        dens[fac_base_id[gi]] = dens.get(fac_base_id[gi], 0) + 1
                        put(supp, (dbf * dbg).scale(scale), dens)
                    if mg and not dbf.is_zero():
                        put(supp, dbf.scale(-scale * mg), {fac_base_id[fi]: 1})
                    if mf and not dbg.is_zero():
                        put(supp, dbg.scale(-scale * mf), {fac_base_id[gi]: 1})
                    if mf and mg:
                        put(supp, scale * mf * mg, {})
            # second logarithmic derivative of each factor
            for fi in touching:
                f = self.factors[fi]
                dbf = D_of(fi, i)
                if dbf.is_zero():
                    continue
                num = self._D(dbf, i) * f.base - dbf * dbf
                if not num.is_zero():
                    put(f.support, num.scale(c_i * f.exponent), {fac_base_id[fi]: 2})
        for pot in self.potentials:
            put(pot.support, pot.numer.scale(-pot.coeff), {pot.base_id: 2})

        constant = CoeffFrac.zero()
        point = [Fraction(prime) for prime in (2, 3, 5, 7, 11, 13, 17, 19)][:nvars]
        for supp, items in sorted(buckets.items(), key=lambda kv: sorted(kv[0])):
            base_ids = sorted({bid for _, dens in items for bid in dens})
            lcd = MPoly.one(self.vars)
            for bid in base_ids:
                lcd = lcd * self._bases[bid] * self._bases[bid]
            num = MPoly.zero(self.vars)
            for item, dens in items:
                complement = MPoly.one(self.vars)
                for bid in base_ids:
                    need = 2 - dens.get(bid, 0)
                    for _ in range(need):
                        complement = complement * self._bases[bid]
                if isinstance(item, MPoly):
                    num = num + item * complement
                else:
                    num = num + complement.scale(item)
            lcd_val = lcd.eval_at(point)
            num_val = num.eval_at(point)
            c = num_val / lcd_val
            check = num.scale(CoeffFrac.from_poly(c.den)) - lcd.scale(CoeffFrac.from_poly(c.num))
            if not check.is_zero():
                names = [self.vars[i] for i in sorted(supp)]
                raise GaugeValidationError(
                    f"group {{{', '.join(names)}}} is not constant: the ground-state "
                    f"ansatz (exponents/signs) is rejected"
                )
            constant = constant + c
        return constant


# ---------------------------------------------------------------------------
# family models
# ---------------------------------------------------------------------------

def _sym(name: str) -> CoeffFrac:
    return CoeffFrac.var(name)


def _poly_vars(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i+1}" for i in range(n))


def _pair_base_diff(vars, i, j) -> MPoly:
    return MPoly.var(vars, i) - MPoly.var(vars, j)


def _pair_base_sum(vars, i, j) -> MPoly:
    return MPoly.var(vars, i) + MPoly.var(vars, j)


def rational_a_model(N: int) -> GaugeModel:
    """Psi0 = prod (x_i - x_j)^-k against V = sum 2k(k+1)/(x_i-x_j)^2."""
    k = _sym("k")
    vars = _poly_vars("x", N)
    model = GaugeModel(vars, [CoeffFrac.one()] * N, trig=False)
    one = MPoly.one(vars)
    coupling = k * (k + CoeffFrac.one()) * 2
    for i in range(N):
        for j in range(i + 1, N):
            base = _pair_base_diff(vars, i, j)
            model.add_factor(base, -k)
            model.add_potential(coupling, one, base)
    return model


def rational_b_model(N: int) -> GaugeModel:
    """Psi0 = prod (x_i^2 - x_j^2)^-k prod x_i^-l for the rational B potential."""
    k, l = _sym("k"), _sym("l")
    vars = _poly_vars("x", N)
    model = GaugeModel(vars, [CoeffFrac.one()] * N, trig=False)
    one = MPoly.one(vars)
    coupling = k * (k + CoeffFrac.one()) * 2
    l_coupling = l * (l + CoeffFrac.one())
    for i in range(N):
        for j in range(i + 1, N):
            diff = _pair_base_diff(vars, i, j)
            tot = _pair_base_sum(vars, i, j)
            model.add_factor(diff, -k)
            model.add_factor(tot, -k)
            model.add_potential(coupling, one, diff)
            model.add_potential(coupling, one, tot)
    for i in range(N):
        xi = MPoly.var(vars, i)
        model.add_factor(xi, -l)
        model.add_potential(l_coupling, one, xi)
    return model


def _sinh_bases(vars, i, j) -> tuple[MPoly, MPoly]:
    """Polynomial parts of sinh(x_i - x_j) and sinh(x_i + x_j) in t-coordinates."""
    ti = MPoly.var(vars, i)
    tj = MPoly.var(vars, j)
    one = MPoly.one(vars)
    return ti * ti - tj * tj, ti * ti * tj * tj - one


def _single_bases(vars, i) -> tuple[MPoly, MPoly]:
    """Polynomial parts of sinh(x_i) and sinh(2 x_i) in t-coordinates."""
    ti = MPoly.var(vars, i)
    one = MPoly.one(vars)
    t2 = ti * ti
    return t2 - one, t2 * t2 - one


def _add_sinh_pair(model: GaugeModel, vars, i, j, exponent: CoeffFrac, coupling: CoeffFrac):
    diff, tot = _sinh_bases(vars, i, j)
    model.add_factor(diff, exponent, {i: 1, j: 1})
    model.add_factor(tot, exponent, {i: 1, j: 1})
    ti = MPoly.var(vars, i)
    tj = MPoly.var(vars, j)
    mono = (ti * ti * tj * tj).scale(4)
    model.add_potential(coupling, mono, diff)
    model.add_potential(coupling, mono, tot)


def _add_sinh_singles(model: GaugeModel, vars, i, exp1: CoeffFrac, exp2: CoeffFrac,
                      pot1: CoeffFrac, pot2: CoeffFrac):
    b1, b2 = _single_bases(vars, i)
    model.add_factor(b1, exp1, {i: 1})
    model.add_factor(b2, exp2, {i: 2})
    ti = MPoly.var(vars, i)
    t2 = ti * ti
    model.add_potential(pot1, t2.scale(4), b1)
    model.add_potential(pot2, (t2 * t2).scale(4), b2)


def trig_bc_model(N: int) -> GaugeModel:
    """Psi0 = prod sinh^-k(x_i +- x_j) prod sinh^-p(x_i) sinh^-q(2x_i)."""
    k, p, q = _sym("k"), _sym("p"), _sym("q")
    one = CoeffFrac.one()
    vars = _poly_vars("t", N)
    model = GaugeModel(vars, [one] * N, trig=True)
    pair_coupling = k * (k + one) * 2
    for i in range(N):
        for j in range(i + 1, N):
            _add_sinh_pair(model, vars, i, j, -k, pair_coupling)
    pot1 = p * (p + q * 2 + 1)
    pot2 = q * (q + one) * 4
    for i in range(N):
        _add_sinh_singles(model, vars, i, -p, -q, pot1, pot2)
    return model


def deformed_bc_model(m: int, n: int, x_potential_sign: int = 1) -> GaugeModel:
    """Ground-state ansatz for the deformed BC(m,n) operator.

    The y-side exponents carry the eliminated parameters r = p/k and
    2s+1 = (2q+1)/k; cross sinh factors have exponent -1.  The x-side
    one-particle potential enters V with `x_potential_sign`; the displayed
    formula's sign (-1 here) fails validation, the corrected sign (+1)
    passes — the validation is the source of truth.
    """
    k, p, q = _sym("k"), _sym("p"), _sym("q")
    one = CoeffFrac.one()
    kinv = one / k
    vars = _poly_vars("t", m) + _poly_vars("s", n)
    weights = [one] * m + [k] * n
    model = GaugeModel(vars, weights, trig=True)
    r = kinv * p
    s_exp = (kinv * (q * 2 + 1) - one) * Fraction(1, 2)
    # x pairs
    pair_coupling = k * (k + one) * 2
    for i in range(m):
        for j in range(i + 1, m):
            _add_sinh_pair(model, vars, i, j, -k, pair_coupling)
    # y pairs
    y_coupling = (kinv + one) * 2
    for a in range(m, m + n):
        for b in range(a + 1, m + n):
            _add_sinh_pair(model, vars, a, b, -kinv, y_coupling)
    # cross pairs
    cross_coupling = (k + one) * 2
    for i in range(m):
        for a in range(m, m + n):
            _add_sinh_pair(model, vars, i, a, -one, cross_coupling)
    # x singles
    sign = CoeffFrac.const(x_potential_sign)
    x_pot1 = sign * p * (p + q * 2 + 1)
    x_pot2 = sign * q * (q + one) * 4
    for i in range(m):
        _add_sinh_singles(model, vars, i, -p, -q, x_pot1, x_pot2)
    # y singles: V has k r (r + 2s + 1) and 4 k s (s + 1)
    y_pot1 = k * r * (r + s_exp * 2 + 1)
    y_pot2 = k * s_exp * (s_exp + one) * 4
    for a in range(m, m + n):
        _add_sinh_singles(model, vars, a, -r, -s_exp, y_pot1, y_pot2)
    return model


_MODELS = {
    "ratA": lambda *sizes: rational_a_model(*sizes),
    "ratB": lambda *sizes: rational_b_model(*sizes),
    "trigBC": lambda *sizes: trig_bc_model(*sizes),
    "deformedBC": lambda *sizes: deformed_bc_model(*sizes),
}


def validate_gauge_recipe(family: str, *sizes: int) -> CoeffFrac:
    """Constant-remainder validation; returns the gauge constant.

    family is one of "ratA", "ratB", "trigBC" (one size N) or
    "deformedBC" (sizes m, n).  Raises GaugeValidationError when the
    remainder is not multiplication by a constant.
    """
    if family not in _MODELS:
        raise ValueError(f"unknown gauge family {family!r}")
    return _MODELS[family](*sizes).validate()
