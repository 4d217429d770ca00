"""Exact sparse polynomials in finitely many variables (z's, or u's and v's).

Coefficients are CoeffFrac, so the whole tower stays exact with symbolic
parameters.  Variable tuples are either ("z1", ..., "zN") or
("u1", ..., "um", "v1", ..., "vn"); the helpers below build them.

Division by a variable difference (x_i - x_j) is substitution-checked
synthetic division: it succeeds exactly when the polynomial vanishes on
the hyperplane x_i = x_j, which is how the antisymmetric numerators of
the CMS interaction terms are handled.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .coeffs import CoeffFrac, as_coeff
from .polycore import Poly, monomial_key


def _c(n) -> CoeffFrac:
    return as_coeff(n)


def z_vars(n: int) -> tuple[str, ...]:
    return tuple(f"z{i+1}" for i in range(n))


def uv_vars(m: int, n: int) -> tuple[str, ...]:
    return tuple(f"u{i+1}" for i in range(m)) + tuple(f"v{a+1}" for a in range(n))


class MPoly(Poly):
    __slots__ = ()

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "MPoly":
        return cls(vars, {})

    @classmethod
    def one(cls, vars: tuple[str, ...]) -> "MPoly":
        return cls(vars, {(0,) * len(vars): CoeffFrac.one()})

    @classmethod
    def const(cls, vars: tuple[str, ...], value) -> "MPoly":
        value = as_coeff(value)
        if value.is_zero():
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def var(cls, vars: tuple[str, ...], idx: int) -> "MPoly":
        exp = [0] * len(vars)
        exp[idx] = 1
        return cls(vars, {tuple(exp): CoeffFrac.one()})

    @classmethod
    def power_sum(cls, vars: tuple[str, ...], a: int, weights=None) -> "MPoly":
        """sum_i w_i * x_i^a over all variables (w_i defaults to 1)."""
        terms: dict = {}
        for i in range(len(vars)):
            exp = [0] * len(vars)
            exp[i] = a
            w = CoeffFrac.one() if weights is None else as_coeff(weights[i])
            if not w.is_zero():
                terms[tuple(exp)] = w
        return cls(vars, terms)

    def __add__(self, other):
        return MPoly(self.vars, Poly.__add__(self, other).terms)

    def __sub__(self, other):
        return MPoly(self.vars, Poly.__sub__(self, other).terms)

    def __neg__(self):
        return MPoly(self.vars, Poly.__neg__(self).terms)

    def __mul__(self, other):
        return MPoly(self.vars, Poly.__mul__(self, other).terms)

    def __pow__(self, n):
        if n == 0:
            return MPoly.one(self.vars)
        return MPoly(self.vars, Poly.__pow__(self, n).terms)

    def scale(self, c) -> "MPoly":
        return MPoly(self.vars, Poly.scale(self, as_coeff(c)).terms)

    def diff(self, idx: int) -> "MPoly":
        return MPoly(self.vars, self.derivative(idx, lambda n: CoeffFrac.const(n)).terms)

    def theta(self, idx: int) -> "MPoly":
        """Euler operator x_idx d/dx_idx."""
        return MPoly(self.vars, self.theta_derivative(idx, lambda n: CoeffFrac.const(n)).terms)

    def set_equal(self, i: int, j: int) -> "MPoly":
        """Substitute x_i := x_j."""
        return MPoly(self.vars, self.rename_var_to(i, j).terms)

    def div_diff(self, i: int, j: int) -> "MPoly":
        """Exact quotient by (x_i - x_j); divides along the lower index."""
        if i > j:
            i, j = j, i
        try:
            return MPoly(self.vars, self.divide_by_difference(i, j).terms)
        except ValueError as exc:
            raise DivisionFailure(str(exc)) from exc

    def swap(self, i: int, j: int) -> "MPoly":
        return MPoly(self.vars, self.permute_vars({i: j, j: i}).terms)

    def is_symmetric_in(self, idxs: list[int]) -> bool:
        """Invariance under the symmetric group on the given positions."""
        for a, b in zip(idxs, idxs[1:]):
            if self.swap(a, b) != self:
                return False
        return True

    def substitute_params(self, bindings: dict) -> "MPoly":
        """Substitute formal parameters inside every coefficient."""
        out: dict = {}
        for e, c in self.terms.items():
            nc = c.substitute(bindings)
            if not nc.is_zero():
                out[e] = nc
        return MPoly(self.vars, out)

    def eval_at(self, point: list[Fraction]) -> CoeffFrac:
        """Evaluate at a rational point; result stays in the parameter field."""
        total = CoeffFrac.zero()
        for e, c in self.terms.items():
            val = Fraction(1)
            for x, d in zip(point, e):
                if d:
                    val *= x**d
            total = total + c * val
        return total

    def coefficient_of(self, exps: tuple[int, ...]) -> CoeffFrac:
        return self.terms.get(exps, CoeffFrac.zero())

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({format_mpoly(self)})"


class DivisionFailure(ArithmeticError):
    """An interaction-term division that must be exact was not."""


def format_mpoly(p: MPoly) -> str:
    """Canonical form: 'coeff * z1^2*z2 + ...' in graded-lex monomial order."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for e, c in sorted(p.terms.items(), key=lambda kv: monomial_key(kv[0])):
        mono = "*".join(
            name if d == 1 else f"{name}^{d}"
            for name, d in zip(p.vars, e) if d
        )
        cs = str(c)
        if any(ch in cs for ch in " +") and not (cs.startswith("(") and cs.endswith(")")):
            cs = f"({cs})"
        chunks.append(f"{cs} * {mono}" if mono else cs)
    return " + ".join(chunks)


def symmetrize_monomial(vars: tuple[str, ...], lam: tuple[int, ...]) -> MPoly:
    """Monomial symmetric polynomial m_lam in the given variables."""
    n = len(vars)
    if len(lam) > n:
        return MPoly.zero(vars)
    exps = set()
    padded = tuple(lam) + (0,) * (n - len(lam))
    for perm in set(permutations(padded)):
        exps.add(perm)
    one = CoeffFrac.one()
    return MPoly(vars, {e: one for e in exps})
