"""The algebra of symmetric functions in the power-sum basis.

A SymFun is a finite linear combination of power-sum monomials
p_lam = p_{lam_1} p_{lam_2} ... with CoeffFrac coefficients; the empty
partition indexes the constant term.  p_0 is NOT a generator: the number
of variables enters only through the formal parameter p0 living in the
coefficient field, which the evaluation maps specialize (p0 -> N under
phi_N).

Monomial-basis expansions (MBasisExpansion) support the triangular
eigen-solver; the change of basis is computed by evaluating in exactly
d variables, where phi_d is injective on degrees <= d, and reading
coefficients off sorted monomials.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffs import CoeffFrac, as_coeff
from .mpoly import MPoly, z_vars
from .partitions import (
    Partition,
    add_parts,
    grevlex_key,
    partitions_of,
    weight,
)


class SymFun:
    """Element of the symmetric-function algebra in the p-basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, CoeffFrac] | None = None):
        self.coeffs = {} if coeffs is None else {
            lam: c for lam, c in coeffs.items() if not c.is_zero()
        }

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero() -> "SymFun":
        return SymFun()

    @staticmethod
    def one() -> "SymFun":
        return SymFun({(): CoeffFrac.one()})

    @staticmethod
    def p(lam: Partition | int) -> "SymFun":
        """The power-sum monomial p_lam (or single p_a for an int)."""
        if isinstance(lam, int):
            lam = (lam,)
        return SymFun({tuple(sorted(lam, reverse=True)): CoeffFrac.one()})

    @staticmethod
    def term(lam: Partition, c) -> "SymFun":
        c = as_coeff(c)
        return SymFun({tuple(lam): c}) if not c.is_zero() else SymFun()

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((weight(lam) for lam in self.coeffs), default=0)

    def coefficient(self, lam: Partition) -> CoeffFrac:
        return self.coeffs.get(tuple(lam), CoeffFrac.zero())

    def homogeneous_part(self, d: int) -> "SymFun":
        return SymFun({lam: c for lam, c in self.coeffs.items() if weight(lam) == d})

    def truncate(self, d: int) -> "SymFun":
        """Filtered truncation: keep terms of degree <= d."""
        return SymFun({lam: c for lam, c in self.coeffs.items() if weight(lam) <= d})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(other.coeffs[lam] == c for lam, c in self.coeffs.items())

    def __hash__(self):
        raise TypeError("SymFun is not hashable")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "SymFun") -> "SymFun":
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, CoeffFrac.zero()) + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        return SymFun(out)

    def __neg__(self) -> "SymFun":
        return SymFun({lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scale(self, c) -> "SymFun":
        c = as_coeff(c)
        if c.is_zero():
            return SymFun()
        return SymFun({lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other: "SymFun") -> "SymFun":
        out: dict[Partition, CoeffFrac] = {}
        for la, ca in self.coeffs.items():
            for lb, cb in other.coeffs.items():
                lam = add_parts(la, *lb)
                prod = ca * cb
                s = out.get(lam, CoeffFrac.zero()) + prod
                if s.is_zero():
                    out.pop(lam, None)
                else:
                    out[lam] = s
        return SymFun(out)

    def substitute_params(self, bindings: dict) -> "SymFun":
        out: dict[Partition, CoeffFrac] = {}
        for lam, c in self.coeffs.items():
            nc = c.substitute(bindings)
            if not nc.is_zero():
                out[lam] = nc
        return SymFun(out)

    def map_coeffs(self, fn) -> "SymFun":
        out = {}
        for lam, c in self.coeffs.items():
            nc = fn(c)
            if not nc.is_zero():
                out[lam] = nc
        return SymFun(out)

    def sorted_items(self) -> list[tuple[Partition, CoeffFrac]]:
        return sorted(self.coeffs.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for lam, c in self.sorted_items():
            mono = "*".join(f"p{part}" for part in lam) if lam else "1"
            chunks.append(f"({c})*{mono}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"SymFun({self})"


class MBasisExpansion:
    """A finite expansion in the monomial symmetric functions m_lam."""

    __slots__ = ("coeffs", "degree_bound")

    def __init__(self, coeffs: dict[Partition, CoeffFrac], degree_bound: int | None = None):
        self.coeffs = {lam: c for lam, c in coeffs.items() if not c.is_zero()}
        self.degree_bound = degree_bound if degree_bound is not None else max(
            (weight(lam) for lam in self.coeffs), default=0
        )

    def coefficient(self, lam: Partition) -> CoeffFrac:
        return self.coeffs.get(tuple(lam), CoeffFrac.zero())

    def scale(self, c) -> "MBasisExpansion":
        c = as_coeff(c)
        return MBasisExpansion(
            {lam: v * c for lam, v in self.coeffs.items()}, self.degree_bound
        )

    def __add__(self, other: "MBasisExpansion") -> "MBasisExpansion":
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, CoeffFrac.zero()) + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        return MBasisExpansion(out, max(self.degree_bound, other.degree_bound))

    def __sub__(self, other: "MBasisExpansion") -> "MBasisExpansion":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MBasisExpansion):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(other.coeffs[lam] == c for lam, c in self.coeffs.items())

    def __hash__(self):
        raise TypeError("MBasisExpansion is not hashable")

    def sorted_items(self) -> list[tuple[Partition, CoeffFrac]]:
        return sorted(self.coeffs.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})*m[{','.join(map(str, lam)) or '0'}]" for lam, c in self.sorted_items()
        )

    def __repr__(self) -> str:
        return f"MBasisExpansion({self})"


# ---------------------------------------------------------------------------
# evaluation homomorphism phi_N
# ---------------------------------------------------------------------------

def phi_N(f: SymFun, N: int) -> MPoly:
    """Evaluate in N variables: p_a -> z_1^a + ... + z_N^a, p0 -> N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    vars = z_vars(N)
    out = MPoly.zero(vars)
    for lam, c in f.coeffs.items():
        c = c.substitute({"p0": Fraction(N)})
        if c.is_zero():
            continue
        term = MPoly.const(vars, c)
        for a in lam:
            term = term * MPoly.power_sum(vars, a)
        out = out + term
    return out


# ---------------------------------------------------------------------------
# basis conversion p <-> m
# ---------------------------------------------------------------------------

_P_TO_M_CACHE: dict[Partition, dict[Partition, Fraction]] = {}


def _p_monomial_to_m(lam: Partition) -> dict[Partition, Fraction]:
    """m-expansion of p_lam, read off phi_N(p_lam) with N = |lam| variables."""
    lam = tuple(lam)
    cached = _P_TO_M_CACHE.get(lam)
    if cached is not None:
        return cached
    if not lam:
        out = {(): Fraction(1)}
        _P_TO_M_CACHE[lam] = out
        return out
    n = weight(lam)
    vars = z_vars(n)
    poly = MPoly.one(vars)
    for a in lam:
        poly = poly * MPoly.power_sum(vars, a)
    out: dict[Partition, Fraction] = {}
    for e, c in poly.terms.items():
        # the coefficient of m_mu equals the coefficient of the sorted
        # representative monomial z_1^{mu_1} z_2^{mu_2} ...
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            mu = tuple(d for d in e if d)
            out[mu] = c.as_fraction()
    _P_TO_M_CACHE[lam] = out
    return out


def p_to_m(f: SymFun, d: int | None = None) -> MBasisExpansion:
    """Expand a filtered symmetric function in the monomial basis."""
    if d is None:
        d = f.degree()
    if f.degree() > d:
        raise ValueError(f"input not truncated at degree {d}")
    out: dict[Partition, CoeffFrac] = {}
    for lam, c in f.coeffs.items():
        for mu, r in _p_monomial_to_m(lam).items():
            s = out.get(mu, CoeffFrac.zero()) + c * r
            if s.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = s
    return MBasisExpansion(out, d)


_M_TO_P_CACHE: dict[Partition, dict[Partition, Fraction]] = {}


def _m_basis_to_p(lam: Partition) -> dict[Partition, Fraction]:
    """p-expansion of a single m_lam.

    The change-of-basis matrix M[nu][mu] = (coeff of m_nu in p_mu) is
    dominance-triangular with nonzero diagonal, so one pass of back
    substitution in the canonical total order solves M c = e_lam.
    """
    lam = tuple(lam)
    cached = _M_TO_P_CACHE.get(lam)
    if cached is not None:
        return cached
    basis = sorted(partitions_of(weight(lam)), key=grevlex_key)
    coeffs: dict[Partition, Fraction] = {}
    for nu in basis:
        val = Fraction(1) if nu == lam else Fraction(0)
        for mu, cmu in coeffs.items():
            r = _p_monomial_to_m(mu).get(nu)
            if r is not None:
                val -= cmu * r
        if val:
            coeffs[nu] = val / _p_monomial_to_m(nu)[nu]
    _M_TO_P_CACHE[lam] = coeffs
    return coeffs


def m_to_p(e: MBasisExpansion) -> SymFun:
    """Inverse basis conversion, exact on every graded component."""
    out: dict[Partition, CoeffFrac] = {}
    for lam, c in e.coeffs.items():
        for mu, r in _m_basis_to_p(lam).items():
            s = out.get(mu, CoeffFrac.zero()) + c * r
            if s.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = s
    return SymFun(out)


def m_basis_symfun(lam: Partition) -> SymFun:
    """The monomial symmetric function m_lam as a SymFun."""
    return SymFun({mu: CoeffFrac.const(c) for mu, c in _m_basis_to_p(tuple(lam)).items()})
