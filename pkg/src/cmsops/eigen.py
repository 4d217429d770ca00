"""Triangular eigen-solver on graded and filtered components.

The degree-preserving A-family operator is dominance-triangular on the
monomial basis of each graded piece; the BC-family operator is triangular
on the filtered basis ordered by (degree, dominance).  Eigenfunctions are
normalized monic in m_lambda and computed by the unitriangular recursion

    c_lam,lam = 1,
    c_lam,mu  = ( sum_{mu < nu <= lam} A_mu,nu c_lam,nu ) / (e_lam - e_mu),

which divides only by diagonal differences; a vanishing difference under
numeric parameter bindings raises ResonanceError carrying the resonant
denominator.

Downstream of the solver: restriction to the deformed algebra (super
Jacobi polynomials, with h bound to -km - n - p/2 - q), and their
specializations along (k, p, q) -> (-1, -1, 0) or (-1, 0, 0) taken as
iterated limits so that apparent poles cancel before substituting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .coeffs import CoeffFrac, PoleError, as_coeff
from .finite_ops import DeformedContext, is_in_deformed_algebra, phi_mn
from .inf_ops import TRIG_A, TRIG_BC, InfOperator, apply_inf, trig_a, trig_bc
from .mpoly import MPoly
from .partitions import (
    Partition,
    format_partition,
    grevlex_key,
    partitions_of,
    partitions_upto,
    weight,
)
from .symfun import MBasisExpansion, SymFun, m_basis_symfun, m_to_p, p_to_m


class ResonanceError(ArithmeticError):
    """Two diagonal eigenvalues coincide under the given parameter bindings."""

    def __init__(self, message: str, denominator: str = ""):
        super().__init__(message)
        self.denominator = denominator


@dataclass
class EigenResult:
    label: Partition
    family: str
    eigenvalue: CoeffFrac
    expansion: MBasisExpansion

    def to_json_dict(self) -> dict:
        return {
            "label": format_partition(self.label),
            "family": self.family,
            "eigenvalue": str(self.eigenvalue),
            "expansion": [
                {"partition": format_partition(lam), "coefficient": str(c)}
                for lam, c in self.expansion.sorted_items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def matrix_basis(family: str, d: int) -> list[Partition]:
    """Canonical basis order: degree-d partitions (trigA) or all partitions
    of weight <= d (trigBC), largest first in (degree, dominance refined by
    grevlex)."""
    if family == TRIG_A:
        pool = partitions_of(d)
    elif family == TRIG_BC:
        pool = partitions_upto(d)
    else:
        raise ValueError(f"no eigen basis for family {family!r}")
    return sorted(pool, key=grevlex_key, reverse=True)


def operator_matrix(op: InfOperator, d: int) -> tuple[list[Partition], list[list[CoeffFrac]]]:
    """Matrix of the operator on the canonical m-basis.

    Entry [i][j] is the coefficient of basis[i] in the image of basis[j];
    with the descending basis order all entries above the diagonal vanish.
    """
    basis = matrix_basis(op.family, d)
    index = {lam: i for i, lam in enumerate(basis)}
    ncols = len(basis)
    matrix = [[CoeffFrac.zero() for _ in range(ncols)] for _ in range(ncols)]
    for j, lam in enumerate(basis):
        image = p_to_m(apply_inf(op, m_basis_symfun(lam)))
        for mu, c in image.coeffs.items():
            i = index.get(mu)
            if i is None:
                raise AssertionError(f"image of m_{lam} leaves the basis at m_{mu}")
            matrix[i][j] = c
    return basis, matrix


def _triangular_eigenvector(basis: list[Partition], matrix, lam: Partition,
                            family: str) -> tuple[MBasisExpansion, CoeffFrac]:
    start = basis.index(lam)
    e_lam = matrix[start][start]
    coeffs: dict[Partition, CoeffFrac] = {lam: CoeffFrac.one()}
    order = basis[start:]
    values = [CoeffFrac.one()]
    for i in range(1, len(order)):
        row = start + i
        total = CoeffFrac.zero()
        for j in range(i):
            a = matrix[row][start + j]
            if not a.is_zero() and not values[j].is_zero():
                total = total + a * values[j]
        if total.is_zero():
            # no coupling into this partition (e.g. dominance-incomparable):
            # the recursion never divides here, so a coinciding eigenvalue
            # on an incomparable pair is not a resonance.
            values.append(CoeffFrac.zero())
            continue
        denom = e_lam - matrix[row][row]
        if denom.is_zero():
            locus = _symbolic_denominator(family, lam, order[i])
            raise ResonanceError(
                f"resonance: eigenvalues of {format_partition(lam)} and "
                f"{format_partition(order[i])} coincide; vanishing denominator "
                f"{locus}",
                denominator=locus,
            )
        value = total / denom
        values.append(value)
        if not value.is_zero():
            coeffs[order[i]] = value
    reduced = {mu: c.reduced() for mu, c in coeffs.items()}
    return MBasisExpansion(reduced, weight(lam)), e_lam.reduced()


def _symbolic_denominator(family: str, lam: Partition, mu: Partition) -> str:
    """The resonant locus as a polynomial in the free parameters."""
    op = trig_a() if family == TRIG_A else trig_bc()
    diff = _diagonal_eigenvalue(op, lam) - _diagonal_eigenvalue(op, mu)
    return str(diff.reduced())


def _diagonal_eigenvalue(op: InfOperator, lam: Partition) -> CoeffFrac:
    image = p_to_m(apply_inf(op, m_basis_symfun(lam)))
    return image.coefficient(lam)


def jack(lam: Partition, k=None, p0=None) -> EigenResult:
    """Jack symmetric function: homogeneous eigenfunction of the A-family
    operator, monic in m_lam."""
    lam = tuple(lam)
    op = trig_a(k=k, p0=p0)
    basis, matrix = operator_matrix(op, weight(lam))
    expansion, eigenvalue = _triangular_eigenvector(basis, matrix, lam, TRIG_A)
    return EigenResult(lam, TRIG_A, eigenvalue, expansion)


def jacobi(lam: Partition, k=None, p=None, q=None, h=None, p0=None) -> EigenResult:
    """Jacobi symmetric function: inhomogeneous eigenfunction of the
    BC-family operator with leading term m_lam."""
    lam = tuple(lam)
    op = trig_bc(k=k, p=p, q=q, h=h, p0=p0)
    basis, matrix = operator_matrix(op, weight(lam))
    expansion, eigenvalue = _triangular_eigenvector(basis, matrix, lam, TRIG_BC)
    return EigenResult(lam, TRIG_BC, eigenvalue, expansion)


def verify_eigen(op: InfOperator, result: EigenResult, degree_cap: int | None = None) -> bool:
    """Exact check: apply_inf(op, expansion) == eigenvalue * expansion."""
    f = m_to_p(result.expansion)
    image = apply_inf(op, f, degree_cap)
    return (image - f.scale(result.eigenvalue)).is_zero()


# ---------------------------------------------------------------------------
# super Jacobi polynomials and Euler specializations
# ---------------------------------------------------------------------------

@dataclass
class SuperJacobi:
    label: Partition
    context: tuple[int, int]
    value: MPoly
    parameters: dict[str, CoeffFrac]
    is_zero_restriction: bool

    def to_json_dict(self) -> dict:
        return {
            "label": format_partition(self.label),
            "m": self.context[0],
            "n": self.context[1],
            "value": str(self.value),
            "zero_restriction": self.is_zero_restriction,
        }


def super_jacobi(lam: Partition, ctx: DeformedContext) -> SuperJacobi:
    """Restriction of the Jacobi symmetric function to the deformed algebra,
    with h bound to -km - n - p/2 - q before restricting."""
    lam = tuple(lam)
    h = ctx.theorem_h()
    p0_value = CoeffFrac.const(ctx.m) + ctx.k_inverse() * ctx.n
    result = jacobi(lam, k=ctx.k, p=ctx.p, q=ctx.q, h=h, p0=p0_value)
    value = phi_mn(m_to_p(result.expansion), ctx)
    if not value.is_zero() and not is_in_deformed_algebra(value, ctx):
        raise AssertionError("super Jacobi restriction left the deformed algebra")
    return SuperJacobi(
        label=lam,
        context=(ctx.m, ctx.n),
        value=value,
        parameters={"k": ctx.k, "p": ctx.p, "q": ctx.q, "h": h},
        is_zero_restriction=value.is_zero(),
    )


EULER_VARIANTS = {
    # (k, p, q) specialization curves for the two orthosymplectic series
    "odd": (Fraction(-1), Fraction(-1), Fraction(0)),
    "even": (Fraction(-1), Fraction(0), Fraction(0)),
}


def specialize_euler(lam: Partition, m: int, n: int, variant: str) -> MPoly:
    """Specialized super Jacobi polynomial along (k,p,q) -> variant values,
    limits taken in the order k, then p, then q.

    A pole that survives the iterated limits is reported (with the
    offending coefficient) as PoleError, never silently regularized.
    """
    if variant not in EULER_VARIANTS:
        raise ValueError(f"variant must be one of {sorted(EULER_VARIANTS)}")
    kv, pv, qv = EULER_VARIANTS[variant]
    ctx = DeformedContext(m, n)
    sj = super_jacobi(lam, ctx)
    out_terms = {}
    for exps, c in sj.value.terms.items():
        cur = c
        try:
            for name, val in (("k", kv), ("p", pv), ("q", qv)):
                cur = cur.limit_along_parameter(name, val)
        except PoleError as exc:
            raise PoleError(
                f"specialization pole on coefficient of monomial {exps}: {c} ({exc})"
            ) from exc
        if not cur.is_zero():
            out_terms[exps] = cur
    return MPoly(sj.value.vars, out_terms)
