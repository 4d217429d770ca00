"""Finite-dimensional CMS operators acting on exact polynomials.

The trigonometric A-series operator in exponential coordinates is applied
exactly as displayed; the rational A, rational B, trigonometric BC and
deformed BC(m,n) operators are the gauge-transformed forms rewritten in
polynomial coordinates (z = x^2 for rational B, u = 2 sinh^2 x for the BC
family), normalized so that the evaluation homomorphisms intertwine them
with the infinite-dimensional operators.  The gauge recipe behind these
coordinate forms is validated independently in ``gauge``.

Interaction terms divide antisymmetrized derivative combinations by
variable differences; the divisions are exact on symmetric input (resp.
input satisfying the deformed-algebra hyperplane conditions) and any
failure signals an internal bug, not bad data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeffs import CoeffFrac, PoleError, as_coeff
from .linalg import nullspace
from .mpoly import MPoly, uv_vars, z_vars
from .partitions import Partition, grevlex_key, partitions_of
from .polycore import monomial_key
from .symfun import SymFun, phi_N


class NotSymmetric(ValueError):
    """Input polynomial is not invariant under the required group."""


class NotInDeformedAlgebra(ValueError):
    """Input fails the deformed-algebra membership test."""


def _require_symmetric(f: MPoly, idxs: list[int], what: str) -> None:
    if not f.is_symmetric_in(idxs):
        raise NotSymmetric(f"input is not {what}-symmetric")


# ---------------------------------------------------------------------------
# A-series, trigonometric (exponential coordinates z_i)
# ---------------------------------------------------------------------------

def apply_cms_trig_a(f: MPoly, k=None) -> MPoly:
    """Trigonometric A operator: sum (z_i d_i)^2 - k sum (z_i+z_j)/(z_i-z_j)(z_i d_i - z_j d_j)."""
    k = CoeffFrac.var("k") if k is None else as_coeff(k)
    n = len(f.vars)
    _require_symmetric(f, list(range(n)), "S_N")
    euler = [f.theta(i) for i in range(n)]
    out = MPoly.zero(f.vars)
    for i in range(n):
        out = out + euler[i].theta(i)
    for i in range(n):
        for j in range(i + 1, n):
            g = (euler[i] - euler[j]).div_diff(i, j)
            zi_plus_zj = MPoly.var(f.vars, i) + MPoly.var(f.vars, j)
            out = out - (zi_plus_zj * g).scale(k)
    return out


# ---------------------------------------------------------------------------
# A-series, rational (identity coordinates x_i)
# ---------------------------------------------------------------------------

def apply_gauged_rational_a(f: MPoly, k=None) -> MPoly:
    """Rational A operator: Laplacian - 2k sum (d_i - d_j)/(x_i - x_j)."""
    k = CoeffFrac.var("k") if k is None else as_coeff(k)
    n = len(f.vars)
    _require_symmetric(f, list(range(n)), "S_N")
    d1 = [f.diff(i) for i in range(n)]
    out = MPoly.zero(f.vars)
    for i in range(n):
        out = out + d1[i].diff(i)
    two_k = k * 2
    for i in range(n):
        for j in range(i + 1, n):
            out = out - (d1[i] - d1[j]).div_diff(i, j).scale(two_k)
    return out


# ---------------------------------------------------------------------------
# B-series, rational (coordinates z_i = x_i^2, divided by 4)
# ---------------------------------------------------------------------------

def apply_gauged_rational_b(f: MPoly, k=None, l=None) -> MPoly:
    """Rational B operator in squared coordinates:
    sum [z_i d_i^2 + (1/2 - l) d_i] - 2k sum (z_i d_i - z_j d_j)/(z_i - z_j)."""
    k = CoeffFrac.var("k") if k is None else as_coeff(k)
    l = CoeffFrac.var("l") if l is None else as_coeff(l)
    n = len(f.vars)
    _require_symmetric(f, list(range(n)), "S_N")
    d1 = [f.diff(i) for i in range(n)]
    half_minus_l = CoeffFrac.const(Fraction(1, 2)) - l
    out = MPoly.zero(f.vars)
    for i in range(n):
        zi = MPoly.var(f.vars, i)
        out = out + zi * d1[i].diff(i) + d1[i].scale(half_minus_l)
    two_k = k * 2
    for i in range(n):
        for j in range(i + 1, n):
            zi = MPoly.var(f.vars, i)
            zj = MPoly.var(f.vars, j)
            g = (zi * d1[i] - zj * d1[j]).div_diff(i, j)
            out = out - g.scale(two_k)
    return out


# ---------------------------------------------------------------------------
# BC-series, trigonometric (coordinates u_i = 2 sinh^2 x_i, divided by 4)
# ---------------------------------------------------------------------------

def _bc_first_order_u(p: CoeffFrac, q: CoeffFrac, vars, i: int) -> MPoly:
    """(1-2q)(u_i+1) - p(u_i+2), the single-particle drift on the x side."""
    ui = MPoly.var(vars, i)
    one = MPoly.one(vars)
    return (ui + one).scale(CoeffFrac.one() - q * 2) - (ui + one + one).scale(p)


def _uu2_d(f_d1: MPoly, vars, i: int) -> MPoly:
    """u_i (u_i + 2) * df (the radial vector field in u-coordinates)."""
    ui = MPoly.var(vars, i)
    two = MPoly.const(vars, 2)
    return (ui * (ui + two)) * f_d1


def apply_gauged_bc_trig(f: MPoly, k=None, p=None, q=None) -> MPoly:
    """Trigonometric BC operator in u-coordinates (n = 0 deformed case)."""
    k = CoeffFrac.var("k") if k is None else as_coeff(k)
    p = CoeffFrac.var("p") if p is None else as_coeff(p)
    q = CoeffFrac.var("q") if q is None else as_coeff(q)
    n = len(f.vars)
    _require_symmetric(f, list(range(n)), "S_N")
    d1 = [f.diff(i) for i in range(n)]
    out = MPoly.zero(f.vars)
    for i in range(n):
        ui = MPoly.var(f.vars, i)
        two = MPoly.const(f.vars, 2)
        out = out + (ui * (ui + two)) * d1[i].diff(i)
        out = out + _bc_first_order_u(p, q, f.vars, i) * d1[i]
    two_k = k * 2
    radial = [_uu2_d(d1[i], f.vars, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            out = out - (radial[i] - radial[j]).div_diff(i, j).scale(two_k)
    return out


# ---------------------------------------------------------------------------
# deformed BC(m, n)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeformedContext:
    """Sizes and parameter bindings for the deformed algebra Lambda_{m,n,k}."""

    m: int
    n: int
    k: CoeffFrac = None
    p: CoeffFrac = None
    q: CoeffFrac = None

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError("need m >= 0, n >= 0, m + n >= 1")
        for name in ("k", "p", "q"):
            v = getattr(self, name)
            object.__setattr__(self, name, CoeffFrac.var(name) if v is None else as_coeff(v))

    @property
    def vars(self) -> tuple[str, ...]:
        return uv_vars(self.m, self.n)

    def k_inverse(self) -> CoeffFrac:
        if self.k.is_zero():
            raise PoleError("deformed evaluation has a pole at k = 0")
        return CoeffFrac.one() / self.k

    def theorem_h(self) -> CoeffFrac:
        """The h binding -k*m - n - p/2 - q that makes restriction intertwine."""
        return -(self.k * self.m) - CoeffFrac.const(self.n) - self.p * Fraction(1, 2) - self.q


def phi_mn(f: SymFun, ctx: DeformedContext) -> MPoly:
    """Deformed evaluation: p_a -> sum u_i^a + k^-1 sum v_j^a, p0 -> m + k^-1 n."""
    kinv = ctx.k_inverse()
    vars = ctx.vars
    p0_value = CoeffFrac.const(ctx.m) + kinv * ctx.n
    weights = [CoeffFrac.one()] * ctx.m + [kinv] * ctx.n
    out = MPoly.zero(vars)
    for lam, c in f.coeffs.items():
        c = c.substitute({"p0": p0_value})
        if c.is_zero():
            continue
        term = MPoly.const(vars, c)
        for a in lam:
            term = term * MPoly.power_sum(vars, a, weights)
        out = out + term
    return out


def is_in_deformed_algebra(f: MPoly, ctx: DeformedContext) -> bool:
    """Membership in Lambda_{m,n,k}: separate symmetry plus the condition
    u_i df/du_i = k v_j df/dv_j on every hyperplane u_i = v_j."""
    m, n = ctx.m, ctx.n
    if not f.is_symmetric_in(list(range(m))):
        return False
    if not f.is_symmetric_in(list(range(m, m + n))):
        return False
    for i in range(m):
        for a in range(m, m + n):
            g = f.theta(i) - f.theta(a).scale(ctx.k)
            if not g.set_equal(i, a).is_zero():
                return False
    return True


def apply_gauged_deformed_bc(f: MPoly, ctx: DeformedContext) -> MPoly:
    """Deformed BC(m,n) operator in (u, v)-coordinates.

    The v-side carries the dual couplings: second order weighted by k,
    singles with the eliminated parameters r = p/k, 2s+1 = (2q+1)/k folded
    in, and mixed u-v interaction with relative weight k.
    """
    if not is_in_deformed_algebra(f, ctx):
        raise NotInDeformedAlgebra("input fails the Lambda_{m,n,k} membership test")
    m, n = ctx.m, ctx.n
    vars = f.vars
    k, p, q = ctx.k, ctx.p, ctx.q
    d1 = [f.diff(i) for i in range(m + n)]
    out = MPoly.zero(vars)
    one = MPoly.one(vars)
    two = one + one
    for i in range(m):
        ui = MPoly.var(vars, i)
        out = out + (ui * (ui + two)) * d1[i].diff(i)
        out = out + _bc_first_order_u(p, q, vars, i) * d1[i]
    for a in range(m, m + n):
        va = MPoly.var(vars, a)
        out = out + (va * (va + two)) * d1[a].diff(a).scale(k)
        # (2k - 2q - 1)(v+1) - p(v+2): the k Delta_n drift plus r,s singles
        drift = (va + one).scale(k * 2 - q * 2 - 1) - (va + two).scale(p)
        out = out + drift * d1[a]
    radial = [_uu2_d(d1[i], vars, i) for i in range(m + n)]
    two_k = k * 2
    for i in range(m):
        for j in range(i + 1, m):
            out = out - (radial[i] - radial[j]).div_diff(i, j).scale(two_k)
    for a in range(m, m + n):
        for b in range(a + 1, m + n):
            out = out - (radial[a] - radial[b]).div_diff(a, b).scale(2)
    for i in range(m):
        for a in range(m, m + n):
            out = out - (radial[i] - radial[a].scale(k)).div_diff(i, a).scale(2)
    return out


# ---------------------------------------------------------------------------
# kernels of the evaluation homomorphisms
# ---------------------------------------------------------------------------

def kernel_basis(hom, d: int) -> list[SymFun]:
    """Basis of the kernel of an evaluation homomorphism on degrees <= d.

    `hom` is either ("phi_N", N) or ("phi_mn", ctx); elements are returned
    homogeneous, graded degree by degree, by exact elimination over the
    fraction field.
    """
    kind, arg = hom
    if kind == "phi_N":
        apply_hom = lambda g: phi_N(g, arg)
    elif kind == "phi_mn":
        apply_hom = lambda g: phi_mn(g, arg)
    else:
        raise ValueError(f"unknown homomorphism {kind!r}")
    out: list[SymFun] = []
    for e in range(1, d + 1):
        basis = sorted(partitions_of(e), key=grevlex_key, reverse=True)
        images = [apply_hom(SymFun.p(lam)) for lam in basis]
        monos: set = set()
        for img in images:
            monos.update(img.terms.keys())
        rows = sorted(monos, key=monomial_key)
        matrix = [[img.terms.get(row, CoeffFrac.zero()) for img in images] for row in rows]
        if not rows:
            matrix = [[CoeffFrac.zero() for _ in images]]
        for vec in nullspace(matrix):
            out.append(SymFun({
                lam: c.reduced() for lam, c in zip(basis, vec) if not c.is_zero()
            }))
    return out
