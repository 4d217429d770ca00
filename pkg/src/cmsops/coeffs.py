"""The exact coefficient field Q(k, p, q, h, p0, l).

Every coefficient in this package is a ``CoeffFrac``: a quotient of two
sparse polynomials (``ParamPoly``) in the six closed formal parameters

    k, p, q, h, p0, l

over arbitrary-precision rationals.  Fractions may be stored unreduced;
equality always goes through cross-multiplication, so correctness never
depends on gcd cancellation.  ``CoeffFrac.reduced()`` runs a full
multivariate gcd (primitive subresultant remainder sequences) and is used
to keep eigen-solver output readable.

``limit_along_parameter`` cancels the maximal common power of
(param - value) from numerator and denominator before substituting, which
is how specializations sitting on apparent poles (e.g. k -> -1) are taken.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .polycore import Poly, monomial_key

PARAMS: tuple[str, ...] = ("k", "p", "q", "h", "p0", "l")
_NPARAMS = len(PARAMS)
_PIDX = {name: i for i, name in enumerate(PARAMS)}
_ZERO_EXP = (0,) * _NPARAMS

Rational = Fraction


class PoleError(ArithmeticError):
    """A substitution or limit made a denominator vanish identically."""


# ---------------------------------------------------------------------------
# ParamPoly: Poly over Fraction in the fixed parameter tuple
# ---------------------------------------------------------------------------

class ParamPoly(Poly):
    __slots__ = ()

    def __init__(self, terms: dict | None = None):
        super().__init__(PARAMS, terms if terms is not None else {})

    @staticmethod
    def from_terms(terms: dict) -> "ParamPoly":
        return ParamPoly({e: c for e, c in terms.items() if c})

    @staticmethod
    def const(value) -> "ParamPoly":
        c = Fraction(value)
        return ParamPoly({_ZERO_EXP: c} if c else {})

    @staticmethod
    def var(name: str) -> "ParamPoly":
        exp = [0] * _NPARAMS
        exp[_PIDX[name]] = 1
        return ParamPoly({tuple(exp): Fraction(1)})

    def __add__(self, other):
        return _as_param(Poly.__add__(self, other))

    def __sub__(self, other):
        return _as_param(Poly.__sub__(self, other))

    def __neg__(self):
        return _as_param(Poly.__neg__(self))

    def __mul__(self, other):
        return _as_param(Poly.__mul__(self, other))

    def __pow__(self, n):
        if n == 0:
            return ParamPoly.const(1)
        return _as_param(Poly.__pow__(self, n))

    def is_one(self) -> bool:
        return self.terms == {_ZERO_EXP: Fraction(1)}

    def as_fraction(self) -> Fraction | None:
        """The value as a plain rational, or None if non-constant."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and _ZERO_EXP in self.terms:
            return self.terms[_ZERO_EXP]
        return None

    def degree_in_param(self, name: str) -> int:
        return self.degree_in(_PIDX[name])

    # -- substitution ----------------------------------------------------

    def substitute(self, bindings: dict) -> "CoeffFrac":
        """Substitute parameters; values may be rationals or CoeffFracs."""
        vals: dict[int, CoeffFrac] = {}
        for name, v in bindings.items():
            if name not in _PIDX:
                raise KeyError(f"unknown parameter {name!r}")
            vals[_PIDX[name]] = as_coeff(v)
        out = CoeffFrac.zero()
        for e, c in self.terms.items():
            term = CoeffFrac.const(c)
            rest = list(e)
            for i, v in vals.items():
                d = e[i]
                if d:
                    term = term * v**d
                    rest[i] = 0
            term = term * CoeffFrac.from_poly(ParamPoly({tuple(rest): Fraction(1)}))
            out = out + term
        return out

    def subs_poly(self, bindings: dict[str, "ParamPoly"]) -> "ParamPoly":
        """Substitution with polynomial values only (stays a polynomial)."""
        out = ParamPoly.const(0)
        for e, c in self.terms.items():
            term = ParamPoly.const(c)
            rest = list(e)
            for name, v in bindings.items():
                i = _PIDX[name]
                d = e[i]
                if d:
                    term = term * v**d
                    rest[i] = 0
            out = out + term * ParamPoly({tuple(rest): Fraction(1)})
        return out

    # -- (param - value)-adic machinery for limits -----------------------

    def eval_param(self, name: str, value: Fraction) -> "ParamPoly":
        """Substitute a single parameter by a rational."""
        i = _PIDX[name]
        out: dict = {}
        for e, c in self.terms.items():
            nc = c * value ** e[i] if e[i] else c
            if not nc:
                continue
            ne = list(e)
            ne[i] = 0
            key = tuple(ne)
            s = out.get(key, Fraction(0)) + nc
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return ParamPoly(out)

    def div_linear(self, name: str, value: Fraction) -> tuple["ParamPoly", "ParamPoly"]:
        """Quotient and remainder on division by (name - value).

        The remainder equals the substitution name := value.
        """
        i = _PIDX[name]
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[i]
            ne = list(e)
            ne[i] = 0
            groups.setdefault(d, {})[tuple(ne)] = c
        if not groups:
            return ParamPoly(), ParamPoly()
        top = max(groups)
        quot: dict = {}
        carry = ParamPoly()
        for d in range(top, 0, -1):
            cur = ParamPoly(dict(groups.get(d, {}))) + carry
            for e, c in cur.terms.items():
                ne = list(e)
                ne[i] = d - 1
                quot[tuple(ne)] = c
            carry = _as_param(cur.scale(value)) if value else ParamPoly()
        rem = ParamPoly(dict(groups.get(0, {}))) + carry
        return ParamPoly(quot), rem

    def __str__(self) -> str:
        return format_param_poly(self)

    def __repr__(self) -> str:
        return f"ParamPoly({format_param_poly(self)})"


def _as_param(p: Poly) -> ParamPoly:
    return ParamPoly(p.terms)


def _make_frac(n: int) -> Fraction:
    return Fraction(n)


# ---------------------------------------------------------------------------
# multivariate gcd over Q (primitive pseudo-remainder sequences)
# ---------------------------------------------------------------------------

def _int_normalize(p: ParamPoly) -> tuple[Fraction, ParamPoly]:
    """Write p = c * p' with p' integer-coefficient, content 1, positive lead."""
    if p.is_zero():
        return Fraction(0), ParamPoly()
    nums = [c.numerator for c in p.terms.values()]
    dens = [c.denominator for c in p.terms.values()]
    g = 0
    for n in nums:
        g = int_gcd(g, abs(n))
    l = 1
    for d in dens:
        l = l * d // int_gcd(l, d)
    scale = Fraction(g, l)
    lead = p.terms[min(p.terms, key=monomial_key)]
    if lead < 0:
        scale = -scale
    prim = ParamPoly({e: c / scale for e, c in p.terms.items()})
    return scale, prim


def _coeffs_in(p: ParamPoly, idx: int) -> dict[int, ParamPoly]:
    groups: dict[int, dict] = {}
    for e, c in p.terms.items():
        d = e[idx]
        ne = list(e)
        ne[idx] = 0
        groups.setdefault(d, {})[tuple(ne)] = c
    return {d: ParamPoly(t) for d, t in groups.items()}


def _from_coeffs(coeffs: dict[int, ParamPoly], idx: int) -> ParamPoly:
    out: dict = {}
    for d, poly in coeffs.items():
        for e, c in poly.terms.items():
            ne = list(e)
            ne[idx] = d
            out[tuple(ne)] = c
    return ParamPoly(out)


def poly_exact_div(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Exact multivariate division; raises ValueError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    bf = b.as_fraction()
    if bf is not None:
        return _as_param(a.scale(Fraction(1) / bf))
    quot: dict = {}
    rem = a
    b_lead_exp, b_lead_c = b.leading()
    while not rem.is_zero():
        e, c = rem.leading()
        qe = tuple(x - y for x, y in zip(e, b_lead_exp))
        if any(x < 0 for x in qe):
            raise ValueError("not divisible")
        qc = c / b_lead_c
        quot[qe] = qc
        rem = rem - b.mul_monomial(qe, qc)
    return ParamPoly(quot)


def _content_and_primitive(p: ParamPoly, idx: int) -> tuple[ParamPoly, ParamPoly]:
    coeffs = _coeffs_in(p, idx)
    cont = ParamPoly()
    for c in coeffs.values():
        cont = poly_gcd(cont, c)
        if cont.is_one():
            break
    prim = poly_exact_div(p, cont)
    return cont, prim


def poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Gcd over Q, normalized to integer content 1 with positive lead."""
    if a.is_zero():
        return _int_normalize(b)[1] if not b.is_zero() else ParamPoly()
    if b.is_zero():
        return _int_normalize(a)[1]
    if a.is_constant() or b.is_constant():
        return ParamPoly.const(1)
    idx = None
    for i in range(_NPARAMS):
        if a.degree_in(i) > 0 or b.degree_in(i) > 0:
            idx = i
            break
    if a.degree_in(idx) == 0 or b.degree_in(idx) == 0:
        ca = _content_in(a, idx)
        cb = _content_in(b, idx)
        return poly_gcd(ca, cb)
    ca, pa = _content_and_primitive(a, idx)
    cb, pb = _content_and_primitive(b, idx)
    cont = poly_gcd(ca, cb)
    if pa.degree_in(idx) < pb.degree_in(idx):
        pa, pb = pb, pa
    while True:
        r = _pseudo_rem(pa, pb, idx)
        if r.is_zero():
            break
        r = _content_and_primitive(r, idx)[1]
        pa, pb = pb, r
        if pb.degree_in(idx) == 0:
            pb = ParamPoly.const(1)
            break
    g = _content_and_primitive(pb, idx)[1] if pb.degree_in(idx) > 0 else pb
    return _int_normalize(cont * g)[1]


def _content_in(p: ParamPoly, idx: int) -> ParamPoly:
    coeffs = _coeffs_in(p, idx)
    cont = ParamPoly()
    for c in coeffs.values():
        cont = poly_gcd(cont, c)
        if cont.is_one():
            break
    return cont


def _pseudo_rem(a: ParamPoly, b: ParamPoly, idx: int) -> ParamPoly:
    da, db = a.degree_in(idx), b.degree_in(idx)
    if da < db:
        return a
    bc = _coeffs_in(b, idx)
    lb = bc[db]
    rem = a
    xi_exp = [0] * _NPARAMS
    xi_exp[idx] = 1
    for d in range(da, db - 1, -1):
        rc = _coeffs_in(rem, idx)
        if rem.is_zero() or rem.degree_in(idx) < d:
            rem = _as_param(rem * lb)
            continue
        lead = rc.get(d)
        if lead is None or lead.is_zero():
            rem = _as_param(rem * lb)
            continue
        shift = [0] * _NPARAMS
        shift[idx] = d - db
        rem = _as_param(rem * lb) - _as_param((b * lead).mul_monomial(tuple(shift), Fraction(1)))
    return rem


# ---------------------------------------------------------------------------
# CoeffFrac
# ---------------------------------------------------------------------------

class CoeffFrac:
    """A quotient num/den of ParamPolys; den never the zero polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly | None = None, normalize: bool = True):
        if den is None:
            den = ParamPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if normalize:
            num, den = _light_normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "CoeffFrac":
        return CoeffFrac(ParamPoly(), None, normalize=False)

    @staticmethod
    def one() -> "CoeffFrac":
        return CoeffFrac(ParamPoly.const(1), None, normalize=False)

    @staticmethod
    def const(value) -> "CoeffFrac":
        return CoeffFrac(ParamPoly.const(value), None, normalize=False)

    @staticmethod
    def var(name: str) -> "CoeffFrac":
        return CoeffFrac(ParamPoly.var(name), None, normalize=False)

    @staticmethod
    def from_poly(p: ParamPoly) -> "CoeffFrac":
        return CoeffFrac(p, None, normalize=False)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def as_fraction(self) -> Fraction | None:
        n = self.num.as_fraction()
        d = self.den.as_fraction()
        if n is None or d is None:
            return None
        return n / d

    def __eq__(self, other) -> bool:
        """Equality by cross-multiplication (no reduction required)."""
        if isinstance(other, (int, Fraction)):
            other = CoeffFrac.const(other)
        if not isinstance(other, CoeffFrac):
            return NotImplemented
        if self.den.terms == other.den.terms:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("CoeffFrac is not hashable")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "CoeffFrac":
        other = as_coeff(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den.terms == other.den.terms:
            return CoeffFrac(self.num + other.num, self.den)
        return CoeffFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __radd__(self, other) -> "CoeffFrac":
        return self.__add__(other)

    def __neg__(self) -> "CoeffFrac":
        return CoeffFrac(-self.num, self.den, normalize=False)

    def __sub__(self, other) -> "CoeffFrac":
        return self.__add__(-as_coeff(other))

    def __rsub__(self, other) -> "CoeffFrac":
        return as_coeff(other).__add__(-self)

    def __mul__(self, other) -> "CoeffFrac":
        other = as_coeff(other)
        if self.num.is_zero() or other.num.is_zero():
            return CoeffFrac.zero()
        if self.den.is_one() and other.den.is_one():
            return CoeffFrac(self.num * other.num, None, normalize=False)
        return CoeffFrac(self.num * other.num, self.den * other.den)

    def __rmul__(self, other) -> "CoeffFrac":
        return self.__mul__(other)

    def __truediv__(self, other) -> "CoeffFrac":
        other = as_coeff(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero coefficient")
        return CoeffFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "CoeffFrac":
        return as_coeff(other).__truediv__(self)

    def __pow__(self, n: int) -> "CoeffFrac":
        if n == 0:
            return CoeffFrac.one()
        if n < 0:
            return CoeffFrac.one() / self**(-n)
        return CoeffFrac(self.num**n, self.den**n, normalize=False)

    # -- substitution and limits ---------------------------------------------

    def substitute(self, bindings: dict) -> "CoeffFrac":
        """Exact substitution of parameters by rationals/polys/fractions.

        Raises PoleError if the denominator becomes identically zero.
        """
        num = self.num.substitute(bindings)
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise PoleError(f"denominator {self.den} vanishes under {_fmt_bindings(bindings)}")
        return num / den

    def limit_along_parameter(self, name: str, value) -> "CoeffFrac":
        """Cancel the maximal power of (name - value) shared by num and den,
        then substitute name := value."""
        value = Fraction(value)
        num, den = self.num, self.den
        if num.is_zero():
            return CoeffFrac.zero()
        while True:
            qn, rn = num.div_linear(name, value)
            if not rn.is_zero():
                break
            qd, rd = den.div_linear(name, value)
            if not rd.is_zero():
                break
            num, den = qn, qd
        den_eval = den.eval_param(name, value)
        if den_eval.is_zero():
            raise PoleError(
                f"pole at {name} = {value}: denominator {den} still vanishes after cancellation"
            )
        return CoeffFrac(num.eval_param(name, value), den_eval)

    def reduced(self) -> "CoeffFrac":
        """Divide out the full polynomial gcd of num and den (canonicalizing pass)."""
        if self.num.is_zero():
            return CoeffFrac.zero()
        g = poly_gcd(self.num, self.den)
        num = poly_exact_div(self.num, g) if not g.is_one() else self.num
        den = poly_exact_div(self.den, g) if not g.is_one() else self.den
        scale, den_prim = _int_normalize(den)
        num_scaled = _as_param(num.scale(Fraction(1) / scale))
        return CoeffFrac(num_scaled, den_prim, normalize=False)

    def depends_on(self, name: str) -> bool:
        i = _PIDX[name]
        return any(e[i] for e in self.num.terms) or any(e[i] for e in self.den.terms)

    def __str__(self) -> str:
        return format_coeff(self)

    def __repr__(self) -> str:
        return f"CoeffFrac({format_coeff(self)})"


def _light_normalize(num: ParamPoly, den: ParamPoly) -> tuple[ParamPoly, ParamPoly]:
    """Cheap cleanup: canonical zero, rational-scale den to integer primitive."""
    if num.is_zero():
        return ParamPoly(), ParamPoly.const(1)
    df = den.as_fraction()
    if df is not None:
        if df == 1:
            return num, den
        return _as_param(num.scale(Fraction(1) / df)), ParamPoly.const(1)
    scale, den_prim = _int_normalize(den)
    if scale != 1:
        num = _as_param(num.scale(Fraction(1) / scale))
    return num, den_prim


def as_coeff(v) -> CoeffFrac:
    """Coerce ints, Fractions, ParamPolys and CoeffFracs to CoeffFrac."""
    if isinstance(v, CoeffFrac):
        return v
    if isinstance(v, ParamPoly):
        return CoeffFrac.from_poly(v)
    if isinstance(v, (int, Fraction)):
        return CoeffFrac.const(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to CoeffFrac")


def frac_equal(a: CoeffFrac, b: CoeffFrac) -> bool:
    return as_coeff(a) == as_coeff(b)


# convenient symbolic handles
K = CoeffFrac.var("k")
P = CoeffFrac.var("p")
Q = CoeffFrac.var("q")
H = CoeffFrac.var("h")
P0 = CoeffFrac.var("p0")
L = CoeffFrac.var("l")

ONE = CoeffFrac.one()
ZERO = CoeffFrac.zero()


def _fmt_bindings(bindings: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(bindings.items()))


# ---------------------------------------------------------------------------
# serialization: canonical strings and round-trip parsing
# ---------------------------------------------------------------------------

def _fmt_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def format_param_poly(p: ParamPoly) -> str:
    """Canonical string, graded-lex ordered terms, e.g. '2*k - 1'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            name if d == 1 else f"{name}^{d}"
            for name, d in zip(PARAMS, e) if d
        )
        if not mono:
            body = _fmt_fraction(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{_fmt_fraction(abs(c))}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_coeff(f: CoeffFrac) -> str:
    num = format_param_poly(f.num)
    if f.den.is_one():
        return num
    den = format_param_poly(f.den)
    num_s = f"({num})" if (" " in num or f.num.total_degree() > 0) else num
    den_s = f"({den})" if (" " in den or f.den.total_degree() > 0) else den
    return f"{num_s}/{den_s}"


class _Parser:
    """Recursive-descent parser for the CoeffFrac string form."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ValueError(f"parse error at {self.pos} in {self.text!r}: {msg}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> CoeffFrac:
        v = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")
        return v

    def expr(self) -> CoeffFrac:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            v = -self.term()
        elif ch == "+":
            self.pos += 1
            v = self.term()
        else:
            v = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self) -> CoeffFrac:
        v = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                v = v * self.factor()
            elif ch == "/":
                self.pos += 1
                v = v / self.factor()
            else:
                return v

    def factor(self) -> CoeffFrac:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip_ws()
            n = self.integer()
            return base**n
        return base

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def atom(self) -> CoeffFrac:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return v
        if ch.isdigit():
            return CoeffFrac.const(self.integer())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in _PIDX:
                self.error(f"unknown parameter {name!r}")
            return CoeffFrac.var(name)
        self.error(f"unexpected character {ch!r}")


def parse_coeff(text: str) -> CoeffFrac:
    """Parse the canonical CoeffFrac string form (round-trips format_coeff)."""
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
