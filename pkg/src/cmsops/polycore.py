"""Generic exact sparse polynomials in named variables.

A polynomial is a map from exponent tuples to nonzero coefficients:

    terms: dict[tuple[int, ...], C]

with one exponent slot per variable.  The coefficient type ``C`` only needs
ring arithmetic (``+``, ``-``, ``*``), truthiness (``bool(c) == False`` iff
``c`` is zero) and equality.  Two instantiations are used throughout:

  * parameter polynomials over ``fractions.Fraction`` (see ``coeffs``),
  * polynomials in z/u/v variables over the parameter fraction field
    (see ``mpoly``).

The zero polynomial has an empty term dict.  All operations return new
objects; instances are never mutated after construction.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator


def monomial_key(exps: tuple[int, ...]) -> tuple:
    """Graded-lexicographic sort key (higher degree first, then lex)."""
    return (-sum(exps), tuple(-e for e in exps))


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict):
        self.vars = vars
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "Poly":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: tuple[str, ...], c) -> "Poly":
        if not c:
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: tuple[str, ...], name: str, one) -> "Poly":
        i = vars.index(name)
        exp = [0] * len(vars)
        exp[i] = 1
        return cls(vars, {tuple(exp): one})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        zero_exp = (0,) * len(self.vars)
        return len(self.terms) == 1 and zero_exp in self.terms

    def constant_coeff(self, zero):
        return self.terms.get((0,) * len(self.vars), zero)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, idx: int) -> int:
        if not self.terms:
            return 0
        return max(e[idx] for e in self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def leading(self) -> tuple[tuple[int, ...], object]:
        return min(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        if self.vars != other.vars:
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[e] == c for e, c in self.terms.items())

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return Poly(self.vars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.vars, {})
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if e in out:
                    s = out[e] + prod
                    if s:
                        out[e] = s
                    else:
                        del out[e]
                elif prod:
                    out[e] = prod
        return Poly(self.vars, out)

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.vars, {})
        return Poly(self.vars, {e: k * c for e, k in self.terms.items() if k * c})

    def mul_monomial(self, exps: tuple[int, ...], c) -> "Poly":
        if not c:
            return Poly(self.vars, {})
        out = {}
        for e, k in self.terms.items():
            prod = k * c
            if prod:
                out[tuple(x + y for x, y in zip(e, exps))] = prod
        return Poly(self.vars, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        if n == 0:
            raise ValueError("use an explicit constant for exponent 0")
        result = None
        base = self
        k = n
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus and substitution -------------------------------------

    def derivative(self, idx: int, make_int_coeff: Callable[[int], object]) -> "Poly":
        """Partial derivative with respect to variable ``idx``.

        ``make_int_coeff`` lifts a Python int into the coefficient ring.
        """
        out: dict = {}
        for e, c in self.terms.items():
            d = e[idx]
            if d == 0:
                continue
            ne = list(e)
            ne[idx] = d - 1
            nc = c * make_int_coeff(d)
            if nc:
                out[tuple(ne)] = nc
        return Poly(self.vars, out)

    def theta_derivative(self, idx: int, make_int_coeff: Callable[[int], object]) -> "Poly":
        """Euler derivative x_idx * d/dx_idx."""
        out: dict = {}
        for e, c in self.terms.items():
            d = e[idx]
            if d == 0:
                continue
            nc = c * make_int_coeff(d)
            if nc:
                out[e] = nc
        return Poly(self.vars, out)

    def substitute_var(self, idx: int, repl: "Poly") -> "Poly":
        """Replace variable ``idx`` by the polynomial ``repl`` (same vars)."""
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[idx]
            ne = list(e)
            ne[idx] = 0
            groups.setdefault(d, {})[tuple(ne)] = c
        out = Poly.zero(self.vars)
        for d in sorted(groups, reverse=True):
            base = Poly(self.vars, groups[d])
            out = out + base * (repl**d) if d else out + base
        return out

    def rename_var_to(self, idx: int, target: int) -> "Poly":
        """Substitute x_idx := x_target (exponent transfer)."""
        out: dict = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[target] += ne[idx]
            ne[idx] = 0
            key = tuple(ne)
            if key in out:
                s = out[key] + c
                if s:
                    out[key] = s
                else:
                    del out[key]
            else:
                out[key] = c
        return Poly(self.vars, out)

    def permute_vars(self, perm: dict[int, int]) -> "Poly":
        """Apply a permutation of variable positions (idx -> perm[idx])."""
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, d in enumerate(e):
                ne[perm.get(i, i)] = d
            out[tuple(ne)] = c
        return Poly(self.vars, out)

    def evaluate(self, values: list) -> object:
        """Full evaluation; values[i] multiplies in the coefficient ring."""
        total = None
        for e, c in self.terms.items():
            term = c
            for i, d in enumerate(e):
                if d:
                    term = term * values[i] ** d
            total = term if total is None else total + term
        return total

    # -- exact division -------------------------------------------------

    def divide_by_difference(self, i: int, j: int) -> "Poly":
        """Exact quotient by (x_i - x_j); raises ValueError if not divisible.

        Synthetic division along x_i: the remainder is the substitution
        x_i := x_j, which must vanish.
        """
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[i]
            ne = list(e)
            ne[i] = 0
            groups.setdefault(d, {})[tuple(ne)] = c
        if not groups:
            return Poly(self.vars, {})
        top = max(groups)
        quot_coeffs: dict[int, Poly] = {}
        carry = Poly.zero(self.vars)
        xj = None
        for d in range(top, 0, -1):
            cur = Poly(self.vars, groups.get(d, {})) + carry
            quot_coeffs[d - 1] = cur
            if xj is None:
                exp = [0] * len(self.vars)
                exp[j] = 1
                xj = exp
            carry = Poly(self.vars, {tuple(x + y for x, y in zip(e, xj)): c for e, c in cur.terms.items()})
        remainder = Poly(self.vars, groups.get(0, {})) + carry
        if not remainder.is_zero():
            raise ValueError(f"not divisible by ({self.vars[i]} - {self.vars[j]})")
        out: dict = {}
        for d, poly in quot_coeffs.items():
            for e, c in poly.terms.items():
                ne = list(e)
                ne[i] += d
                key = tuple(ne)
                if key in out:
                    s = out[key] + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
                else:
                    out[key] = c
        return Poly(self.vars, out)

    def __repr__(self) -> str:
        return f"Poly({self.vars!r}, {len(self.terms)} terms)"
