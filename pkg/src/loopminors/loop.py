"""Exact 2x2 Laurent-polynomial matrices: generators, words, membership.

Laurent polynomials carry either rational coefficients (numeric mode) or
integer multivariate polynomials in a1..ak (symbolic mode); both are exact
and share one arithmetic path.  A loop element is a 2x2 Laurent matrix with
determinant exactly 1, checked at construction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .multipoly import MultiPoly
from .tableaux import check_word


class LaurentPoly:
    """Finitely supported map from integer t-exponents to ring coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    clean[int(exp)] = coeff
        self.terms = clean

    @classmethod
    def const(cls, coeff) -> "LaurentPoly":
        return cls({0: coeff})

    def coeff(self, exp: int, zero):
        return self.terms.get(exp, zero)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            total = terms.get(exp)
            total = coeff if total is None else total + coeff
            if total:
                terms[exp] = total
            else:
                terms.pop(exp, None)
        out = LaurentPoly()
        out.terms = terms
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly()
        out.terms = {exp: -coeff for exp, coeff in self.terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms: dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = e1 + e2
                product = c1 * c2
                total = terms.get(exp)
                total = product if total is None else total + product
                if total:
                    terms[exp] = total
                else:
                    terms.pop(exp, None)
        out = LaurentPoly()
        out.terms = terms
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self) -> int | None:
        return min(self.terms) if self.terms else None

    def max_exp(self) -> int | None:
        return max(self.terms) if self.terms else None

    def is_polynomial(self) -> bool:
        """No negative powers of t."""
        low = self.min_exp()
        return low is None or low >= 0

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"


class LoopElement:
    """A 2x2 Laurent matrix of determinant 1.

    ``nvars`` is None in numeric (rational) mode, or the shared variable
    count of the symbolic coefficients.
    """

    __slots__ = ("entries", "nvars")

    def __init__(self, entries, nvars: int | None = None):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != 2 or any(len(row) != 2 for row in entries):
            raise DomainError("a loop element is a 2x2 matrix")
        self.entries = entries
        self.nvars = nvars
        det = self.determinant()
        if det != LaurentPoly.const(self.one_coeff()):
            raise DomainError(f"determinant is not 1: {det!r}")

    def one_coeff(self):
        return MultiPoly.one(self.nvars) if self.nvars is not None else Fraction(1)

    def zero_coeff(self):
        return MultiPoly.zero(self.nvars) if self.nvars is not None else Fraction(0)

    def entry(self, i: int, j: int) -> LaurentPoly:
        """1-origin matrix component, i, j in {1, 2}."""
        if i not in (1, 2) or j not in (1, 2):
            raise DomainError(f"component indices must be 1 or 2, got ({i}, {j})")
        return self.entries[i - 1][j - 1]

    def determinant(self) -> LaurentPoly:
        (g11, g12), (g21, g22) = self.entries
        return g11 * g22 - g12 * g21

    def __mul__(self, other: "LoopElement") -> "LoopElement":
        if self.nvars != other.nvars:
            raise DomainError("cannot multiply loop elements of different modes")
        a, b = self.entries, other.entries
        rows = []
        for i in range(2):
            rows.append(
                tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2))
            )
        return LoopElement(rows, nvars=self.nvars)

    def __eq__(self, other):
        return (
            isinstance(other, LoopElement)
            and self.nvars == other.nvars
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"LoopElement({self.entries!r}, nvars={self.nvars})"

    def to_json(self) -> dict:
        def render(coeff) -> str:
            return coeff.text() if isinstance(coeff, MultiPoly) else str(coeff)

        out = {}
        for i in (1, 2):
            for j in (1, 2):
                out[f"g{i}{j}"] = {
                    str(exp): render(coeff)
                    for exp, coeff in sorted(self.entry(i, j).terms.items())
                }
        return out


def identity_loop(nvars: int | None = None) -> LoopElement:
    one = MultiPoly.one(nvars) if nvars is not None else Fraction(1)
    unit = LaurentPoly.const(one)
    zero = LaurentPoly()
    return LoopElement(((unit, zero), (zero, unit)), nvars=nvars)


def generator(i: int, a) -> LoopElement:
    """The one-parameter elements [[1,0],[a t,1]] (i=0) and [[1,a],[0,1]] (i=1)."""
    if i not in (0, 1):
        raise DomainError(f"generator parity must be 0 or 1, got {i}")
    if isinstance(a, MultiPoly):
        nvars = a.nvars
        one = MultiPoly.one(nvars)
    else:
        a = Fraction(a)
        nvars = None
        one = Fraction(1)
    unit = LaurentPoly.const(one)
    zero = LaurentPoly()
    if i == 0:
        lower = LaurentPoly({1: a})
        entries = ((unit, zero), (lower, unit))
    else:
        upper = LaurentPoly.const(a)
        entries = ((unit, upper), (zero, unit))
    return LoopElement(entries, nvars=nvars)


def word_to_loop(word) -> LoopElement:
    """Symbolic product of generators along an alternating word.

    The t-th letter contributes the formal parameter a_{t+1}; the result has
    determinant 1 by construction (re-checked at every multiplication).
    """
    word = check_word(word)
    if not word:
        raise DomainError("a factorization word must have at least one letter")
    k = len(word)
    product = identity_loop(nvars=k)
    for t, bit in enumerate(word):
        product = product * generator(bit, MultiPoly.variable(k, t))
    return product


def is_unipotent_plus(g: LoopElement) -> bool:
    """Membership in the positive unipotent subgroup.

    Diagonal entries lie in 1 + t C[t], the upper entry in C[t], the lower
    in t C[t]; the determinant condition is already guaranteed.
    """
    one = g.one_coeff()
    zero = g.zero_coeff()
    g11, g12, g21, g22 = g.entry(1, 1), g.entry(1, 2), g.entry(2, 1), g.entry(2, 2)
    if not (g11.is_polynomial() and g12.is_polynomial() and g21.is_polynomial() and g22.is_polynomial()):
        return False
    if g11.coeff(0, zero) != one or g22.coeff(0, zero) != one:
        return False
    if g21.coeff(0, zero) != zero:
        return False
    return True
