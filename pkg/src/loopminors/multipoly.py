"""Exact multivariate polynomials over Python integers.

Variables are positional: a polynomial in k variables a1..ak keeps a map
from length-k exponent tuples to nonzero integer coefficients.  Arithmetic
never rounds or overflows.  The canonical term order used for text and JSON
output is descending lexicographic on the exponent tuple, which reproduces
the conventional "leading monomial first" reading.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise DomainError(
                        f"exponent tuple {exps} has length {len(exps)}, expected {nvars}"
                    )
                if any(e < 0 for e in exps):
                    raise DomainError(f"negative exponent in {exps}")
                if coeff:
                    clean[exps] = clean.get(exps, 0) + int(coeff)
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.const(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        """The variable a_{index+1} (0-origin index)."""
        if not 0 <= index < nvars:
            raise DomainError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff: int = 1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): coeff})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly(self.nvars)
        out.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(exps, 0) + c1 * c2
                if total:
                    terms[exps] = total
                else:
                    terms.pop(exps, None)
        out = MultiPoly(self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_value(self) -> int:
        """The coefficient of the constant monomial."""
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def total_degree(self) -> int:
        """Maximum monomial degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {sum(exps) for exps in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def evaluate(self, values) -> Fraction:
        """Evaluate at rational values, one per variable."""
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise DomainError(f"expected {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def embed(self, nvars: int, offset: int = 0) -> "MultiPoly":
        """Re-index into a larger variable set: a_j becomes a_{j+offset}."""
        if offset < 0 or self.nvars + offset > nvars:
            raise DomainError("embedding does not fit the target variable count")
        terms = {}
        for exps, coeff in self.terms.items():
            new = (0,) * offset + exps + (0,) * (nvars - offset - self.nvars)
            terms[new] = coeff
        return MultiPoly(nvars, terms)

    # -- canonical output ---------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in descending lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for idx, e in enumerate(exps):
                if e == 1:
                    factors.append(f"a{idx + 1}")
                elif e > 1:
                    factors.append(f"a{idx + 1}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append((coeff < 0, body))
        first_neg, first_body = pieces[0]
        text = ("-" if first_neg else "") + first_body
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def json_terms(self) -> dict[str, int]:
        """Exponent-keyed coefficient map, e.g. {"1,2,0,0": 1}."""
        return {
            ",".join(str(e) for e in exps): coeff for exps, coeff in self.sorted_terms()
        }

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.text()!r})"
