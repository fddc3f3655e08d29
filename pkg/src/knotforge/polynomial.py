"""Exact Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "ZeroPolynomialError", "degrees", "substitute_quarter", "loop_value"]


class ZeroPolynomialError(ValueError):
    """Raised when a degree query is made on the zero polynomial."""


class LaurentPoly:
    """Sparse map exponent -> nonzero int coefficient.

    Values are treated as immutable; every operation returns a new object.
    ``var`` is only used for rendering and is ignored by equality.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self.var = var

    # construction helpers
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({exponent: coeff}, var=var)

    @classmethod
    def const(cls, c: int, var: str = "A") -> "LaurentPoly":
        return cls({0: c}, var=var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    # ring operations
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({e * k: c ** (-k)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``var -> var**-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self.var)

    def with_var(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self._terms, var)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # rendering
    def __str__(self) -> str:
        return self.format()

    def format(self, ascending: bool = False) -> str:
        """``c*A^e`` terms joined by signs, highest exponent first unless ``ascending``."""
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._terms, reverse=not ascending)):
            c = self._terms[e]
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + f"{self.var}^{e}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {str(e): self._terms[e] for e in sorted(self._terms)}

    @classmethod
    def from_json(cls, data: Mapping[str, int], var: str = "A") -> "LaurentPoly":
        return cls({int(k): v for k, v in data.items()}, var=var)


def degrees(p: LaurentPoly) -> tuple[int, int, int]:
    """Return ``(max exponent, min exponent, span)``."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no degrees")
    hi, lo = max(p._terms), min(p._terms)
    return hi, lo, hi - lo


def substitute_quarter(p: LaurentPoly, var: str = "t") -> LaurentPoly:
    """Apply ``A = t**(-1/4)``: exponent ``e`` becomes ``-e/4``.

    Raises ValueError if some exponent is not a multiple of 4.
    """
    bad = [e for e in p._terms if e % 4]
    if bad:
        raise ValueError(f"exponents not divisible by 4: {sorted(bad)}")
    return LaurentPoly({-e // 4: c for e, c in p._terms.items()}, var=var)


def loop_value(var: str = "A") -> LaurentPoly:
    """The closed-loop factor -A^2 - A^-2."""
    return LaurentPoly({2: -1, -2: -1}, var=var)
