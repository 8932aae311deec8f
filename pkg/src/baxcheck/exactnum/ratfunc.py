"""Rational functions in canonical form.

A RatFunc is a reduced fraction num/den of MultiPoly over the same variable
tuple: gcd(num, den) = 1 and den is monic under the global graded-lex order.
This makes the stored representation unique for a given function, so equality
is structural and reports are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import MultiPoly, poly_gcd


class PoleError(ArithmeticError):
    """Raised when evaluation hits a zero of the denominator."""


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.vars, 1)
        if num.vars != den.vars:
            raise ValueError(f"mismatched variable lists {num.vars} vs {den.vars}")
        if den.is_zero:
            raise ZeroDivisionError("zero divisor")
        if num.is_zero:
            self.num = num
            self.den = MultiPoly.const(num.vars, 1)
            return
        # constants are units: no gcd needed when either side is constant
        if not den.is_constant() and not num.is_constant():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.divexact(g)
                den = den.divexact(g)
        lc = den.leading()[1]
        if lc != 1:
            num = _scale(num, Fraction(1) / lc)
            den = _scale(den, Fraction(1) / lc)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, vars: tuple[str, ...], value) -> "RatFunc":
        return cls(MultiPoly.const(vars, value))

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "RatFunc":
        return cls(MultiPoly.zero(vars))

    @classmethod
    def one(cls, vars: tuple[str, ...]) -> "RatFunc":
        return cls(MultiPoly.const(vars, 1))

    @classmethod
    def var(cls, vars: tuple[str, ...], name: str) -> "RatFunc":
        return cls(MultiPoly.var(vars, name))

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "RatFunc":
        return cls(poly)

    # -- queries -----------------------------------------------------------

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def is_one(self) -> bool:
        return self.num == self.den

    def num_terms(self) -> int:
        return self.num.num_terms() + self.den.num_terms()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            if self.vars != other.vars:
                raise ValueError(f"mismatched variable lists {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.vars, other)
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # classic reduced addition: all gcds stay operand-sized
        d1, d2 = self.den, other.den
        if d1.is_constant() or d2.is_constant():
            g = None
        else:
            g = poly_gcd(d1, d2)
            if g.is_constant():
                g = None
        if g is None:
            num = self.num * d2 + other.num * d1
            return _reduced(num, d1 * d2)
        d1g = d1.divexact(g)
        t = self.num * d2.divexact(g) + other.num * d1g
        if t.is_zero:
            return RatFunc.zero(self.vars)
        h = poly_gcd(t, g) if not t.is_constant() else None
        if h is None or h.is_constant():
            return _reduced(t, d1g * d2)
        return _reduced(t.divexact(h), d1g * d2.divexact(h))

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.vars)
        n1, d2 = _cross_cancel(self.num, other.den)
        n2, d1 = _cross_cancel(other.num, self.den)
        return _reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("zero divisor")
        if self.is_zero:
            return RatFunc.zero(self.vars)
        n1, n2 = _cross_cancel(self.num, other.num)
        d1, d2 = _cross_cancel(self.den, other.den)
        return _reduced(n1 * d2, d1 * n2)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero divisor")
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    # -- evaluation / substitution -------------------------------------------

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a full assignment; raises PoleError on a denominator zero."""
        d = self.den.eval(point)
        if d == 0:
            raise PoleError(f"pole of {self} at {dict(point)}")
        return self.num.eval(point) / d

    def rename(self, mapping: Mapping[str, str]) -> "RatFunc":
        """Variable-for-variable substitution; raises PoleError if the denominator collapses."""
        den = self.den.rename(mapping)
        if den.is_zero:
            raise PoleError(f"substitution {mapping} annihilates the denominator of {self}")
        return RatFunc(self.num.rename(mapping), den)

    def lift(self, new_vars: tuple[str, ...]) -> "RatFunc":
        if tuple(new_vars) == self.vars:
            return self
        out = RatFunc.__new__(RatFunc)
        out.num = self.num.lift(new_vars)
        out.den = self.den.lift(new_vars)
        return out

    # -- serialization -------------------------------------------------------

    def serialize(self) -> dict:
        return {"num": self.num.serialize(), "den": self.den.serialize()}

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _scale(p: MultiPoly, factor: Fraction) -> MultiPoly:
    out = MultiPoly(p.vars)
    out.terms = {exp: coeff * factor for exp, coeff in p.terms.items()}
    return out


def _cross_cancel(n: MultiPoly, d: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Divide out gcd(n, d); used to keep product inputs reduced."""
    if n.is_zero or n.is_constant() or d.is_constant():
        return n, d
    g = poly_gcd(n, d)
    if g.is_constant():
        return n, d
    return n.divexact(g), d.divexact(g)


def _reduced(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Build a RatFunc from an already-coprime num/den pair (monic pass only)."""
    out = RatFunc.__new__(RatFunc)
    if num.is_zero:
        out.num = num
        out.den = MultiPoly.const(num.vars, 1)
        return out
    lc = den.leading()[1]
    if lc != 1:
        num = _scale(num, Fraction(1) / lc)
        den = _scale(den, Fraction(1) / lc)
    out.num = num
    out.den = den
    return out
