"""Truncated Laurent series in ``z`` over a coefficient ring.

A :class:`LaurentSeries` stores the coefficients of ``z**lo .. z**order``.
Everything below ``lo`` is exactly zero; everything above ``order`` is
unknown.  Each operation records the largest exponent to which its result
is trustworthy, and readers must not look past it.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence as _Seq

from .errors import (
    DescriptorMismatch,
    EmptyValidRange,
    InsufficientSequenceLength,
    NegativeTailNonzero,
    NonzeroConstantInExponent,
    OutOfValidRange,
)
from .ring import Ring, RingElem, format_elem


class LaurentSeries:
    __slots__ = ("ring", "lo", "order", "coeffs")

    def __init__(self, ring: Ring, coeffs: _Seq, lo: int = 0, order: int | None = None):
        coeffs = tuple(ring.coerce(c) for c in coeffs)
        if order is None:
            order = lo + len(coeffs) - 1
        if order < lo:
            raise EmptyValidRange(f"order {order} below lowest exponent {lo}")
        n = order - lo + 1
        if len(coeffs) > n:
            coeffs = coeffs[:n]
        elif len(coeffs) < n:
            coeffs = coeffs + (ring.zero(),) * (n - len(coeffs))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def zero(cls, ring: Ring, order: int, lo: int = 0) -> LaurentSeries:
        return cls(ring, (), lo=lo, order=order)

    @classmethod
    def monomial(cls, c: RingElem, k: int, order: int) -> LaurentSeries:
        """``c * z**k`` known exactly up to ``order``."""
        ring = c.ring
        if order < k:
            return cls(ring, (), lo=order, order=order)
        return cls(ring, [c], lo=k, order=order)

    def coeff(self, n: int) -> RingElem:
        """Coefficient of ``z**n``; only exponents in ``[lo, order]`` are readable."""
        if not self.lo <= n <= self.order:
            raise OutOfValidRange(f"exponent {n} outside valid range [{self.lo}, {self.order}]")
        return self.coeffs[n - self.lo]

    def __getitem__(self, n: int) -> RingElem:
        # zero below lo is exact, above order is unknown
        if n < self.lo:
            return self.ring.zero()
        return self.coeff(n)

    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            return False
        if other.ring != self.ring:
            raise DescriptorMismatch(f"cannot combine {self.ring} with {other.ring} series")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        lo = min(self.lo, other.lo)
        order = min(self.order, other.order)
        return LaurentSeries(self.ring, [self[n] + other[n] for n in range(lo, order + 1)], lo, order)

    def __neg__(self):
        return LaurentSeries(self.ring, [-c for c in self.coeffs], self.lo, self.order)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return series_mul(self, other)
        if isinstance(other, (RingElem, int, Fraction)):
            return LaurentSeries(self.ring, [c * other for c in self.coeffs], self.lo, self.order)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            return LaurentSeries(self.ring, [other * c for c in self.coeffs], self.lo, self.order)
        return NotImplemented

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by ``z**k``."""
        return LaurentSeries(self.ring, self.coeffs, self.lo + k, self.order + k)

    def derivative(self) -> LaurentSeries:
        lo, order, coeffs = _derivative_parts(self.lo, self.order, self.coeffs, self.ring)
        if order < lo:
            raise EmptyValidRange("derivative of a series known only to its constant term")
        return LaurentSeries(self.ring, coeffs, lo, order)

    def truncate(self, order: int) -> LaurentSeries:
        if order > self.order:
            raise OutOfValidRange(f"cannot extend valid order {self.order} to {order}")
        return LaurentSeries(self.ring, self.coeffs, self.lo, order)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.lo == other.lo
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.lo, self.order, self.coeffs))

    def agrees_with(self, other: LaurentSeries) -> bool:
        """Coefficientwise equality on the common valid range."""
        hi = min(self.order, other.order)
        return all(self[n] == other[n] for n in range(min(self.lo, other.lo), hi + 1))

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "order": self.order,
            "coeffs": [format_elem(c) for c in self.coeffs],
        }

    def __repr__(self):
        terms = ", ".join(f"z^{self.lo + k}: {c}" for k, c in enumerate(self.coeffs) if not c.is_zero())
        return f"LaurentSeries({{{terms}}}, lo={self.lo}, order={self.order})"


def _derivative_parts(lo, order, coeffs, ring):
    """Term-by-term derivative as raw parts; may return an empty range."""
    new_lo = lo - 1 if lo != 0 else 0
    new_order = order - 1
    out = []
    for m in range(new_lo, new_order + 1):
        k = m + 1
        c = coeffs[k - lo] if lo <= k <= order else ring.zero()
        out.append(c * k)
    return new_lo, new_order, out


class Sequence:
    """Terms ``a_0 .. a_N`` of a generated sequence.

    Negative indices read as the ring zero; indices past ``N`` raise
    :class:`InsufficientSequenceLength`.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(ring.coerce(t) for t in terms))

    def __setattr__(self, name, value):
        raise AttributeError("Sequence is immutable")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.terms[n]
        if n < 0:
            return self.ring.zero()
        if n >= len(self.terms):
            raise InsufficientSequenceLength(f"term a_{n} requested but only a_0..a_{len(self.terms) - 1} stored")
        return self.terms[n]

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"Sequence([{', '.join(map(str, self.terms))}])"


def series_coeff(s: LaurentSeries, n: int) -> RingElem:
    return s.coeff(n)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product with operand order kept in every coefficient product."""
    if a.ring != b.ring:
        raise DescriptorMismatch(f"cannot multiply {a.ring} by {b.ring} series")
    lo = a.lo + b.lo
    order = min(a.order + b.lo, b.order + a.lo)
    out = []
    for n in range(lo, order + 1):
        acc = a.ring.zero()
        for p in range(a.lo, n - b.lo + 1):
            x, y = a.coeffs[p - a.lo], b.coeffs[n - p - b.lo]
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return LaurentSeries(a.ring, out, lo, order)


def polynomial_series(ring: Ring, coeffs: _Seq, order: int) -> LaurentSeries:
    """The polynomial ``sum coeffs[k] z**k``, exact through ``order``."""
    return LaurentSeries(ring, list(coeffs)[: order + 1], 0, order)


def series_exp(exponent: LaurentSeries) -> LaurentSeries:
    """``exp`` of a series that vanishes at ``z = 0``."""
    ring = exponent.ring
    if exponent.lo < 0 or not exponent[0].is_zero():
        raise NonzeroConstantInExponent("exponential needs a zero constant term")
    order = exponent.order
    nz = [n for n in range(1, order + 1) if not exponent[n].is_zero()]
    result = LaurentSeries(ring, [ring.one()], 0, order)
    if not nz:
        return result
    low = nz[0]
    power = result
    k = 1
    while k * low <= order:
        power = series_mul(power, exponent)
        result = result + power * Fraction(1, factorial(k))
        k += 1
    return result


def series_from_prefactor_exp(prefactor, exponent, order: int, ring: Ring | None = None) -> LaurentSeries:
    """Expand ``prefactor(z) * exp(exponent(z))`` through ``z**order``.

    ``prefactor`` and ``exponent`` are coefficient lists in ascending powers
    of ``z`` (ring elements or rationals).  ``exponent`` must have a zero
    constant term.

    >>> from genfun.ring import RATIONAL
    >>> s = series_from_prefactor_exp([-1, 1], [0, 1], 5, ring=RATIONAL)
    >>> [str(c) for c in s.coeffs]
    ['-1', '0', '1/2', '1/3', '1/8', '1/30']
    """
    if order < 0:
        raise EmptyValidRange("order must be non-negative")
    if ring is None:
        ring = next(
            (c.ring for c in (*prefactor, *exponent) if isinstance(c, RingElem)), None
        )
        if ring is None:
            raise TypeError("pass ring= when no coefficient is a RingElem")
    exponent = list(exponent)
    if exponent and not ring.coerce(exponent[0]).is_zero():
        raise NonzeroConstantInExponent("exponent polynomial must vanish at z = 0")
    e = polynomial_series(ring, exponent, order)
    p = polynomial_series(ring, prefactor, order)
    return series_mul(p, series_exp(e))


def sequence_from_series(s: LaurentSeries) -> Sequence:
    """Coefficients ``a_0 .. a_order`` of an ordinary generating function."""
    for n in range(s.lo, min(0, s.order + 1)):
        if not s[n].is_zero():
            raise NegativeTailNonzero(f"coefficient of z^{n} is {s[n]}, not zero")
    return Sequence(s.ring, [s[n] for n in range(0, s.order + 1)])
