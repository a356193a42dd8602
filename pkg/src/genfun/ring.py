"""Exact coefficient rings.

Three concrete rings are supported, each described by a :class:`Ring`:

* ``rational``: the field Q, backed by :class:`fractions.Fraction`;
* ``polyx``:    Q[x], univariate polynomials in the symbol ``x``;
* ``matrix:d``: d x d matrices with entries in Q[x] (noncommutative).

Every ring carries a distinguished subring of "constants" (Q itself,
constant polynomials, matrices of constant polynomials).  Differential and
difference operators may only carry constant coefficients; membership is
the :meth:`RingElem.is_constant` predicate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalNumber
from typing import Iterable, Sequence

import numpy as np

from .errors import DescriptorMismatch, DivisionByZeroPoly

Scalar = Fraction


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalNumber)):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Poly:
    """Immutable polynomial in ``x`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``
    and equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> Poly:
        return poly_derivative(self)

    def divrem(self, d: Poly) -> tuple[Poly, Poly]:
        return poly_divrem(self, d)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def poly_derivative(p: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(p.coeffs)][1:])


def poly_divrem(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``p = q*d + r`` with ``deg r < deg d``."""
    if d.is_zero():
        raise DivisionByZeroPoly("polynomial division by zero")
    rem = list(p.coeffs)
    dd = d.degree
    lead = d.leading()
    if len(rem) - 1 < dd:
        return Poly(), p
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        quot[k - dd] = c
        if c:
            for m, dc in enumerate(d.coeffs):
                rem[k - dd + m] -= c * dc
    return Poly(quot), Poly(rem[:dd])


def _format_monomial(c: Fraction, k: int, var: str) -> str:
    if k == 0:
        return str(c)
    mono = var if k == 1 else f"{var}^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_poly(p: Poly, var: str = "x") -> str:
    """Render highest degree first, e.g. ``2/3*x^3 + x``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        s = _format_monomial(c, k, var)
        if not parts:
            parts.append(s)
        elif s.startswith("-"):
            parts.append(" - " + s[1:])
        else:
            parts.append(" + " + s)
    return "".join(parts)


@dataclass(frozen=True)
class Ring:
    """Descriptor of the active coefficient ring.

    ``kind`` is one of ``"rational"``, ``"polyx"``, ``"matrix"``; ``dim`` is
    the matrix size and must be 1 for the scalar kinds.
    """

    kind: str
    dim: int = 1

    def __post_init__(self):
        if self.kind not in ("rational", "polyx", "matrix"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.dim < 1:
            raise ValueError("matrix dimension must be positive")
        if self.kind != "matrix" and self.dim != 1:
            raise ValueError("only matrix rings carry a dimension")

    @classmethod
    def parse(cls, text: str) -> Ring:
        """Read ``rational``, ``polyx`` or ``matrix:d``."""
        text = text.strip()
        if text.startswith("matrix"):
            _, _, d = text.partition(":")
            return cls("matrix", int(d) if d else 2)
        return cls(text)

    def __str__(self):
        return f"matrix:{self.dim}" if self.kind == "matrix" else self.kind

    # constructors -------------------------------------------------------

    def scalar(self, c) -> RingElem:
        """The image of a rational number (c times the identity)."""
        c = _frac(c)
        if self.kind == "rational":
            return RingElem(self, c)
        if self.kind == "polyx":
            return RingElem(self, Poly([c]))
        d = self.dim
        return RingElem(
            self,
            tuple(tuple(Poly([c]) if r == s else Poly() for s in range(d)) for r in range(d)),
        )

    def zero(self) -> RingElem:
        return self.scalar(0)

    def one(self) -> RingElem:
        return self.scalar(1)

    def poly(self, p: Poly) -> RingElem:
        """Embed a polynomial in x (times the identity for matrices)."""
        if self.kind == "rational":
            if not p.is_constant():
                raise ValueError("the rational ring has no symbol x")
            return RingElem(self, p.leading() if p.coeffs else Fraction(0))
        if self.kind == "polyx":
            return RingElem(self, p)
        d = self.dim
        return RingElem(
            self, tuple(tuple(p if r == s else Poly() for s in range(d)) for r in range(d))
        )

    def x(self) -> RingElem:
        return self.poly(Poly.x())

    def matrix(self, rows: Sequence[Sequence]) -> RingElem:
        """Build a matrix element from rows of Poly / rationals."""
        if self.kind != "matrix":
            raise DescriptorMismatch(f"matrix literal in ring {self}")
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise DescriptorMismatch(f"expected a {self.dim}x{self.dim} matrix")
        return RingElem(
            self, tuple(tuple(e if isinstance(e, Poly) else Poly([e]) for e in r) for r in rows)
        )

    def coerce(self, value) -> RingElem:
        if isinstance(value, RingElem):
            if value.ring != self:
                raise DescriptorMismatch(f"{value.ring} element used in ring {self}")
            return value
        if isinstance(value, Poly):
            return self.poly(value)
        return self.scalar(value)


def _matmul(a, b):
    d = len(a)
    out = []
    for r in range(d):
        row = []
        for s in range(d):
            acc = Poly()
            for k in range(d):
                if a[r][k].coeffs and b[k][s].coeffs:
                    acc = acc + a[r][k] * b[k][s]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


class RingElem:
    """An immutable element of a :class:`Ring`.

    Multiplication keeps operand order, so ``a * b`` and ``b * a`` may
    differ for matrix rings.  Plain ``int``/``Fraction`` operands are
    treated as central scalars.
    """

    __slots__ = ("ring", "value", "_hash")

    def __init__(self, ring: Ring, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    def _other(self, other) -> RingElem | None:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"cannot combine {self.ring} with {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.ring.kind == "matrix":
            v = tuple(
                tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.value, o.value)
            )
        else:
            v = self.value + o.value
        return RingElem(self.ring, v)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.kind == "matrix":
            return RingElem(self.ring, tuple(tuple(-a for a in r) for r in self.value))
        return RingElem(self.ring, -self.value)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.ring.kind == "matrix":
            return RingElem(self.ring, _matmul(self.value, o.value))
        return RingElem(self.ring, self.value * o.value)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a ring element by zero")
            return self.scale(Fraction(1) / _frac(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("ring elements have no negative powers here")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> RingElem:
        c = _frac(c)
        if self.ring.kind == "matrix":
            return RingElem(self.ring, tuple(tuple(a * c for a in r) for r in self.value))
        return RingElem(self.ring, self.value * c)

    def entries(self):
        """Yield every polynomial (or rational) entry."""
        if self.ring.kind == "matrix":
            for r in self.value:
                yield from r
        else:
            yield self.value

    def is_zero(self) -> bool:
        if self.ring.kind == "rational":
            return self.value == 0
        return all(e.is_zero() for e in self.entries())

    def is_constant(self) -> bool:
        """Membership in the constant subring."""
        if self.ring.kind == "rational":
            return True
        return all(e.is_constant() for e in self.entries())

    def as_fraction(self) -> Fraction:
        """Return ``c`` when this element equals ``c`` times the identity."""
        if self.ring.kind == "rational":
            return self.value
        c = self._diag_constant()
        if self == self.ring.scalar(c):
            return c
        raise ValueError(f"{self} is not a rational multiple of the identity")

    def _diag_constant(self) -> Fraction:
        if self.ring.kind == "polyx":
            return self.value.leading() if self.value.coeffs else Fraction(0)
        e = self.value[0][0]
        return e.leading() if e.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.ring.scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.value)))
        return self._hash

    def __repr__(self):
        return f"RingElem({self.ring}, {self})"

    def __str__(self):
        return format_elem(self)


def format_elem(a: RingElem) -> str:
    """Textual form: ``p/q``, ``2/3*x^3 + x`` or ``[[...], [...]]``."""
    if a.ring.kind == "rational":
        return str(a.value)
    if a.ring.kind == "polyx":
        return format_poly(a.value)
    return "[" + ", ".join("[" + ", ".join(format_poly(e) for e in r) + "]" for r in a.value) + "]"


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    """``a * b`` in operand order; descriptors must agree."""
    if a.ring != b.ring:
        raise DescriptorMismatch(f"cannot multiply {a.ring} by {b.ring}")
    return a * b


RATIONAL = Ring("rational")
POLYX = Ring("polyx")
