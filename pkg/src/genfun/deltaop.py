"""Difference operators ``sum_k p_k(n) S**k`` acting on sequences.

``S**k`` shifts the index, ``(p S**k)(a)_n = p(n) a_{n+k}``, and terms
with ``n + k < 0`` read the zero element.  The coefficient functions
``p_k`` are polynomials in ``n`` whose coefficients lie in the constant
subring.  Since ``n`` is an integer scalar it is central, so polynomial
arithmetic in ``n`` is commutative even when the coefficients are not.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping

from ._format import coefficient_text, join_terms
from .diffop import EigenReport, _times
from .errors import DescriptorMismatch, NonConstantCoefficient
from .ring import Ring, RingElem, format_elem
from .series import Sequence


class NPoly:
    """Polynomial in ``n`` with constant ring coefficients (ascending powers)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        cs = [ring.coerce(c) for c in coeffs]
        for c in cs:
            if not c.is_constant():
                raise NonConstantCoefficient(f"coefficient {c} of a difference operator is not constant")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("NPoly is immutable")

    @classmethod
    def n(cls, ring: Ring) -> NPoly:
        return cls(ring, [0, 1])

    @classmethod
    def from_roots(cls, ring: Ring, shifts, c=1) -> NPoly:
        """``c * prod (n + s)`` over ``shifts``."""
        out = cls(ring, [c])
        for s in shifts:
            out = out * cls(ring, [s, 1])
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            other = NPoly(self.ring, [other])
        if not isinstance(other, NPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return NPoly(self.ring, out)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return NPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            return NPoly(self.ring, [c * other for c in self.coeffs])
        if not isinstance(other, NPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return NPoly(self.ring)
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return NPoly(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            return NPoly(self.ring, [other * c for c in self.coeffs])
        return NotImplemented

    def __call__(self, n: int) -> RingElem:
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def shifted(self, s: int) -> NPoly:
        """The polynomial ``n -> p(n + s)``."""
        if s == 0 or not self.coeffs:
            return self
        out = [self.ring.zero()] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            for m in range(k + 1):
                out[m] = out[m] + c * (comb(k, m) * s ** (k - m))
        return NPoly(self.ring, out)

    def __eq__(self, other):
        if not isinstance(other, NPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def terms_text(self) -> list[tuple[bool, str]]:
        out = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            neg, ctext = coefficient_text(c)
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            body = "*".join(p for p in (ctext, mono) if p) or "1"
            out.append((neg, body))
        return out

    def __str__(self):
        return "".join(
            ("-" if neg else ("+" if k else "")) + body
            for k, (neg, body) in enumerate(self.terms_text())
        ) or "0"

    def __repr__(self):
        return f"NPoly({self})"


class DeltaOp:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[int, NPoly] = ()):
        clean = {}
        for k, p in dict(terms).items():
            if not isinstance(p, NPoly):
                p = NPoly(ring, [p])
            if p.ring != ring:
                raise DescriptorMismatch(f"{p.ring} coefficient in a {ring} operator")
            if not p.is_zero():
                clean[int(k)] = p
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("DeltaOp is immutable")

    @classmethod
    def identity(cls, ring: Ring) -> DeltaOp:
        return cls(ring, {0: NPoly(ring, [1])})

    @classmethod
    def shift(cls, ring: Ring, k: int) -> DeltaOp:
        return cls(ring, {k: NPoly(ring, [1])})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_shift(self) -> int:
        return max(self.terms, default=0)

    @property
    def min_shift(self) -> int:
        return min(self.terms, default=0)

    def _same(self, other):
        if other.ring != self.ring:
            raise DescriptorMismatch(f"cannot combine {self.ring} with {other.ring} operators")

    def __add__(self, other):
        if not isinstance(other, DeltaOp):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = out[k] + p if k in out else p
        return DeltaOp(self.ring, out)

    def __neg__(self):
        return DeltaOp(self.ring, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DeltaOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DeltaOp):
            return deltaop_compose(self, other)
        if isinstance(other, (RingElem, int, Fraction)):
            return DeltaOp(self.ring, {k: p * other for k, p in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            return DeltaOp(self.ring, {k: other * p for k, p in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        out = DeltaOp.identity(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, a: Sequence, n: int) -> RingElem:
        return deltaop_apply(self, a, n)

    def __eq__(self, other):
        if not isinstance(other, DeltaOp):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    def sorted_terms(self):
        """Descending shift."""
        return sorted(self.terms.items(), key=lambda kv: -kv[0])

    def __str__(self):
        return format_deltaop(self)

    def __repr__(self):
        return f"DeltaOp({self.ring}, {self})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "terms": [
                {"shift": k, "coeffs": [format_elem(c) for c in p.coeffs]}
                for k, p in self.sorted_terms()
            ],
        }


def format_deltaop(W: DeltaOp) -> str:
    pieces = []
    lone = len(W.terms) == 1
    for k, p in W.sorted_terms():
        ts = p.terms_text()
        shift = f"S^{k}" if k else ""
        if len(ts) == 1:
            neg, body = ts[0]
            if shift:
                body = shift if body == "1" else f"{body}*{shift}"
            pieces.append((neg, body))
        elif not shift and lone:
            pieces.append((False, str(p)))
        else:
            body = f"({p})"
            pieces.append((False, f"{body}*{shift}" if shift else body))
    return join_terms(pieces)


def deltaop_apply(W: DeltaOp, a: Sequence, n: int) -> RingElem:
    """``sum_k p_k(n) a_{n+k}`` with coefficients on the left.

    Negative ``n`` is accepted; it evaluates the same formula with the
    zero extension of ``a``.
    """
    if W.ring != a.ring:
        raise DescriptorMismatch(f"cannot apply a {W.ring} operator to a {a.ring} sequence")
    acc = a.ring.zero()
    for k, p in W.terms.items():
        term = a[n + k]
        if not term.is_zero():
            acc = acc + p(n) * term
    return acc


def deltaop_compose(W1: DeltaOp, W2: DeltaOp) -> DeltaOp:
    """``(p S**i)(q S**j) = p(n) q(n+i) S**(i+j)``, collected."""
    if W1.ring != W2.ring:
        raise DescriptorMismatch(f"cannot compose {W1.ring} with {W2.ring} operators")
    out: dict[int, NPoly] = {}
    for i, p in W1.terms.items():
        for j, q in W2.terms.items():
            term = p * q.shifted(i)
            out[i + j] = out[i + j] + term if i + j in out else term
    return DeltaOp(W1.ring, out)


def deltaop_eigencheck(W: DeltaOp, a: Sequence, lam, side: str = "left", nmax: int | None = None) -> EigenReport:
    """Check ``W(a)_n == lam*a_n`` (or ``a_n*lam``) for ``0 <= n <= nmax``."""
    lam = a.ring.coerce(lam)
    _times(lam, a.ring.zero(), side)
    if nmax is None:
        nmax = len(a) - 1 - max(W.max_shift, 0)
    # fail fast on short input
    a[nmax + max(W.max_shift, 0)]
    for n in range(0, nmax + 1):
        lhs = deltaop_apply(W, a, n)
        rhs = _times(lam, a[n], side)
        if lhs != rhs:
            return EigenReport(False, side, (0, nmax), (n, lhs, rhs))
    return EigenReport(True, side, (0, nmax))
