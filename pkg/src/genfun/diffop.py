"""Differential operators with Laurent-monomial coefficients in ``z``.

A :class:`DiffOp` is a finite sum ``sum c_ij z**i d**j`` where ``d`` is the
derivative in ``z``, ``i`` is any integer, ``j >= 0`` and each ``c_ij`` lies
in the constant subring.  Terms are kept normal-ordered (all derivatives
to the right) in a map keyed by ``(i, j)``, so operator equality is map
equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from ._format import coefficient_text, join_terms
from .errors import DescriptorMismatch, EmptyValidRange, NonConstantCoefficient
from .ring import Ring, RingElem, format_elem
from .series import LaurentSeries, _derivative_parts


def falling(m: int, k: int) -> int:
    """``m (m-1) ... (m-k+1)``; valid for negative ``m``."""
    out = 1
    for t in range(k):
        out *= m - t
    return out


class DiffOp:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, int], object] = ()):
        clean = {}
        for (i, j), c in dict(terms).items():
            if j < 0:
                raise ValueError(f"derivative order must be non-negative, got {j}")
            c = ring.coerce(c)
            if not c.is_constant():
                raise NonConstantCoefficient(f"coefficient {c} of z^{i}*d^{j} is not constant")
            if not c.is_zero():
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def identity(cls, ring: Ring) -> DiffOp:
        return cls(ring, {(0, 0): ring.one()})

    @classmethod
    def monomial(cls, ring: Ring, i: int, j: int, c=1) -> DiffOp:
        return cls(ring, {(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def imin(self) -> int:
        return min((i for i, _ in self.terms), default=0)

    @property
    def imax(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    @property
    def jmax(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def _same(self, other: DiffOp):
        if other.ring != self.ring:
            raise DescriptorMismatch(f"cannot combine {self.ring} with {other.ring} operators")

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return DiffOp(self.ring, out)

    def __neg__(self):
        return DiffOp(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return diffop_compose(self, other)
        if isinstance(other, (RingElem, int, Fraction)):
            return DiffOp(self.ring, {k: c * other for k, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RingElem, int, Fraction)):
            return DiffOp(self.ring, {k: other * c for k, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        out = DiffOp.identity(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, s: LaurentSeries) -> LaurentSeries:
        return diffop_apply(self, s)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    def sorted_terms(self):
        """Descending ``j``, then ascending ``i``."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))

    def __str__(self):
        return format_diffop(self)

    def __repr__(self):
        return f"DiffOp({self.ring}, {self})"

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "terms": [
                {"i": i, "j": j, "coeff": format_elem(c)} for (i, j), c in self.sorted_terms()
            ],
        }


def format_diffop(L: DiffOp) -> str:
    pieces = []
    for (i, j), c in L.sorted_terms():
        neg, ctext = coefficient_text(c)
        parts = [ctext] if ctext else []
        if i:
            parts.append(f"z^{i}")
        if j:
            parts.append(f"d^{j}")
        pieces.append((neg, "*".join(parts) or "1"))
    return join_terms(pieces)


def commutator(a, b):
    return a * b - b * a


def diffop_compose(L1: DiffOp, L2: DiffOp) -> DiffOp:
    """Normal-ordered product ``L1 L2``.

    Uses ``d**b z**c = sum_k C(b,k) c(c-1)..(c-k+1) z**(c-k) d**(b-k)``,
    which holds for negative ``c`` as well.
    """
    if L1.ring != L2.ring:
        raise DescriptorMismatch(f"cannot compose {L1.ring} with {L2.ring} operators")
    out: dict[tuple[int, int], RingElem] = {}
    for (i, j), a in L1.terms.items():
        for (k, l), b in L2.terms.items():
            ab = a * b
            for m in range(j + 1):
                w = comb(j, m) * falling(k, m)
                if w == 0:
                    continue
                key = (i + k - m, j - m + l)
                term = ab * w
                out[key] = out[key] + term if key in out else term
    return DiffOp(L1.ring, out)


def diffop_apply(L: DiffOp, s: LaurentSeries) -> LaurentSeries:
    """Apply ``L`` to a truncated series by direct differentiation.

    The valid order of the result is ``min(s.order - j + i)`` over the terms
    of ``L``; coefficients act by left multiplication.
    """
    if L.ring != s.ring:
        raise DescriptorMismatch(f"cannot apply a {L.ring} operator to a {s.ring} series")
    ring = s.ring
    if L.is_zero():
        return LaurentSeries.zero(ring, s.order, s.lo)
    # j-th derivatives are shared between terms with the same j
    derivs = {0: (s.lo, s.order, list(s.coeffs))}
    for j in range(1, L.jmax + 1):
        derivs[j] = _derivative_parts(*derivs[j - 1], ring)
    parts = []
    for (i, j), c in L.terms.items():
        lo, order, coeffs = derivs[j]
        parts.append((c, lo + i, order + i, coeffs))
    res_lo = min(p[1] for p in parts)
    res_order = min(p[2] for p in parts)
    if res_order < res_lo:
        raise EmptyValidRange(
            f"operator leaves no valid coefficients (order {res_order} < lowest exponent {res_lo})"
        )
    out = []
    for n in range(res_lo, res_order + 1):
        acc = ring.zero()
        for c, lo, _order, coeffs in parts:
            if n >= lo:
                v = coeffs[n - lo]
                if not v.is_zero():
                    acc = acc + c * v
        out.append(acc)
    return LaurentSeries(ring, out, res_lo, res_order)


@dataclass(frozen=True)
class EigenReport:
    holds: bool
    side: str
    checked_range: tuple[int, int]
    first_failure: tuple | None = field(default=None)

    def to_json(self) -> dict:
        fail = None
        if self.first_failure is not None:
            n, lhs, rhs = self.first_failure
            fail = {"index": n, "lhs": format_elem(lhs), "rhs": format_elem(rhs)}
        return {
            "holds": self.holds,
            "side": self.side,
            "checked_range": list(self.checked_range),
            "first_failure": fail,
        }


def _times(lam: RingElem, a: RingElem, side: str) -> RingElem:
    if side == "left":
        return lam * a
    if side == "right":
        return a * lam
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def diffop_eigencheck(L: DiffOp, s: LaurentSeries, lam, side: str = "left") -> EigenReport:
    """Check ``L(s) == lam*s`` (left) or ``s*lam`` (right) on the valid range.

    Exponents below zero of ``L(s)`` must vanish as well.
    """
    lam = s.ring.coerce(lam)
    _times(lam, s.ring.zero(), side)
    out = diffop_apply(L, s)
    hi = min(out.order, s.order)
    if hi < 0:
        raise EmptyValidRange("no non-negative exponent is within the valid range")
    for n in range(out.lo, hi + 1):
        lhs = out[n]
        rhs = _times(lam, s[n], side) if n >= 0 else s.ring.zero()
        if lhs != rhs:
            return EigenReport(False, side, (out.lo, hi), (n, lhs, rhs))
    return EigenReport(True, side, (out.lo, hi))
