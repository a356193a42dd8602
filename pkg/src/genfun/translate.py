"""Translate differential operators in ``z`` into difference operators.

Each monomial ``c z**i d**j`` becomes ``c (n+j-i)(n+j-i-1)...(n-i+1) S**(j-i)``,
so that the coefficient of ``z**n`` in ``L(psi)`` is ``Omega_L(a)_n`` where
``a`` is the coefficient sequence of ``psi``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .deltaop import DeltaOp, NPoly, deltaop_apply
from .diffop import DiffOp, diffop_apply
from .errors import EmptyValidRange
from .ring import format_elem
from .series import LaurentSeries, sequence_from_series


def translate(L: DiffOp) -> DeltaOp:
    """Return the difference operator attached to ``L``.

    >>> from genfun.ring import RATIONAL
    >>> L = DiffOp(RATIONAL, {(0, 2): 1, (-1, 1): -2})
    >>> str(translate(L))
    '(n^2+n-2)*S^2'
    """
    ring = L.ring
    out: dict[int, NPoly] = {}
    for (i, j), c in L.terms.items():
        # falling factorial (n+j-i)(n+j-i-1)...(n-i+1), empty product when j = 0
        p = NPoly.from_roots(ring, [j - i - k for k in range(j)], c)
        k = j - i
        out[k] = out[k] + p if k in out else p
    return DeltaOp(ring, out)


@dataclass(frozen=True)
class Lemma1Report:
    holds: bool
    range_checked: tuple[int, int]
    mismatches: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "range_checked": list(self.range_checked),
            "mismatches": [
                {"index": n, "series": format_elem(a), "difference": format_elem(b)}
                for n, a, b in self.mismatches
            ],
        }


def lemma1_check(L: DiffOp, s: LaurentSeries) -> Lemma1Report:
    """Compare ``L(s)`` with ``translate(L)`` applied to the coefficients of ``s``.

    ``L(s)`` is computed by direct term-by-term differentiation, and its
    coefficient at every exponent from ``min i`` to the valid order is
    checked against the difference operator, which reads zero for
    negative indices.
    """
    if s.lo != 0:
        raise ValueError("lemma1_check needs an ordinary generating function (lo = 0)")
    direct = diffop_apply(L, s)
    lo = min(L.imin, direct.lo)
    hi = direct.order
    if hi < lo:
        raise EmptyValidRange("no exponent left to compare")
    a = sequence_from_series(s)
    W = translate(L)
    mismatches = []
    for n in range(lo, hi + 1):
        lhs = direct[n]
        rhs = deltaop_apply(W, a, n)
        if lhs != rhs:
            mismatches.append((n, lhs, rhs))
    return Lemma1Report(not mismatches, (lo, hi), mismatches)
