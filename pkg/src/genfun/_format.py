"""Shared pretty-printing helpers for operator terms."""
from __future__ import annotations

from .ring import RingElem, format_elem


def coefficient_text(c: RingElem) -> tuple[bool, str]:
    """Split a coefficient into ``(negative, text)``.

    Rational multiples of the identity print as ``k`` or ``(p/q)``, with
    unit magnitude printing as the empty string.  Anything else prints as
    its full ring literal with a positive sign.
    """
    try:
        f = c.as_fraction()
    except ValueError:
        return False, format_elem(c)
    neg = f < 0
    f = abs(f)
    if f == 1:
        return neg, ""
    if f.denominator == 1:
        return neg, str(f.numerator)
    return neg, f"({f})"


def join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (neg, text) in enumerate(terms):
        if k == 0:
            out.append("-" + text if neg else text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)
