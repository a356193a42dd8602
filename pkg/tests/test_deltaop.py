from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genfun.deltaop import DeltaOp, NPoly, deltaop_apply, deltaop_compose, deltaop_eigencheck
from genfun.diffop import DiffOp, commutator
from genfun.errors import DescriptorMismatch, InsufficientSequenceLength, NonConstantCoefficient
from genfun.examples import (
    MATRIX_OMEGA,
    NUMERIC_OMEGA,
    XHP_LAMBDAS,
    XHP_OMEGA3,
    XHP_OMEGA4,
    XHP_OMEGA5,
    matrix_series,
    numeric_series,
    xhp_series,
)
from genfun.ring import POLYX, RATIONAL
from genfun.series import Sequence, sequence_from_series
from genfun.translate import translate

from strategies import MATRIX2, RINGS, deltaops, ring_elems

N = NPoly.n(RATIONAL)
S = DeltaOp.shift


def numeric_seq(order=24):
    return sequence_from_series(numeric_series(order))


def test_printed_values():
    a = numeric_seq(6)
    assert deltaop_apply(NUMERIC_OMEGA, a, 2) == RATIONAL.scalar(F(1, 2))
    assert deltaop_apply(NUMERIC_OMEGA, a, 1) == RATIONAL.zero()
    assert deltaop_apply(NUMERIC_OMEGA, a, 0) == a[0]


def test_negative_index_reads_zero():
    a = numeric_seq(6)
    W = DeltaOp(RATIONAL, {-5: NPoly(RATIONAL, [7]), 0: NPoly(RATIONAL, [1])})
    assert deltaop_apply(W, a, 2) == a[2]


def test_insufficient_length():
    with pytest.raises(InsufficientSequenceLength):
        deltaop_apply(NUMERIC_OMEGA, numeric_seq(6), 5)
    with pytest.raises(InsufficientSequenceLength):
        deltaop_eigencheck(NUMERIC_OMEGA, numeric_seq(6), 1, "left", 10)


def test_compose_examples():
    nS = DeltaOp(RATIONAL, {1: N})
    assert deltaop_compose(nS, nS) == DeltaOp(RATIONAL, {2: N * (N + 1)})
    d, z = DiffOp.monomial(RATIONAL, 0, 1), DiffOp.monomial(RATIONAL, 1, 0)
    composed = deltaop_compose(translate(d), translate(z))
    assert composed == DeltaOp(RATIONAL, {0: N + 1}) == translate(z * d + DiffOp.identity(RATIONAL))


def test_xhp_difference_operators_commute():
    for a, b in [(XHP_OMEGA3, XHP_OMEGA4), (XHP_OMEGA3, XHP_OMEGA5), (XHP_OMEGA4, XHP_OMEGA5)]:
        assert commutator(a, b).is_zero()
        assert deltaop_compose(a, b) == deltaop_compose(b, a)


def test_shift_and_n_do_not_commute():
    assert deltaop_compose(S(RATIONAL, 1), DeltaOp(RATIONAL, {0: N})) == DeltaOp(RATIONAL, {1: N + 1})


def test_eigensequences():
    assert deltaop_eigencheck(NUMERIC_OMEGA, numeric_seq(22), RATIONAL.one(), "left", 20).holds
    xa = sequence_from_series(xhp_series(16))
    assert deltaop_eigencheck(XHP_OMEGA3, xa, POLYX.poly(XHP_LAMBDAS[3]), "left", 10).holds
    ma = sequence_from_series(matrix_series(6))
    lam = MATRIX2.x() ** 3
    assert deltaop_apply(MATRIX_OMEGA, ma, 2) == lam * ma[2] == ma[2] * lam


def test_eigencheck_failure_reported():
    rep = deltaop_eigencheck(NUMERIC_OMEGA, numeric_seq(12), RATIONAL.scalar(3), "left", 8)
    assert not rep.holds and rep.first_failure[0] == 0


def test_nonconstant_npoly_rejected():
    with pytest.raises(NonConstantCoefficient):
        NPoly(POLYX, [POLYX.x()])


def test_mismatch():
    with pytest.raises(DescriptorMismatch):
        deltaop_compose(NUMERIC_OMEGA, XHP_OMEGA3)


def test_formatting():
    assert str(NUMERIC_OMEGA) == "(n^2+n-2)*S^2"
    assert str(DeltaOp(RATIONAL, {0: N})) == "n"
    assert str(DeltaOp(RATIONAL, {-3: NPoly(RATIONAL, [F(1, 8)])})) == "(1/8)*S^-3"


def _two_sided(W, a):
    """``W(a)`` as a function on all integers; the zero extension of ``a``
    does not make ``W(a)`` vanish at negative indices."""
    return lambda m: deltaop_apply(W, a, m)


def _apply_to(W, b, n):
    acc = None
    for k, p in W.terms.items():
        t = p(n) * b(n + k)
        acc = t if acc is None else acc + t
    return acc


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_compose_matches_sequential_application(ring, data):
    W1 = data.draw(deltaops(ring))
    W2 = data.draw(deltaops(ring))
    terms = data.draw(st.lists(ring_elems(ring, max_degree=2), min_size=16, max_size=16))
    a = Sequence(ring, terms)
    W = deltaop_compose(W1, W2)
    b = _two_sided(W2, a)
    for n in range(0, 6):
        expected = _apply_to(W1, b, n) if W1.terms else ring.zero()
        assert deltaop_apply(W, a, n) == expected


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_compose_associative(ring, data):
    a, b, c = (data.draw(deltaops(ring)) for _ in range(3))
    assert deltaop_compose(deltaop_compose(a, b), c) == deltaop_compose(a, deltaop_compose(b, c))
