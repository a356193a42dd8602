import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genfun.deltaop import DeltaOp, NPoly, deltaop_compose, deltaop_eigencheck
from genfun.diffop import DiffOp, diffop_apply, diffop_compose, diffop_eigencheck
from genfun.examples import (
    MATRIX_L,
    MATRIX_OMEGA,
    NUMERIC_L,
    XHP_L3,
    XHP_L4,
    XHP_L5,
    XHP_LAMBDAS,
    matrix_series,
    numeric_series,
    xhp_series,
)
from genfun.ring import POLYX, RATIONAL
from genfun.series import LaurentSeries, sequence_from_series
from genfun.translate import lemma1_check, translate

from strategies import MATRIX2, RINGS, diffops, random_diffop, random_series, ring_elems, series

N = NPoly.n(RATIONAL)


def test_euler_operator():
    assert translate(DiffOp.monomial(RATIONAL, 1, 1)) == DeltaOp(RATIONAL, {0: N})


def test_numeric_operator():
    assert translate(NUMERIC_L) == DeltaOp(RATIONAL, {2: N * N + N - 2})


def test_l3_matches_factored_form():
    n = NPoly.n(POLYX)
    expected = DeltaOp(POLYX, {
        3: (n - 2) * (n - 1) * (n + 3),
        1: (n - 2) * (n + 1) * F(3, 2),
        -1: (n - 1) * F(3, 4),
        -3: NPoly(POLYX, [F(1, 8)]),
    })
    assert translate(XHP_L3) == expected


def test_matrix_operator():
    n = NPoly.n(MATRIX2)
    one = MATRIX2.one()
    diag = DeltaOp(MATRIX2, {3: NPoly(MATRIX2, [MATRIX2.matrix([[-3, 0], [0, 0]]), MATRIX2.matrix([[-1, 0], [0, 2]]),
                                               one * 3, one])})
    upper = DeltaOp(MATRIX2, {1: (n - 1) * MATRIX2.matrix([[0, 3], [0, 0]])})
    assert translate(MATRIX_L) == diag + upper == MATRIX_OMEGA


def test_lemma1_euler_on_random_series():
    rnd = random.Random(3)
    s = random_series(rnd, RATIONAL, order=10)
    rep = lemma1_check(DiffOp.monomial(RATIONAL, 1, 1), s)
    assert rep.holds and rep.mismatches == []


def test_lemma1_numeric_negative_window():
    rep = lemma1_check(NUMERIC_L, numeric_series(12))
    assert rep.holds
    assert rep.range_checked[0] == -1


def test_lemma1_rejects_laurent_input():
    with pytest.raises(ValueError):
        lemma1_check(NUMERIC_L, LaurentSeries(RATIONAL, [1, 2], lo=-1))


def test_lemma1_nonzero_negative_window():
    # z^-3 on a series with a_0 != 0 leaves nonzero negative exponents
    L = DiffOp.monomial(RATIONAL, -3, 0)
    s = LaurentSeries(RATIONAL, [1, 1, 1, 1, 1])
    assert not diffop_apply(L, s)[-3].is_zero()
    rep = lemma1_check(L, s)
    assert rep.holds and rep.range_checked == (-3, 1)


@pytest.mark.parametrize("seed", range(20))
def test_lemma1_random_rational(seed):
    rnd = random.Random(seed)
    L = random_diffop(rnd, RATIONAL)
    rep = lemma1_check(L, random_series(rnd, RATIONAL, order=10))
    assert rep.holds, rep.mismatches


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_lemma1_property(ring, data):
    L = data.draw(diffops(ring).filter(lambda op: not op.is_zero()))
    s = data.draw(series(ring, order=10))
    assert lemma1_check(L, s).holds


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_linearity(ring, data):
    L1, L2 = data.draw(diffops(ring)), data.draw(diffops(ring))
    c = data.draw(ring_elems(ring, constant=True))
    assert translate(L1 + L2) == translate(L1) + translate(L2)
    assert translate(c * L1) == c * translate(L1)


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_homomorphism(ring, data):
    L1, L2 = data.draw(diffops(ring)), data.draw(diffops(ring))
    assert translate(diffop_compose(L1, L2)) == deltaop_compose(translate(L1), translate(L2))


@pytest.mark.parametrize(
    "L, s, lam, side",
    [
        (NUMERIC_L, numeric_series(16), RATIONAL.one(), "left"),
        (XHP_L3, xhp_series(16), POLYX.poly(XHP_LAMBDAS[3]), "left"),
        (XHP_L4, xhp_series(16), POLYX.poly(XHP_LAMBDAS[4]), "left"),
        (XHP_L5, xhp_series(16), POLYX.poly(XHP_LAMBDAS[5]), "left"),
        (MATRIX_L, matrix_series(16), MATRIX2.x() ** 3, "left"),
        (MATRIX_L, matrix_series(16), MATRIX2.x() ** 3, "right"),
    ],
    ids=["numeric", "L3", "L4", "L5", "matrix-left", "matrix-right"],
)
def test_eigen_transfer(L, s, lam, side):
    assert diffop_eigencheck(L, s, lam, side).holds
    nmax = s.order - L.jmax + L.imin
    assert deltaop_eigencheck(translate(L), sequence_from_series(s), lam, side, nmax).holds
