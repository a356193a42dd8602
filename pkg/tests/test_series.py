from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genfun.errors import (
    DescriptorMismatch,
    NegativeTailNonzero,
    NonzeroConstantInExponent,
    OutOfValidRange,
)
from genfun.examples import (
    MATRIX_PRINTED,
    NUMERIC_PRINTED,
    XHP_PRINTED,
    matrix_series,
    numeric_series,
    xhp_series,
)
from genfun.ring import POLYX, RATIONAL, Poly
from genfun.series import (
    LaurentSeries,
    sequence_from_series,
    series_coeff,
    series_from_prefactor_exp,
    series_mul,
)

from strategies import MATRIX2, RINGS, ring_elems, series

X = Poly.x()


def R(*cs, lo=0, order=None):
    return LaurentSeries(RATIONAL, cs, lo, order)


def test_numeric_generating_function():
    s = series_from_prefactor_exp([-1, 1], [0, 1], 5, ring=RATIONAL)
    assert [c.value for c in s.coeffs] == [-1, 0, F(1, 2), F(1, 3), F(1, 8), F(1, 30)]


def test_zero_exponent_pads_prefactor():
    s = series_from_prefactor_exp([3, 0, F(1, 2)], [0], 6, ring=RATIONAL)
    assert [c.value for c in s.coeffs] == [3, 0, F(1, 2), 0, 0, 0, 0]


def test_xhp_a3():
    assert series_coeff(xhp_series(5), 3) == POLYX.poly(F(2, 3) * X**3 + X)


def test_series_coeff_examples():
    s = numeric_series(5)
    assert series_coeff(s, 0) == RATIONAL.scalar(-1)
    assert series_coeff(s, 1) == RATIONAL.zero()
    assert series_coeff(xhp_series(6), 4) == POLYX.poly(F(1, 2) * X**4 + F(1, 2) * X**2 - F(1, 8))
    with pytest.raises(OutOfValidRange):
        series_coeff(s, 6)
    with pytest.raises(OutOfValidRange):
        series_coeff(s, -1)


def test_exponent_constant_term_rejected():
    with pytest.raises(NonzeroConstantInExponent):
        series_from_prefactor_exp([1], [1, 1], 4, ring=RATIONAL)


def test_mul_examples():
    p = series_mul(R(1, 1, order=3), R(1, -1, order=3))
    assert p == R(1, 0, -1, 0, order=3)
    z_inv = LaurentSeries.monomial(RATIONAL.one(), -1, 4)
    z = LaurentSeries.monomial(RATIONAL.one(), 1, 6)
    q = series_mul(z_inv, z)
    assert q.lo == 0 and q[0] == RATIONAL.one() and q.order == 5
    assert all(c.is_zero() for c in q.coeffs[1:])


def test_exp_times_exp_minus_is_one():
    N = 8
    a = series_from_prefactor_exp([1], [0, 1], N, ring=RATIONAL)
    b = series_from_prefactor_exp([1], [0, -1], N, ring=RATIONAL)
    # oracle: convolve the closed-form coefficients 1/k! and (-1)^k/k!
    expected = [sum(F((-1) ** (n - k), factorial(k) * factorial(n - k)) for k in range(n + 1)) for n in range(N + 1)]
    assert expected == [1] + [0] * N
    assert [c.value for c in series_mul(a, b).coeffs] == expected


def test_mul_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        series_mul(R(1), LaurentSeries(POLYX, [1]))


def test_sequence_examples():
    seq = sequence_from_series(numeric_series(5))
    assert [t.value for t in seq] == [-1, 0, F(1, 2), F(1, 3), F(1, 8), F(1, 30)]
    zero = sequence_from_series(LaurentSeries.zero(RATIONAL, 4))
    assert all(t.is_zero() for t in zero) and len(zero) == 5
    assert sequence_from_series(matrix_series(3))[2] == MATRIX_PRINTED[2]


def test_sequence_negative_tail():
    with pytest.raises(NegativeTailNonzero):
        sequence_from_series(R(1, 2, lo=-1))
    seq = sequence_from_series(R(0, 0, 5, lo=-2))
    assert seq[0] == RATIONAL.scalar(5) and seq[-3] == RATIONAL.zero()


@pytest.mark.parametrize(
    "build, printed",
    [(numeric_series, NUMERIC_PRINTED), (xhp_series, XHP_PRINTED), (matrix_series, MATRIX_PRINTED)],
)
def test_printed_coefficients(build, printed):
    seq = sequence_from_series(build(10))
    for n, v in printed.items():
        assert seq[n] == seq.ring.coerce(v)


def _poly_list(ring, draw, n, zero_const=False):
    cs = [draw(ring_elems(ring, max_degree=1)) for _ in range(n)]
    if zero_const:
        cs[0] = ring.zero()
    return cs


def _zderiv(cs):
    return [c * k for k, c in enumerate(cs)][1:]


def _zpoly_mul(a, b, ring):
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


@pytest.mark.parametrize("ring", [RATIONAL, POLYX], ids=str)
@settings(max_examples=25, deadline=None)
@given(data=st.data(), N=st.integers(2, 8))
def test_derivative_of_prefactor_exp(ring, data, N):
    # commutative rings only: d/dz (p e^E) = (p' + p E') e^E needs p E' = E' p
    p = _poly_list(ring, data.draw, data.draw(st.integers(1, 3)))
    e = _poly_list(ring, data.draw, data.draw(st.integers(2, 3)), zero_const=True)
    lhs = series_from_prefactor_exp(p, e, N, ring=ring).derivative()
    dp = _zderiv(p) or [ring.zero()]
    pe = _zpoly_mul(p, _zderiv(e), ring)
    new_p = [(dp[k] if k < len(dp) else ring.zero()) + (pe[k] if k < len(pe) else ring.zero())
             for k in range(max(len(dp), len(pe)))]
    rhs = series_from_prefactor_exp(new_p, e, N - 1, ring=ring)
    assert lhs.truncate(N - 1) == rhs


@pytest.mark.parametrize("ring", RINGS, ids=str)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_mul_associative_and_distributive(ring, data):
    a, b, c = (data.draw(series(ring, order=6)) for _ in range(3))
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c)
    assert series_mul(a + b, c) == series_mul(a, c) + series_mul(b, c)


def test_mul_order_rule():
    a = R(1, 2, 3, lo=-1, order=5)
    b = R(1, 1, lo=2, order=4)
    p = series_mul(a, b)
    assert (p.lo, p.order) == (1, min(5 + 2, 4 - 1))


def test_matrix_coefficients_keep_operand_order():
    A = MATRIX2.matrix([[0, 1], [0, 0]])
    B = MATRIX2.matrix([[0, 0], [1, 0]])
    p = series_mul(LaurentSeries(MATRIX2, [A]), LaurentSeries(MATRIX2, [B]))
    assert p[0] == A * B != B * A


def test_derivative_lowers_order():
    s = R(1, 2, 3, order=2)
    d = s.derivative()
    assert d.order == 1 and [c.value for c in d.coeffs] == [2, 6]
    t = R(1, 0, 1, lo=-1)
    dt = t.derivative()
    assert dt.lo == -2 and dt[-2] == RATIONAL.scalar(-1)
