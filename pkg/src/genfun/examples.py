"""Worked fixtures: a numeric sequence, an exceptional Hermite family and a
matrix-valued family.

Each fixture stores its generating function, the differential operators
it is an eigenfunction of, and the difference operators as printed in the
literature.  The printed difference operators are data, not derived, so
comparing them with :func:`genfun.translate.translate` is a genuine
two-source check.

One printed coefficient is corrected: the ``d^2`` coefficient of the
fourth-order exceptional Hermite operator is printed with ``28 z^2``.
Only ``28 z^-2`` reproduces the printed difference operator and the
eigenfunction property, so that reading is used; the literal version is
kept as :data:`XHP_L4_AS_PRINTED` for comparison.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable

from .deltaop import DeltaOp, NPoly, deltaop_apply, deltaop_compose, deltaop_eigencheck
from .diffop import DiffOp, commutator, diffop_eigencheck
from .errors import RecurrenceInconsistent, RecurrenceUnderdetermined, UnknownExample
from .orthogonality import WeightSpec, gram
from .ring import POLYX, RATIONAL, Poly, Ring, RingElem, poly_derivative, poly_divrem
from .series import LaurentSeries, Sequence, sequence_from_series, series_from_prefactor_exp
from .translate import lemma1_check, translate

MATRIX2 = Ring("matrix", 2)


@dataclass(frozen=True)
class OperatorFixture:
    label: str
    op: DiffOp
    eigenvalue: RingElem
    expected_delta: DeltaOp | None = None
    sides: tuple[str, ...] = ("left",)


@dataclass(frozen=True)
class ExampleBundle:
    name: str
    ring: Ring
    order: int
    series: LaurentSeries
    operators: list[OperatorFixture]
    printed_terms: dict[int, RingElem] = field(default_factory=dict)
    weight: WeightSpec | None = None
    norm_formula: Callable[[int], float] | None = None
    norm_formula_text: str = ""

    def sequence(self) -> Sequence:
        return sequence_from_series(self.series)


def _diffop(ring, terms):
    return DiffOp(ring, {k: ring.coerce(v) for k, v in terms.items()})


def _npoly(ring, c, roots=()):
    return NPoly.from_roots(ring, roots, c)


# -- numeric sequence -----------------------------------------------------

NUMERIC_L = _diffop(RATIONAL, {(0, 2): 1, (-1, 1): -2})
NUMERIC_OMEGA = DeltaOp(RATIONAL, {2: NPoly(RATIONAL, [-2, 1, 1])})
NUMERIC_PRINTED = {0: F(-1), 1: F(0), 2: F(1, 2), 3: F(1, 3), 4: F(1, 8), 5: F(1, 30), 6: F(1, 144)}


def numeric_series(order: int) -> LaurentSeries:
    """``(z - 1) e^z``."""
    return series_from_prefactor_exp([-1, 1], [0, 1], order, ring=RATIONAL)


# -- exceptional Hermite family -------------------------------------------

_x = Poly.x()


def _px(*coeffs) -> RingElem:
    return POLYX.poly(Poly(coeffs))


XHP_LAMBDAS = {
    0: Poly([1]),
    3: Poly([0, F(3, 2), 0, 1]),
    4: Poly([0, 0, 1, 0, 1]),
    5: Poly([0, F(-5, 4), 0, 0, 0, 1]),
}

XHP_L3 = _diffop(POLYX, {
    (0, 3): 1,
    (1, 2): F(3, 2), (-1, 2): -6,
    (2, 1): F(3, 4), (0, 1): -3, (-2, 1): 12,
    (3, 0): F(1, 8),
})

_L4_TERMS = {
    (0, 4): 1,
    (1, 3): 2, (-1, 3): -8,
    (2, 2): F(3, 2), (0, 2): -8, (-2, 2): 28,
    (3, 1): F(1, 2), (1, 1): -2, (-1, 1): 12, (-3, 1): -40,
    (4, 0): F(1, 16), (0, 0): F(1, 4),
}
XHP_L4 = _diffop(POLYX, _L4_TERMS)
# literal printed form, with 28 z^2 d^2 in place of 28 z^-2 d^2
XHP_L4_AS_PRINTED = _diffop(POLYX, {**{k: v for k, v in _L4_TERMS.items() if k != (-2, 2)}, (2, 2): F(3, 2) + 28})

XHP_L5 = _diffop(POLYX, {
    (0, 5): 1,
    (1, 4): F(5, 2), (-1, 4): -10,
    (2, 3): F(5, 2), (0, 3): -15, (-2, 3): 50,
    (3, 2): F(5, 4), (1, 2): F(-15, 2), (-1, 2): 45, (-3, 2): -140,
    (4, 1): F(5, 16), (2, 1): F(-5, 4), (0, 1): 10, (-2, 1): -60, (-4, 1): 180,
    (5, 0): F(1, 32),
})

XHP_OMEGA3 = DeltaOp(POLYX, {
    3: _npoly(POLYX, 1, [-2, -1, 3]),
    1: _npoly(POLYX, F(3, 2), [-2, 1]),
    -1: _npoly(POLYX, F(3, 4), [-1]),
    -3: _npoly(POLYX, F(1, 8)),
})
XHP_OMEGA4 = DeltaOp(POLYX, {
    4: _npoly(POLYX, 1, [-2, -1, 1, 4]),
    2: _npoly(POLYX, 2, [-2, -1, 2]),
    0: NPoly(POLYX, [1, -14, 6]) * F(1, 4),
    -2: _npoly(POLYX, F(1, 2), [-2]),
    -4: _npoly(POLYX, F(1, 16)),
})
XHP_OMEGA5 = DeltaOp(POLYX, {
    5: _npoly(POLYX, 1, [-1, 1, 2, 5, -2]),
    3: _npoly(POLYX, F(5, 2), [-1, 0, 3, -2]),
    1: _npoly(POLYX, F(5, 2), [1, -2, -2]),
    -3: _npoly(POLYX, F(5, 16), [-3]),
    -1: _npoly(POLYX, F(5, 4), [-3, -1]),
    -5: _npoly(POLYX, F(1, 32)),
})

XHP_PRINTED = {
    0: _px(4),
    1: _px(),
    2: _px(),
    3: _px(0, 1, 0, F(2, 3)),
    4: _px(F(-1, 8), 0, F(1, 2), 0, F(1, 2)),
    5: _px(0, F(-1, 4), 0, 0, 0, F(1, 5)),
}

XHP_WEIGHT = WeightSpec(Poly([1]), Poly([F(1, 2), 0, 1]) ** 2)


def xhp_series(order: int) -> LaurentSeries:
    """``(2x^2 z^2 - 4xz + z^2 + 4) exp(xz - z^2/4)``."""
    prefactor = [_px(4), _px(0, -4), _px(1, 0, 2)]
    exponent = [_px(), _px(0, 1), _px(F(-1, 4))]
    return series_from_prefactor_exp(prefactor, exponent, order)


def xhp_norm(n: int) -> float:
    """Closed-form norm ``16 (n-1)(n-2) / (2^n n!) sqrt(pi)``."""
    return 16 * (n - 1) * (n - 2) / (2**n * math.factorial(n)) * math.sqrt(math.pi)


# -- matrix family --------------------------------------------------------

def _mat(rows) -> RingElem:
    return MATRIX2.matrix([[e if isinstance(e, Poly) else Poly([e]) for e in r] for r in rows])


MATRIX_L = DiffOp(MATRIX2, {
    (0, 3): MATRIX2.one(),
    (-1, 2): MATRIX2.scalar(-3),
    (-2, 1): _mat([[3, 0], [0, 6]]),
    (0, 1): _mat([[0, 3], [0, 0]]),
    (-1, 0): _mat([[0, -6], [0, 0]]),
    (-3, 0): _mat([[0, 0], [0, -6]]),
})
MATRIX_OMEGA = DeltaOp(MATRIX2, {
    3: NPoly(MATRIX2, [_mat([[-3, 0], [0, 0]]), _mat([[-1, 0], [0, 2]]), MATRIX2.scalar(3), MATRIX2.one()]),
    1: NPoly(MATRIX2, [_mat([[0, -3], [0, 0]]), _mat([[0, 3], [0, 0]])]),
})
MATRIX_PRINTED = {
    0: _mat([[-1, 0], [0, 0]]),
    1: _mat([[0, 0], [0, _x]]),
    2: _mat([[_x**2 * F(1, 2), -1], [0, _x**2]]),
    3: _mat([[_x**3 * F(1, 3), -_x], [0, _x**3 * F(1, 2)]]),
}


def matrix_series(order: int) -> LaurentSeries:
    """``[[xz - 1, -z^2], [0, xz]] exp(xz)``."""
    prefactor = [_mat([[-1, 0], [0, 0]]), MATRIX2.x(), _mat([[0, -1], [0, 0]])]
    exponent = [MATRIX2.zero(), MATRIX2.x()]
    return series_from_prefactor_exp(prefactor, exponent, order)


# -- bundles --------------------------------------------------------------

EXAMPLE_NAMES = ("numeric", "xhp", "matrix")


def build_example(name: str, order: int = 14) -> ExampleBundle:
    if order < 6:
        raise ValueError("fixtures need order >= 6")
    if name == "numeric":
        ops = [OperatorFixture("L", NUMERIC_L, RATIONAL.one(), NUMERIC_OMEGA)]
        bundle = ExampleBundle(
            "numeric", RATIONAL, order, numeric_series(order), ops,
            {k: RATIONAL.scalar(v) for k, v in NUMERIC_PRINTED.items()},
        )
    elif name == "xhp":
        ops = [
            OperatorFixture("L3", XHP_L3, POLYX.poly(XHP_LAMBDAS[3]), XHP_OMEGA3),
            OperatorFixture("L4", XHP_L4, POLYX.poly(XHP_LAMBDAS[4]), XHP_OMEGA4),
            OperatorFixture("L5", XHP_L5, POLYX.poly(XHP_LAMBDAS[5]), XHP_OMEGA5),
        ]
        bundle = ExampleBundle(
            "xhp", POLYX, order, xhp_series(order), ops, dict(XHP_PRINTED),
            XHP_WEIGHT, xhp_norm, "16(n-1)(n-2)/(2^n n!) sqrt(pi)",
        )
    elif name == "matrix":
        ops = [OperatorFixture("L", MATRIX_L, MATRIX2.x() ** 3, MATRIX_OMEGA, ("left", "right"))]
        bundle = ExampleBundle("matrix", MATRIX2, order, matrix_series(order), ops, dict(MATRIX_PRINTED))
    else:
        raise UnknownExample(name)
    for fx in bundle.operators:
        if fx.expected_delta is not None and translate(fx.op) != fx.expected_delta:
            raise AssertionError(f"{name}/{fx.label}: printed difference operator disagrees with translation")
    return bundle


# -- lambda ring and recurrences ------------------------------------------

_ONE_PLUS_2X2 = Poly([1, 0, 2])


def lambda_ring_member(p: Poly) -> bool:
    """True when ``p'`` is divisible by ``1 + 2x^2``."""
    if isinstance(p, RingElem):
        p = p.value
    _, r = poly_divrem(poly_derivative(p), _ONE_PLUS_2X2)
    return r.is_zero()


_XHP_OMEGAS = {3: XHP_OMEGA3, 4: XHP_OMEGA4, 5: XHP_OMEGA5}


def xhp_recurrence_routes(n_max: int) -> dict[int, dict[tuple[int, int], RingElem]]:
    """Every way each ``a_m`` (3 <= m <= n_max) is isolated by a recurrence.

    A route ``(k, n)`` is the relation ``Omega_k(a)_n = lambda_k a_n`` whose
    top shift reaches ``a_m`` with ``m = n + k`` and a nonzero leading
    coefficient.  Terms are generated in order: the greedy route (lowest
    ``k``) defines ``a_m`` and the remaining routes are evaluated with the
    same earlier terms.
    """
    if n_max < 7:
        raise ValueError("n_max must be at least 7")
    terms = [XHP_PRINTED[0], XHP_PRINTED[1], XHP_PRINTED[2]]
    routes: dict[int, dict[tuple[int, int], RingElem]] = {}
    for m in range(3, n_max + 1):
        found = {}
        for k in sorted(_XHP_OMEGAS):
            n = m - k
            if n < 0:
                continue
            W = _XHP_OMEGAS[k]
            lead = W.terms[k](n)
            if lead.is_zero():
                continue
            known = Sequence(POLYX, terms + [POLYX.zero()])
            rest = deltaop_apply(W, known, n)
            lam = POLYX.poly(XHP_LAMBDAS[k])
            found[(k, n)] = (lam * terms[n] - rest) / lead.as_fraction()
        if not found:
            raise RecurrenceUnderdetermined(f"no recurrence isolates a_{m}")
        routes[m] = found
        terms.append(found[min(found)])
    return routes


def xhp_by_recurrence(n_max: int) -> Sequence:
    """Generate ``a_0 .. a_n_max`` from ``a_0 = 4, a_1 = a_2 = 0`` and the
    difference-operator recurrences; raises if two routes ever disagree."""
    routes = xhp_recurrence_routes(n_max)
    terms = [XHP_PRINTED[0], XHP_PRINTED[1], XHP_PRINTED[2]]
    for m in range(3, n_max + 1):
        values = set(routes[m].values())
        if len(values) != 1:
            raise RecurrenceInconsistent(f"routes for a_{m} disagree: {routes[m]}")
        terms.append(routes[m][min(routes[m])])
    return Sequence(POLYX, terms)


# -- demo -----------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    label: str
    passed: bool
    detail: str = ""


def run_demo(name: str, order: int = 14) -> list[Claim]:
    """Verify every claim attached to a fixture; returns one line each."""
    b = build_example(name, order)
    seq = b.sequence()
    claims = []
    for k, v in sorted(b.printed_terms.items()):
        if k <= order:
            claims.append(Claim(f"a_{k} = {v}", seq[k] == v, f"got {seq[k]}"))
    for fx in b.operators:
        W = translate(fx.op)
        if fx.expected_delta is not None:
            claims.append(Claim(f"translate({fx.label}) = {fx.expected_delta}", W == fx.expected_delta))
        for side in fx.sides:
            rep = diffop_eigencheck(fx.op, b.series, fx.eigenvalue, side)
            claims.append(Claim(
                f"{fx.label} psi = {side} {fx.eigenvalue} psi", rep.holds,
                f"exponents {rep.checked_range[0]}..{rep.checked_range[1]}",
            ))
            nmax = order - max(W.max_shift, 0)
            drep = deltaop_eigencheck(W, seq, fx.eigenvalue, side, nmax)
            claims.append(Claim(
                f"Omega_{fx.label} eigensequence ({side})", drep.holds, f"n = 0..{nmax}",
            ))
        lem = lemma1_check(fx.op, b.series)
        claims.append(Claim(f"coefficientwise identity for {fx.label}", lem.holds,
                            f"exponents {lem.range_checked[0]}..{lem.range_checked[1]}"))
    if name == "xhp":
        ops = {fx.label: fx.op for fx in b.operators}
        for p, q in (("L3", "L4"), ("L3", "L5"), ("L4", "L5")):
            claims.append(Claim(f"[{p}, {q}] = 0", commutator(ops[p], ops[q]).is_zero()))
            wp, wq = translate(ops[p]), translate(ops[q])
            claims.append(Claim(
                f"[Omega_{p[1]}, Omega_{q[1]}] = 0",
                (deltaop_compose(wp, wq) - deltaop_compose(wq, wp)).is_zero(),
            ))
        claims.append(Claim(
            "a_1 = a_2 = 0 and every a_n lies in the lambda ring",
            seq[1].is_zero() and seq[2].is_zero() and all(lambda_ring_member(t) for t in seq),
        ))
        rec = xhp_by_recurrence(min(order, 12))
        claims.append(Claim("recurrence generation matches the series",
                            all(rec[k] == seq[k] for k in range(len(rec)))))
        routes = xhp_recurrence_routes(7)[7]
        claims.append(Claim("a_7 from Omega_3 and Omega_4 agree",
                            routes[(3, 4)] == routes[(4, 3)], str(routes[(3, 4)])))
        max_n = min(order, 10)
        g = gram(seq, max_n, b.weight, tol=1e-8)
        claims.append(Claim("Gram matrix is diagonal", g.orthogonal,
                            f"worst off-diagonal ratio {g.worst_offdiag_ratio:.2e}"))
        worst = 0.0
        for n in range(max_n + 1):
            ref = b.norm_formula(n)
            err = abs(g.omega[n] - ref) / (abs(ref) if ref else g.omega[0])
            worst = max(worst, err)
        claims.append(Claim(f"omega_n = {b.norm_formula_text}", worst <= 1e-8, f"worst error {worst:.2e}"))
    return claims
