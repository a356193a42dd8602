"""Orthogonality through the Gram matrix.

The exceptional Hermite family is orthogonal for exp(-x^2)/(x^2 + 1/2)^2.
The Gram matrix comes out diagonal, and its diagonal matches a closed
form.  Monomials under the same weight are a negative control.
"""
import math

from genfun import gram, sequence_from_series, theorem2_norms
from genfun.examples import XHP_WEIGHT, xhp_norm, xhp_series
from genfun.ring import POLYX, Poly

a = sequence_from_series(xhp_series(10))
rep = gram(a, 10, XHP_WEIGHT, workers=4)
print(rep.table())

print("\n  n   omega_n / closed form")
for n, w in enumerate(theorem2_norms(rep)):
    ref = xhp_norm(n)
    ratio = "   (both zero)" if n in (1, 2) else f"{w / ref:.15f}"
    print(f"{n:3d}   {ratio}")

print("\nomega_3 / sqrt(pi) =", rep.omega[3] / math.sqrt(math.pi))

mono = [POLYX.poly(Poly.x() ** k) for k in range(5)]
ctrl = gram(mono, 4, XHP_WEIGHT)
print("\nmonomials: worst off-diagonal ratio", f"{ctrl.worst_offdiag_ratio:.3f}",
      "->", "orthogonal" if ctrl.orthogonal else "not orthogonal")
