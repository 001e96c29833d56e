"""The commutative side: Groebner sets for four matrices and trace expansion."""

import random

from skein4.invariantring import (
    VARIABLES, build_gr, eval_inv_poly, leading_monomial, monomial_name, trace_word,
)
from skein4.traceoracle import random_matrix_tuple

gr = build_gr()
print("sizes of Gr0..Gr4:", [len(g) for g in gr])
for p in gr[2][:2]:
    print("  leading monomial:", monomial_name(leading_monomial(p)))

rng = random.Random(3)
X = random_matrix_tuple(rng)
print("all vanish on a random tuple:", all(eval_inv_poly(p, X) == 0 for g in gr for p in g))

p = trace_word((1, 2, 3, 4))
print(f"tr(X1 X2 X3 X4) in {len(VARIABLES)} variables:")
print(" ", p)
