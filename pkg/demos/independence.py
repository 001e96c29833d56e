"""Linear independence of low-degree basis monomials after specialising
q^(1/2) = -1 and evaluating on random SL(2, Z) tuples."""

import time

from skein4 import enumerate_basis
from skein4.traceoracle import rank_check

for bound in (1, 2):
    basis = enumerate_basis(bound)
    t0 = time.perf_counter()
    r = rank_check(basis, len(basis) + 20, seed=0)
    print(f"bound {bound}: {len(basis)} columns, rank {r} ({time.perf_counter() - t0:.1f}s)")
