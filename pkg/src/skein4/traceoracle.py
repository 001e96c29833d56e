"""Classical limit: skein elements as trace functions on SL(2) 4-tuples.

At ``q^(1/2) = -1`` a curve ``t_S`` becomes ``-tr(X_i1 ... X_ir)`` for the
ascending hole list of ``S``.  All arithmetic is exact (ints / Fractions).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .skeinfree import GENERATORS, Generator, SkeinElement

__all__ = [
    "Mat2", "MatTuple", "IDENTITY", "shear", "shear_product", "random_sl2",
    "random_sl2_tuple", "random_matrix_tuple", "generator_values",
    "eval_generator_trace", "eval_skein_classical", "eval_word_classical",
    "evaluation_matrix", "rank_check", "bareiss_rank", "modular_rank", "exact_rank",
]


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class Mat2:
    """Exact 2x2 matrix ``[[a, b], [c, d]]`` over the rationals."""

    a: int | Fraction
    b: int | Fraction
    c: int | Fraction
    d: int | Fraction

    def __post_init__(self):
        for f in "abcd":
            v = getattr(self, f)
            if isinstance(v, float):
                raise TypeError("Mat2 entries must be exact")
            object.__setattr__(self, f, _num(Fraction(v)))

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def scale(self, s) -> "Mat2":
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def trace(self):
        return _num(Fraction(self.a + self.d))

    def det(self):
        return _num(Fraction(self.a * self.d - self.b * self.c))

    def traceless(self) -> "Mat2":
        """``x - tr(x)/2 * e``."""
        h = Fraction(self.trace(), 2)
        return Mat2(self.a - h, self.b, self.c, self.d - h)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Mat2(1, 0, 0, 1)

MatTuple = tuple  # tuple[Mat2, Mat2, Mat2, Mat2]


def shear(s: int, upper: bool = True) -> Mat2:
    return Mat2(1, s, 0, 1) if upper else Mat2(1, 0, s, 1)


def shear_product(params: Iterable[int]) -> Mat2:
    """Alternating upper/lower unitriangular shears; determinant 1."""
    m = IDENTITY
    for i, s in enumerate(params):
        m = m @ shear(s, upper=(i % 2 == 0))
    return m


def random_sl2(seed: int | random.Random, steps: int = 4) -> Mat2:
    """Deterministic random integer SL(2) matrix from ``steps`` shears in [-3, 3]."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return shear_product(rng.randint(-3, 3) for _ in range(steps))


def random_sl2_tuple(rng: random.Random, steps: int = 4) -> MatTuple:
    return tuple(random_sl2(rng, steps) for _ in range(4))


def random_matrix_tuple(rng: random.Random, bound: int = 5) -> MatTuple:
    """Arbitrary (not necessarily invertible) integer matrices."""
    return tuple(Mat2(*(rng.randint(-bound, bound) for _ in range(4))) for _ in range(4))


def _holonomy(g: Generator, t: MatTuple) -> Mat2:
    m = t[g.holes[0] - 1]
    for h in g.holes[1:]:
        m = m @ t[h - 1]
    return m


def eval_generator_trace(g: Generator, t: MatTuple):
    """``-tr`` of the ascending product of the tuple entries indexed by ``g``."""
    return -_holonomy(g, t).trace()


def generator_values(t: MatTuple) -> dict:
    return {g: eval_generator_trace(g, t) for g in GENERATORS}


def eval_word_classical(w: Sequence[Generator], values: dict):
    out = 1
    for g in w:
        out *= values[g]
    return out


def eval_skein_classical(e: SkeinElement, t: MatTuple | dict):
    """Value of ``e`` at ``q^(1/2) = -1`` on the matrix tuple ``t``."""
    values = t if isinstance(t, dict) else generator_values(t)
    total = 0
    for w, c in e.terms.items():
        total += c.eval_classical() * eval_word_classical(w, values)
    return _num(Fraction(total))


# -- rank ------------------------------------------------------------------

def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers.

    Rational entries are cleared to integers row by row first.
    """
    m = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
        m.append([int(x * den) for x in r])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            ri, rr = m[i], m[rank]
            m[i] = [(p * ri[j] - f * rr[j]) // prev if j > col else 0 for j in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


_PRIMES = (2147483629, 2147483587, 2147483579)


def modular_rank(rows: Sequence[Sequence[int]], p: int = _PRIMES[0]) -> int:
    """Rank of an integer matrix over ``GF(p)``; never exceeds the rational rank."""
    a = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    if a.size == 0:
        return 0
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1:, col].copy()
        idx = np.nonzero(below)[0]
        if idx.size:
            rows_ = rank + 1 + idx
            # entries < 2^31, so products fit in int64
            a[rows_] = (a[rows_] - (below[idx, None] * a[rank][None, :]) % p) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Exact rational rank of an integer matrix.

    Rank modulo a prime is a lower bound for the rational rank, so reaching
    ``min(rows, cols)`` modulo any prime certifies the rank exactly.  Only
    rank-deficient matrices fall through to Bareiss elimination.
    """
    if not rows:
        return 0
    full = min(len(rows), len(rows[0]))
    if all(isinstance(x, int) for r in rows for x in r):
        for p in _PRIMES:
            if modular_rank(rows, p) == full:
                return full
    return bareiss_rank(rows)


def evaluation_matrix(monomials, tuples) -> list[list]:
    """Rows: matrix tuples; columns: classical values of the monomials."""
    out = []
    for t in tuples:
        vals = generator_values(t)
        out.append([eval_word_classical(m.word if hasattr(m, "word") else m, vals)
                    for m in monomials])
    return out


def rank_check(monomials, sample_count: int, seed: int, steps: int = 6) -> int:
    """Rank of the classical evaluation matrix of ``monomials`` at
    ``sample_count`` random SL(2) 4-tuples."""
    monomials = list(monomials)
    if sample_count < len(monomials):
        raise ValueError(f"need at least {len(monomials)} samples, got {sample_count}")
    rng = random.Random(seed)
    tuples = [random_sl2_tuple(rng, steps) for _ in range(sample_count)]
    return exact_rank(evaluation_matrix(monomials, tuples))
