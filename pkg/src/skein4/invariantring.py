"""Invariants of 4-tuples of 2x2 matrices.

The polynomial ring has 18 variables, ordered ::

    t1 < t2 < t3 < t4 < s11 < s12 < ... < s44 < s123 < s124 < s134 < s234

with ``s_I = tr([[x_i1]] ... [[x_ir]])`` and ``[[x]] = x - tr(x)/2 * e``.
Monomials are compared lexicographically, largest variable first.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .skeinfree import SkeinElement
from .traceoracle import Mat2, MatTuple

__all__ = [
    "VARIABLES", "InvPoly", "var", "t", "s", "s3", "theta", "xi", "zeta1", "zeta2",
    "zeta3", "H2", "H3", "H4", "build_gr", "leading_monomial", "monomial_name",
    "trace_word", "skein_to_trace", "eval_inv_poly", "sl2_substitute", "variable_values",
]

H2 = tuple(itertools.combinations((1, 2, 3, 4), 2))
H3 = tuple(itertools.combinations((1, 2, 3, 4), 3))
H4 = tuple(itertools.combinations((1, 2, 3, 4), 4))

_S2 = tuple((i, j) for i in range(1, 5) for j in range(i, 5))
VARIABLES: tuple[str, ...] = (
    tuple(f"t{i}" for i in range(1, 5))
    + tuple(f"s{i}{j}" for i, j in _S2)
    + tuple(f"s{''.join(map(str, a))}" for a in H3)
)
NVARS = len(VARIABLES)
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_ZERO_EXP = (0,) * NVARS


class InvPoly:
    """Commutative polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for e, c in items:
            if not c:
                continue
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        self.terms = {e: Fraction(c) for e, c in acc.items()}

    @classmethod
    def const(cls, c) -> "InvPoly":
        return cls({_ZERO_EXP: Fraction(c)})

    @staticmethod
    def coerce(x) -> "InvPoly":
        return x if isinstance(x, InvPoly) else InvPoly.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = InvPoly.const(other)
        if not isinstance(other, InvPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "InvPoly":
        other = InvPoly.coerce(other)
        return InvPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "InvPoly":
        return InvPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "InvPoly":
        return self + (-InvPoly.coerce(other))

    def __rsub__(self, other) -> "InvPoly":
        return InvPoly.coerce(other) - self

    def __mul__(self, other) -> "InvPoly":
        if isinstance(other, (int, Fraction)):
            return InvPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, InvPoly):
            return NotImplemented
        acc: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                k = tuple(a + b for a, b in zip(e, f))
                acc[k] = acc.get(k, 0) + c * d
        return InvPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "InvPoly":
        out = InvPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def degree_in(self, name: str) -> int:
        i = _INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def substitute(self, name: str, value: "InvPoly") -> "InvPoly":
        i = _INDEX[name]
        out = InvPoly()
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            out = out + InvPoly({rest: c}) * value ** e[i]
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: e[::-1], reverse=True):
            c = self.terms[e]
            mono = monomial_name(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f" {sign} {body}"))
        return "".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"InvPoly({self.render()!r})"


def monomial_name(e: Sequence[int]) -> str:
    parts = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) or "1"


def var(name: str) -> InvPoly:
    e = [0] * NVARS
    e[_INDEX[name]] = 1
    return InvPoly({tuple(e): Fraction(1)})


def t(i: int) -> InvPoly:
    return var(f"t{i}")


def s(i: int, j: int) -> InvPoly:
    """``s_ij``, symmetric in ``i, j``."""
    i, j = min(i, j), max(i, j)
    return var(f"s{i}{j}")


def _perm_sign(idx: Sequence[int]) -> int:
    sign = 1
    idx = list(idx)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sign = -sign
    return sign


def s3(i: int, j: int, k: int) -> InvPoly:
    """``tr([[x_i]][[x_j]][[x_k]])``: alternating in its indices, so zero on a
    repeated index and ``sign * s_sorted`` otherwise."""
    if len({i, j, k}) < 3:
        return InvPoly()
    return var("s" + "".join(map(str, sorted((i, j, k))))) * _perm_sign((i, j, k))


def _det(m: list[list[InvPoly]]) -> InvPoly:
    n = len(m)
    total = InvPoly()
    for perm in itertools.permutations(range(n)):
        term = InvPoly.const(_perm_sign(perm))
        for r, c in enumerate(perm):
            term = term * m[r][c]
        total = total + term
    return total


def theta(b: Sequence[int], c: Sequence[int]) -> InvPoly:
    """Determinant of ``(s_{b_i c_j})``."""
    if len(b) != len(c):
        raise ValueError(f"theta needs index tuples of equal length, got {b} and {c}")
    return _det([[s(bi, cj) for cj in c] for bi in b])


def _h3(a: Sequence[int], what: str = "a") -> tuple:
    a = tuple(a)
    if a not in H3:
        raise ValueError(f"{what}={a} is not an ascending triple from 1..4")
    return a


def xi(a: Sequence[int], b: Sequence[int]) -> InvPoly:
    a, b = _h3(a), _h3(b, "b")
    return 2 * s3(*a) * s3(*b) + theta(a, b)


def zeta1(b: int, c: int, a: Sequence[int]) -> InvPoly:
    a1, a2, a3 = _h3(a)
    return (s(b, c) * s3(a1, a2, a3) - s(a1, c) * s3(b, a2, a3)
            + s(a2, c) * s3(b, a1, a3) - s(a3, c) * s3(b, a1, a2))


def zeta2(b: Sequence[int], c: Sequence[int], a: Sequence[int]) -> InvPoly:
    if len(b) != 2 or len(c) != 2:
        raise ValueError("zeta2 needs pairs b and c")
    (b1, b2), a1, a2, a3 = b, *_h3(a)
    return (theta((b1, b2), c) * s3(a1, a2, a3) - theta((b1, a2), c) * s3(a1, b2, a3)
            + theta((b1, a3), c) * s3(a1, b2, a2) + theta((b2, a2), c) * s3(a1, b1, a3)
            - theta((b2, a3), c) * s3(a1, b1, a2) + theta((a2, a3), c) * s3(a1, b1, b2))


def zeta3(b: Sequence[int], c: Sequence[int], a: Sequence[int]) -> InvPoly:
    if len(b) != 3 or len(c) != 3:
        raise ValueError("zeta3 needs triples b and c")
    (b1, b2, b3), (a1, a2, a3) = b, _h3(a)
    return (theta((b1, b2, b3), c) * s3(a1, a2, a3) - theta((b1, b2, a3), c) * s3(a1, a2, b3)
            + theta((b1, b3, a3), c) * s3(a1, a2, b2) - theta((b2, b3, a3), c) * s3(a1, a2, b1))


def build_gr() -> list[list[InvPoly]]:
    """The five families of the Groebner basis of the trace-relation ideal for n = 4."""
    gr0 = [theta((1, 2, 3, 4), (1, 2, 3, 4))]
    gr1 = [xi(a, b) for a in H3 for b in H3]
    gr2 = [zeta1(1, c, (2, 3, 4)) for c in range(1, 5)]
    gr3 = [zeta2((1, 2), c, (1, 3, 4)) for c in H2]
    gr4 = [zeta3((1, 2, 3), c, (1, 2, 4)) for c in H3]
    return [gr0, gr1, gr2, gr3, gr4]


def leading_monomial(p: InvPoly) -> tuple:
    """Lex-greatest exponent vector (largest variable compared first)."""
    if not p.terms:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(p.terms, key=lambda e: e[::-1])


# -- traces of words ---------------------------------------------------------

def _traceless_trace(w: tuple) -> InvPoly:
    """``tr([[x_w1]] ... [[x_wm]])`` as a polynomial."""
    return _traceless_cached(tuple(w))


@lru_cache(maxsize=None)
def _traceless_cached(w: tuple) -> InvPoly:
    n = len(w)
    if n == 0:
        return InvPoly.const(2)
    if n == 1:
        return InvPoly()
    if n == 2:
        return s(*w)
    for i in range(n - 1):
        if w[i] == w[i + 1]:
            # u^2 = s_uu / 2 * e
            return s(w[i], w[i]) * Fraction(1, 2) * _traceless_cached(w[:i] + w[i + 2:])
    if n == 3:
        return s3(*w)
    if w[0] == w[-1]:
        # cyclic rotation brings the repeated letters together
        return _traceless_cached(w[1:] + w[:1])
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            # uv = s_uv e - vu
            rest = w[:i] + w[i + 2:]
            swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2:]
            return s(w[i], w[i + 1]) * _traceless_cached(rest) - _traceless_cached(swapped)
    # strictly increasing word of length 4: u1 u2 u3 u4.  Moving u1 to the back
    # through three exchanges and using cyclicity gives 2 tr(w) = sum below.
    if n == 4:
        a, b, c, d = w
        return (s(a, b) * s(c, d) - s(a, c) * s(b, d) + s(a, d) * s(b, c)) * Fraction(1, 2)
    raise AssertionError(f"unreachable traceless word {w}")


@lru_cache(maxsize=None)
def _trace_word_cached(w: tuple) -> InvPoly:
    total = InvPoly()
    n = len(w)
    for mask in range(1 << n):
        kept = tuple(w[i] for i in range(n) if mask >> i & 1)
        coeff = InvPoly.const(1)
        for i in range(n):
            if not mask >> i & 1:
                coeff = coeff * t(w[i]) * Fraction(1, 2)
        total = total + coeff * _traceless_cached(kept)
    return total


def trace_word(w: Iterable[int]) -> InvPoly:
    """``tr(x_w1 ... x_wm)`` in terms of the 18 variables."""
    w = tuple(w)
    if any(i not in (1, 2, 3, 4) for i in w):
        raise ValueError(f"trace word letters must lie in 1..4, got {w}")
    return _trace_word_cached(w)


def sl2_substitute(p: InvPoly) -> InvPoly:
    """Impose ``det = 1``: ``s_ii -> t_i^2 / 2 - 2``."""
    for i in range(1, 5):
        p = p.substitute(f"s{i}{i}", t(i) * t(i) * Fraction(1, 2) - 2)
    return p


def _skein_word_trace(word) -> InvPoly:
    out = InvPoly.const(1)
    for g in word:
        out = out * -trace_word(g.holes)
    return out


def skein_to_trace(e: SkeinElement, sl2: bool = False) -> InvPoly:
    """Classical image of ``e``: ``t_S -> -tr(x_S)``, coefficients at ``q^(1/2) = -1``."""
    total = InvPoly()
    for w, c in e.terms.items():
        v = c.eval_classical()
        if v:
            total = total + _skein_word_trace(w) * v
    return sl2_substitute(total) if sl2 else total


def variable_values(tup: MatTuple) -> list:
    """Exact values of the 18 variables on a matrix 4-tuple."""
    tl = [m.traceless() for m in tup]
    vals = [m.trace() for m in tup]
    vals += [(tl[i - 1] @ tl[j - 1]).trace() for i, j in _S2]
    vals += [(tl[i - 1] @ tl[j - 1] @ tl[k - 1]).trace() for i, j, k in H3]
    return vals


def eval_inv_poly(p: InvPoly, tup: MatTuple | Sequence) -> Fraction | int:
    vals = tup if not isinstance(tup[0], Mat2) else variable_values(tup)
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for v, k in zip(vals, e):
            if k:
                term *= v ** k
        total += term
    return total.numerator if total.denominator == 1 else total
