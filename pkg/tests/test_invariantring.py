import random
from fractions import Fraction
from itertools import permutations

import pytest

from skein4.invariantring import (
    H3, VARIABLES, InvPoly, build_gr, eval_inv_poly, leading_monomial, monomial_name, s, s3,
    skein_to_trace, sl2_substitute, t, theta, trace_word, var, xi, zeta1,
)
from skein4.parse import parse_element
from skein4.relations import default_table
from skein4.traceoracle import IDENTITY, random_matrix_tuple, random_sl2, random_sl2_tuple

HALF = Fraction(1, 2)


def lead_name(p):
    return monomial_name(leading_monomial(p))


def test_variables():
    assert len(VARIABLES) == 18
    assert VARIABLES[:4] == ("t1", "t2", "t3", "t4")
    assert VARIABLES[-1] == "s234"
    assert s(3, 1) == s(1, 3) == var("s13")


def test_triple_accessor_is_alternating():
    assert s3(2, 1, 3) == -s3(1, 2, 3)
    assert s3(3, 1, 2) == s3(1, 2, 3)
    assert s3(1, 1, 2) == InvPoly()


def test_theta_examples():
    assert theta((1, 2), (1, 2)) == s(1, 1) * s(2, 2) - s(1, 2) * s(1, 2)
    b = (1, 2, 3)
    det3 = InvPoly()
    for perm in permutations(range(3)):
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
        term = InvPoly.const(sign)
        for i, j in enumerate(perm):
            term = term * s(b[i], b[j])
        det3 = det3 + term
    assert theta(b, b) == det3
    assert theta((1, 3), (2, 4)) == theta((2, 4), (1, 3))
    with pytest.raises(ValueError):
        theta((1, 2), (1, 2, 3))


def test_xi_examples():
    a = (1, 2, 3)
    assert xi(a, a) == 2 * s3(*a) * s3(*a) + theta(a, a)
    assert xi((1, 2, 4), (2, 3, 4)) == xi((2, 3, 4), (1, 2, 4))


def test_zeta1_examples():
    assert zeta1(1, 2, (2, 3, 4)) == (s(1, 2) * s3(2, 3, 4) - s(2, 2) * s3(1, 3, 4)
                                       + s(2, 3) * s3(1, 2, 4) - s(2, 4) * s3(1, 2, 3))
    assert lead_name(zeta1(1, 1, (2, 3, 4))) == "s11*s234"


def test_gr_sizes():
    assert [len(g) for g in build_gr()] == [1, 16, 4, 6, 4]


def test_gr_vanishes(rng):
    tuples = [random_matrix_tuple(rng) for _ in range(30)]
    for family in build_gr():
        for p in family:
            assert all(eval_inv_poly(p, tup) == 0 for tup in tuples)


def test_leading_monomials():
    for a in H3:
        for b in H3:
            assert leading_monomial(xi(a, b)) == leading_monomial(s3(*a) * s3(*b))
    for c in range(1, 5):
        assert leading_monomial(zeta1(1, c, (2, 3, 4))) == leading_monomial(s(1, c) * s3(2, 3, 4))
    k = VARIABLES.index("s123")
    gr = build_gr()
    for family in gr[:1] + gr[2:]:
        assert all(leading_monomial(p)[k] == 0 for p in family)
    with pytest.raises(ValueError):
        leading_monomial(InvPoly())


def test_leading_order_favours_later_variables():
    p = var("t1") ** 5 + var("s234")
    assert lead_name(p) == "s234"
    assert lead_name(var("s11") * var("s12") + var("s13")) == "s13"


def test_trace_word_examples():
    for i in range(1, 5):
        assert trace_word((i,)) == t(i)
    assert trace_word((1, 2)) == s(1, 2) + HALF * t(1) * t(2)
    block = (s(1, 2) * s(3, 4) - s(1, 3) * s(2, 4) + s(1, 4) * s(2, 3)) * Fraction(1, 4) * 2
    w = trace_word((1, 2, 3, 4))
    assert all(w.terms.get(e) == c for e, c in block.terms.items())
    assert trace_word(()) == InvPoly.const(2)
    with pytest.raises(ValueError):
        trace_word((5,))


def _mat_trace(w, X):
    m = IDENTITY
    for i in w:
        m = m @ X[i - 1]
    return m.trace()


def test_trace_word_matches_matrices(rng):
    for _ in range(60):
        w = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 6)))
        X = random_matrix_tuple(rng, 4)
        assert eval_inv_poly(trace_word(w), X) == _mat_trace(w, X)


def test_trace_word_cyclic(rng):
    for _ in range(30):
        w = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 6)))
        assert trace_word(w) == trace_word(w[1:] + w[:1])


def test_skein_to_trace_examples():
    assert skein_to_trace(parse_element("t1")) == -t(1)
    assert skein_to_trace(parse_element("t1*t2 - t2*t1")) == InvPoly()
    inst = next(i for i in default_table().instances if i.base == "Eq(t23*t12)" and i.rotation == 0)
    assert skein_to_trace(inst.residue, sl2=True) == InvPoly()


def test_eval_examples():
    assert eval_inv_poly(s(1, 2), (IDENTITY,) * 4) == 0
    for seed in range(10):
        X = random_sl2(seed)
        tup = (X, IDENTITY, IDENTITY, IDENTITY)
        assert eval_inv_poly(s(1, 1), tup) == HALF * X.trace() ** 2 - 2
    rng = random.Random(1)
    for _ in range(10):
        assert eval_inv_poly(theta((1, 2, 3, 4), (1, 2, 3, 4)), random_matrix_tuple(rng)) == 0


def test_residues_in_kernel(rng):
    tuples = [random_sl2_tuple(rng) for _ in range(3)]
    for inst in default_table().instances[::3]:
        p = skein_to_trace(inst.residue)
        assert all(eval_inv_poly(p, tup) == 0 for tup in tuples)


def test_sl2_substitute():
    assert sl2_substitute(s(2, 2)) == HALF * t(2) * t(2) - 2
    assert sl2_substitute(s(1, 2)) == s(1, 2)


def test_render():
    assert (HALF * t(1) * t(2) + s(1, 2)).render() == "s12 + 1/2*t1*t2"
    assert InvPoly().render() == "0"
