"""Acceptance suite: one test per criterion, each printed as PASS/FAIL in the
terminal summary (see ``conftest.py``)."""

import random
import time

import pytest

from skein4.invariantring import (
    H3, VARIABLES, build_gr, eval_inv_poly, leading_monomial, s3, trace_word, xi,
)
from skein4.normalform import (
    NormalElement, Normalizer, as_free, enumerate_basis, mul_normal, normalize, rotate_normal,
)
from skein4.parse import parse_element
from skein4.relations import (
    CENTRAL_KIND, COMMUTATOR, COMMUTING, REDUCTION, default_table,
)
from skein4.skeinfree import CENTRAL, GENERATORS, SkeinElement, mirror
from skein4.traceoracle import (
    IDENTITY, eval_skein_classical, random_matrix_tuple, random_sl2_tuple, rank_check,
)

from conftest import random_word

A = "(Q^2 + Q^-2)"


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def sorted_terms(n: NormalElement):
    return [(m.name(), c) for m, c in n.sorted_terms()]


@pytest.mark.criterion(1, "relation instances vanish classically on 200 SL2 tuples")
def test_criterion_1_classical_soundness():
    with Budget(30):
        table = default_table()
        fams = {}
        for inst in table.instances:
            fams[inst.family] = fams.get(inst.family, 0) + 1
        assert fams[COMMUTATOR] == 20
        assert fams[REDUCTION] == 36          # nine base reduction relations, four rotations each
        assert fams[COMMUTING] == 16
        assert fams[CENTRAL_KIND] == 60
        rng = random.Random(1)
        tuples = [random_sl2_tuple(rng) for _ in range(200)]
        for inst in table.instances:
            r = inst.residue
            for i, t in enumerate(tuples):
                assert eval_skein_classical(r, t) == 0, f"{inst.base} rotation {inst.rotation}, tuple {i}"


@pytest.mark.criterion(2, "every residue and its mirror normalizes to zero")
def test_criterion_2_rewriting_soundness():
    with Budget(10):
        table = default_table()
        nf = Normalizer(table)
        # five duplicate reduction expressions, two repeated commuting relations
        dup = list(table.residues)
        assert len(dup) == 7
        bases = sorted(i.base for i in table.instances if i.family == REDUCTION
                       and i.residue in dup)
        assert bases == ["Eq(t0^2)"] * 3 + ["Eq(t13*t24)", "Eq(t13*t24)"]
        for inst in table.instances:
            r = inst.residue
            assert not nf.normalize(r), f"{inst.base} rotation {inst.rotation}"
            assert not nf.normalize(mirror(r)), f"mirror of {inst.base} rotation {inst.rotation}"
        for r in dup:
            assert not nf.normalize(r) and not nf.normalize(mirror(r))


@pytest.mark.criterion(3, "golden normal forms of the four displayed products")
def test_criterion_3_golden_forms():
    t23t12 = parse_element("Q^-4*t12*t23 + (Q^2 - Q^-6)*t13 + (1 - Q^-4)*(t1*t3 + t2*t123)")
    t13t24 = parse_element(
        f"{A}*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + Q^4*t12*t34 + Q^-4*t23*t14"
        " + Q^2*t3*t4*t12 + Q^-2*t1*t4*t23 + Q^2*t1*t2*t34 + Q^-2*t2*t3*t14 + t1*t2*t3*t4")
    t123sq = parse_element(
        "Q^-2*t12*t23*t13 - (t1*t2*t3 + Q^2*t1*t23 + Q^-2*t2*t13 + Q^-2*t3*t12)*t123"
        f" - t1^2 - t2^2 - t3^2 + {A}^2 - Q^2*t2*t3*t23 - Q^-2*t1*t3*t13 - Q^-2*t1*t2*t12"
        " - Q^4*t23^2 - Q^-4*t13^2 - Q^-4*t12^2")
    t0t234 = parse_element(
        "Q^-2*(t23*t34 - Q^-2*t24 - t2*t4)*t124 - (Q^2*t2*t34 + Q^-2*t3*t24 + Q^-2*t4*t23 + t2*t3*t4)*t0"
        " - Q^4*t34*t134 - Q^-4*t23*t123 - Q^-2*t3*t23*t12 - Q^2*t3*t14*t34"
        f" + Q^2*t1*t3^2 + Q^4*t3*t13 - t2*t12 - t4*t14 - {A}*t1")

    # these right-hand sides are already basis expansions: compare term by term
    for lhs, rhs in ((normalize("t23*t12"), t23t12), (normalize("t13*t24"), t13t24),
                     (mul_normal(normalize("t123"), normalize("t123")), t123sq)):
        expected = NormalElement.from_words({w: c for w, c in rhs.terms.items()})
        assert sorted_terms(lhs) == sorted_terms(expected)
    got = mul_normal(normalize("t0"), normalize("t234"))
    assert sorted_terms(got) == sorted_terms(normalize(t0t234))
    assert len(got) == 18
    assert normalize("t23*t12").render() == \
        "(Q^2 - Q^-6)*t13 + (1 - Q^-4)*t1*t3 + (1 - Q^-4)*t2*t123 + Q^-4*t12*t23"


@pytest.mark.criterion(4, "1000 random words agree under both strategies; idempotent")
def test_criterion_4_confluence():
    with Budget(120):
        left, right = Normalizer(strategy="leftmost"), Normalizer(strategy="rightmost")
        rng = random.Random(4)
        for _ in range(1000):
            w = random_word(rng, 6)
            e = SkeinElement.word(w)
            a = left.normalize(e)
            assert a == right.normalize(e), "*".join(g.name for g in w)
            assert left.normalize(as_free(a)) == a


@pytest.mark.criterion(5, "associativity on 300 basis triples of degree <= 3")
def test_criterion_5_associativity():
    basis = enumerate_basis(3)
    rng = random.Random(5)
    for _ in range(300):
        a, b, c = (rng.choice(basis) for _ in range(3))
        assert mul_normal(mul_normal(a, b), c) == mul_normal(a, mul_normal(b, c)), (a, b, c)


@pytest.mark.criterion(6, "rotation equivariance on 500 words; centrality")
def test_criterion_6_symmetry():
    rng = random.Random(6)
    for _ in range(500):
        e = SkeinElement.word(random_word(rng, 5))
        k = rng.randint(1, 3)
        assert normalize(e.rotate(k)) == rotate_normal(normalize(e), k)
    for c in CENTRAL:
        for g in GENERATORS:
            assert normalize(SkeinElement.word([c, g])) == normalize(SkeinElement.word([g, c]))


@pytest.mark.criterion(7, "classical value preserved by normalize on 500 pairs")
def test_criterion_7_classical_compatibility():
    rng = random.Random(7)
    for _ in range(500):
        e = SkeinElement.word(random_word(rng, 5))
        t = random_sl2_tuple(rng)
        assert eval_skein_classical(as_free(normalize(e)), t) == eval_skein_classical(e, t)


@pytest.mark.criterion(8, "full column rank of the degree <= 3 basis")
def test_criterion_8_rank():
    with Budget(120):
        basis = enumerate_basis(3)
        assert len(basis) == 560
        assert rank_check(basis, len(basis) + 20, seed=8) == len(basis)


def _product_trace(w, X):
    m = IDENTITY
    for i in w:
        m = m @ X[i - 1]
    return m.trace()


@pytest.mark.criterion(9, "Groebner sets vanish; leading terms; trace expansion")
def test_criterion_9_invariant_ring():
    with Budget(30):
        gr = build_gr()
        assert [len(g) for g in gr] == [1, 16, 4, 6, 4]
        rng = random.Random(9)
        tuples = [random_matrix_tuple(rng) for _ in range(200)]
        for family in gr:
            for p in family:
                assert all(eval_inv_poly(p, X) == 0 for X in tuples)
        for a in H3:
            for b in H3:
                assert leading_monomial(xi(a, b)) == leading_monomial(s3(*a) * s3(*b))
        k = VARIABLES.index("s123")
        for family in gr[:1] + gr[2:]:
            for p in family:
                assert leading_monomial(p)[k] == 0
        for _ in range(300):
            w = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 6)))
            X = random_matrix_tuple(rng)
            assert eval_inv_poly(trace_word(w), X) == _product_trace(w, X)
