import itertools
import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supplycat.finset import Permutation
from supplycat.smc import (
    UNIT, FinSetCat, Leaf, LeafMismatch, MatQ, NestedRel, PropAsSMC, Rel, Tensor, Terminal,
    canonical_iso, check_smc_axioms, elements, flatten_relation, nest_relation, tensor_all,
)
from supplycat.smc.coherence import composite_iso
from supplycat.smc.matq import dim
from supplycat.props import FinSetProp

SETS = [UNIT, Leaf(0), Leaf(1), Leaf(2), Leaf(3), Tensor(Leaf(2), Leaf(1))]


@st.composite
def relations(draw, dom=None, cod=None):
    a = draw(st.sampled_from(SETS)) if dom is None else dom
    b = draw(st.sampled_from(SETS)) if cod is None else cod
    ea, eb = elements(a), elements(b)
    pairs = draw(st.sets(st.tuples(st.integers(0, len(ea) - 1), st.integers(0, len(eb) - 1)))
                 ) if ea and eb else set()
    return a, b, pairs


def rel_of(R, a, b, pairs):
    return R.relation(a, b, pairs)


# -- relations against a set-of-pairs oracle -------------------------------------------------

@given(st.data())
def test_rel_compose_matches_pairs(data):
    R = Rel()
    a, b, p = data.draw(relations())
    _, c, q = data.draw(relations(dom=b))
    got = R.compose(rel_of(R, a, b, p), rel_of(R, b, c, q)).pairs()
    assert got == {(i, k) for i, j in p for j2, k in q if j == j2}


@given(relations(), relations())
def test_rel_tensor_is_row_major_product(f, g):
    R = Rel()
    (a, b, p), (c, d, q) = f, g
    nc, nd = len(elements(c)), len(elements(d))
    got = R.tensor(rel_of(R, a, b, p), rel_of(R, c, d, q)).pairs()
    assert got == {(i1 * nc + i2, j1 * nd + j2) for i1, j1 in p for i2, j2 in q}


@given(relations())
def test_nested_and_flat_relations_round_trip(f):
    R = Rel()
    a, b, p = f
    r = rel_of(R, a, b, p)
    assert flatten_relation(nest_relation(r)) == r
    ea, eb = elements(a), elements(b)
    assert nest_relation(r).pairs == frozenset((ea[i], eb[j]) for i, j in p)


@given(st.data())
def test_nested_compose_agrees_with_flat(data):
    R, N = Rel(), NestedRel()
    a, b, p = data.draw(relations())
    _, c, q = data.draw(relations(dom=b))
    f, g = rel_of(R, a, b, p), rel_of(R, b, c, q)
    assert flatten_relation(N.compose(nest_relation(f), nest_relation(g))) == R.compose(f, g)
    assert flatten_relation(N.tensor(nest_relation(f), nest_relation(g))) == R.tensor(f, g)


def test_nested_associator_moves_elements():
    N = NestedRel()
    two = Leaf(2)
    alpha = N.associator(two, two, two)
    assert not N.is_identity_like(alpha)
    assert (((1, 2), 1), (1, (2, 1))) in alpha.pairs
    assert Rel().is_identity_like(flatten_relation(alpha))


def test_rel_hom_enumeration_is_complete_when_small():
    R = Rel()
    assert len(R.enumerate_hom(Leaf(2), Leaf(2))) == 16
    assert len(R.enumerate_hom(UNIT, Leaf(0))) == 1


# -- matrices against a Fraction oracle ------------------------------------------------------

def fraction_rows(M: MatQ, f):
    return [[f.entry(i, j) for j in range(f.num.shape[1])] for i in range(f.num.shape[0])]


@st.composite
def matrices(draw, dom=None, cod=None):
    a = draw(st.sampled_from([UNIT, Leaf(1), Leaf(2), Leaf(3)])) if dom is None else dom
    b = draw(st.sampled_from([UNIT, Leaf(1), Leaf(2), Leaf(3)])) if cod is None else cod
    rows, cols = dim(b), dim(a)
    entries = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    vals = draw(st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return MatQ().matrix(a, b, vals)


@given(st.data())
def test_matq_compose_matches_fractions(data):
    M = MatQ()
    f = data.draw(matrices())
    g = data.draw(matrices(dom=f.cod))
    A, B = fraction_rows(M, f), fraction_rows(M, g)
    expected = [[sum((B[i][k] * A[k][j] for k in range(len(A))), Fraction(0))
                 for j in range(len(A[0]) if A else 0)] for i in range(len(B))]
    assert fraction_rows(M, M.compose(f, g)) == expected


@given(matrices(), matrices())
def test_matq_tensor_is_kronecker(f, g):
    M = MatQ()
    A, B = fraction_rows(M, f), fraction_rows(M, g)
    h = fraction_rows(M, M.tensor(f, g))
    for i1, j1, i2, j2 in itertools.product(range(len(A)), range(len(A[0]) if A else 0),
                                            range(len(B)), range(len(B[0]) if B else 0)):
        assert h[i1 * len(B) + i2][j1 * len(B[0]) + j2] == A[i1][j1] * B[i2][j2]


def test_matq_equality_is_exact():
    M = MatQ()
    two = Leaf(2)
    a = M.matrix(two, two, [[Fraction(1, 2), 0], [0, Fraction(2, 4)]])
    b = M.scale(M.identity(two), Fraction(1, 2))
    assert M.equal(a, b)
    assert not M.equal(a, M.identity(two))


def test_matq_large_entries_stay_exact():
    M = MatQ()
    one = Leaf(1)
    f = M.matrix(one, one, [[Fraction(3, 7) ** 30]])
    g = M.compose(f, f)
    assert g.entry(0, 0) == Fraction(3, 7) ** 60


# -- object words and the canonical isomorphisms -------------------------------------------------

def test_tensor_words_are_interned():
    a = Tensor(Leaf(1), Leaf(2))
    assert a is Tensor(Leaf(1), Leaf(2))
    assert pickle.loads(pickle.dumps(a)) is a
    assert tensor_all([]) is UNIT
    assert tensor_all([Leaf(1), Leaf(2), Leaf(3)]) == Tensor(Tensor(Leaf(1), Leaf(2)), Leaf(3))


def bracketings(draw, items):
    if not items:
        return UNIT
    if len(items) == 1:
        w = items[0]
        return Tensor(UNIT, w) if draw(st.booleans()) and draw(st.booleans()) else w
    k = draw(st.integers(1, len(items) - 1))
    return Tensor(bracketings(draw, items[:k]), bracketings(draw, items[k:]))


@st.composite
def iso_problems(draw, atoms):
    n = draw(st.integers(0, 4))
    src_atoms = [Leaf(draw(st.sampled_from(atoms))) for _ in range(n)]
    perm = Permutation(draw(st.permutations(list(range(1, n + 1)))))
    tgt_atoms = [None] * n
    for i, a in enumerate(src_atoms, 1):
        tgt_atoms[perm(i) - 1] = a
    return bracketings(draw, src_atoms), bracketings(draw, tgt_atoms), perm


@pytest.mark.parametrize("C,atoms", [
    (Rel(), [UNIT, Leaf(0), Leaf(1), Leaf(2), Leaf(3)]),
    (FinSetCat(), [UNIT, Leaf(1), Leaf(2), Leaf(3)]),
    (MatQ(), [UNIT, Leaf(1), Leaf(2), Leaf(3)]),
], ids=["Rel", "FinSetCat", "MatQ"])
@given(data=st.data())
def test_reindexing_fast_path_matches_coherence_composite(C, atoms, data):
    src, tgt, perm = data.draw(iso_problems(atoms))
    fast = C.reindexing_iso(src, tgt, perm)
    assert fast is not None
    assert C.equal(fast, composite_iso(C, src, tgt, perm))


def test_canonical_iso_rejects_mismatched_atoms():
    with pytest.raises(LeafMismatch):
        canonical_iso(NestedRel(), Tensor(Leaf(Leaf(1)), Leaf(Leaf(2))),
                      Tensor(Leaf(Leaf(1)), Leaf(Leaf(1))))


def test_canonical_iso_uses_braiding_for_swaps():
    N = NestedRel()
    a, b = Leaf(1), Leaf(2)
    iso = canonical_iso(N, Tensor(Leaf(a), Leaf(b)), Tensor(Leaf(b), Leaf(a)), Permutation([2, 1]))
    assert N.equal(iso, N.braiding(a, b))


# -- the laws -----------------------------------------------------------------------------

@pytest.mark.parametrize("C", [Terminal(), PropAsSMC(FinSetProp()), FinSetCat()],
                         ids=lambda C: C.name)
def test_smc_axioms_small(C):
    report = check_smc_axioms(C, 1, 2)
    assert report.passed, report.render_text()


class SkewedRel(Rel):
    """The braiding on 2 x 2 is replaced by the identity."""
    name = "SkewedRel"

    def braiding(self, a, b):
        if a == b == Leaf(2):
            return self.identity(Tensor(a, b))
        return super().braiding(a, b)


def test_smc_axioms_catch_a_wrong_braiding():
    report = check_smc_axioms(SkewedRel(), 2, 1)
    assert not report.passed
    assert report.failures[0].witness
