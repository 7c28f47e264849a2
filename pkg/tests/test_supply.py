import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from supplycat import (
    SupplyRelationError, check_coherence_homomorphisms, check_supply, homomorphic_subcategory,
    is_homomorphism, make_supply, self_supply,
)
from supplycat.finset import FinFunction
from supplycat.props import Bijections, CospanProp, FinSetProp
from supplycat.props.presentations import comonoid
from supplycat.smc import UNIT, FinSetCat, Leaf, MatQ, NestedRel, Rel, Tensor, elements
from supplycat.supplies import (
    broken_supply, finsetcat_comonoid_supply, finsetcat_point_supply, frobenius_images,
    matq_rescaled_supply, matq_self_dual_supply, nested_rel_hypergraph_supply,
    rel_comonoid_supply_direct, rel_hypergraph_supply, terminal_supply,
)
from supplycat.supply import generator_name

ATOMS = [UNIT, Leaf(0), Leaf(1), Leaf(2)]
SMALL = [UNIT, Leaf(1), Leaf(2), Tensor(Leaf(2), Leaf(1))]


@pytest.mark.parametrize("make,objects,size", [
    (lambda: rel_hypergraph_supply(Rel(), 3), SMALL, 3),
    (lambda: nested_rel_hypergraph_supply(NestedRel(), 3), SMALL, 3),
    (lambda: rel_comonoid_supply_direct(Rel()), ATOMS, None),
    (lambda: finsetcat_comonoid_supply(FinSetCat()), ATOMS, None),
    (lambda: matq_self_dual_supply(MatQ()), [UNIT, Leaf(1), Leaf(2), Tensor(Leaf(2), Leaf(2))], 1),
    (lambda: matq_rescaled_supply(MatQ()), [UNIT, Leaf(1), Leaf(2), Leaf(3)], 1),
    (lambda: terminal_supply(), [UNIT], 3),
], ids=["rel-hypergraph", "nested-hypergraph", "rel-comonoid", "finsetcat-comonoid",
        "matq-self-dual", "matq-rescaled", "terminal"])
def test_supplies_pass(make, objects, size):
    s = make()
    report = check_supply(s, objects, 2, size, [o for o in objects if o in ATOMS or o == Leaf(3)])
    assert report.passed, report.render_text()


@pytest.mark.parametrize("prop,arity,bound", [(Bijections(), 3, None), (FinSetProp(), 3, None),
                                              (CospanProp(3), 2, 3)], ids=["B", "FinSet", "Cospan"])
def test_self_supply_passes(prop, arity, bound):
    report = check_supply(self_supply(prop, bound), range(4), arity, bound)
    assert report.passed, report.render_text()


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.data())
def test_self_supply_acts_strandwise(k, m, n, data):
    # wire (block i, strand r) of k^m goes to (block f(i), strand r) of k^n
    P = FinSetProp()
    if n == 0 and m:
        return
    f = data.draw(st.sampled_from(P.enumerate_hom(m, n)))
    got = self_supply(P).action(k, f)
    expected = tuple((f(i) - 1) * k + r for i in range(1, m + 1) for r in range(1, k + 1))
    assert got == FinFunction(m * k, n * k, expected)


def test_broken_supply_reports_the_counit():
    s = broken_supply(Rel())
    report = check_supply(s, ATOMS, 2, None)
    assert not report.passed
    named = [e.witness.get("mu_generator") for e in report.failures if e.witness]
    assert "epsilon" in named


def test_presentation_relations_are_checked_up_front():
    R = Rel()
    images = frobenius_images(R)
    bad = {"delta": images["delta"], "epsilon": lambda c: R.relation(c, UNIT, [])}
    with pytest.raises(SupplyRelationError) as err:
        make_supply(comonoid(), R, bad, "bad", check_objects=[Leaf(1)])
    assert err.value.obj == Leaf(1)
    # the honest images pass the same screening
    make_supply(comonoid(), R, images, "ok", check_objects=ATOMS)


def test_generator_names():
    P = rel_hypergraph_supply().prop
    assert generator_name(P, P.generator("delta")) == "delta"
    assert generator_name(P, P.identity(1)) is None
    # cup is a composite of Frobenius generators, but a generator of the self-dual prop
    assert generator_name(P, P.generator("cup")) is None
    D = matq_self_dual_supply().prop
    assert generator_name(D, D.generator("cup")) == "cup"


# -- homomorphisms against independent oracles ----------------------------------------------

def relation_on(draw, a, b):
    ea, eb = len(elements(a)), len(elements(b))
    return draw(st.sets(st.tuples(st.integers(0, ea - 1), st.integers(0, eb - 1)))) if ea and eb else set()


@given(st.sampled_from(ATOMS), st.sampled_from(ATOMS), st.data())
def test_comonoid_homomorphisms_are_functions(a, b, data):
    R = Rel()
    s = rel_comonoid_supply_direct(R)
    pairs = relation_on(data.draw, a, b)
    f = R.relation(a, b, pairs)
    functional = all(sum(1 for i, _ in pairs if i == x) == 1 for x in range(len(elements(a))))
    assert bool(is_homomorphism(s, f, 2, None)) == functional


def orthogonal_by_hand(rows):
    n = len(rows)
    t = [[rows[j][i] for j in range(n)] for i in range(n)]
    def mul(x, y):
        return [[sum((x[i][k] * y[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
                for i in range(n)]
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return mul(t, rows) == eye and mul(rows, t) == eye


PYTHAGOREAN = [Fraction(0), Fraction(1), Fraction(-1), Fraction(3, 5), Fraction(-3, 5),
               Fraction(4, 5), Fraction(-4, 5), Fraction(1, 2)]


@given(st.lists(st.sampled_from(PYTHAGOREAN), min_size=4, max_size=4))
def test_self_dual_homomorphisms_are_orthogonal(entries):
    M = MatQ()
    s = matq_self_dual_supply(M)
    rows = [entries[:2], entries[2:]]
    f = M.matrix(Leaf(2), Leaf(2), rows)
    assert bool(is_homomorphism(s, f, 2, 1)) == orthogonal_by_hand(rows)


def test_rotation_is_a_homomorphism_and_witness_names_cup_otherwise():
    M = MatQ()
    s = matq_self_dual_supply(M)
    rot = M.matrix(Leaf(2), Leaf(2), [[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]])
    assert is_homomorphism(s, rot, 2, 1)
    res = is_homomorphism(s, M.scale(M.identity(Leaf(2)), 2), 2, 1)
    assert not res and res.details["mu_generator"] in {"cup", "cap"}


@given(st.sampled_from([Leaf(1), Leaf(2), Leaf(3)]), st.sampled_from([Leaf(1), Leaf(2), Leaf(3)]),
       st.data())
def test_point_homomorphisms_fix_the_point(a, b, data):
    C = FinSetCat()
    s = finsetcat_point_supply(C)
    table = tuple(data.draw(st.lists(st.integers(0, int(b.label) - 1), min_size=int(a.label),
                                     max_size=int(a.label))))
    f = C.function(a, b, lambda x: elements(b)[table[elements(a).index(x)]])
    assert bool(is_homomorphism(s, f, 2, None)) == (table[0] == 0)


@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.data())
def test_every_function_is_a_comonoid_homomorphism(a, b, data):
    C = FinSetCat()
    s = finsetcat_comonoid_supply(C)
    f = data.draw(st.sampled_from(C.enumerate_hom(a, b))) if elements(b) or not elements(a) else None
    if f is not None:
        assert is_homomorphism(s, f, 2, None)


def test_homomorphic_subcategory_of_relations():
    R = Rel()
    s = rel_comonoid_supply_direct(R)
    res = homomorphic_subcategory(s, ATOMS, 2, None)
    assert res.report.passed, res.report.render_text()
    # functions between the atoms: sum over pairs of |b|^|a|
    sizes = [1, 0, 1, 2]
    assert len(res.homomorphisms) == sum(b ** a for a, b in itertools.product(sizes, repeat=2))
    assert all(not is_homomorphism(s, f, 2, None) for f in res.non_homomorphisms)


def test_coherence_homomorphisms_with_moving_associators():
    s = nested_rel_hypergraph_supply(NestedRel(), 3)
    report = check_coherence_homomorphisms(s, [UNIT, Leaf(1), Leaf(2)], 2, 3, True,
                                           [Leaf(1), Leaf(2)])
    assert report.passed, report.render_text()
    assert report.entry("nontrivial-associator").ok


def test_nontrivial_associator_demand_fails_when_strict():
    s = rel_hypergraph_supply(Rel(), 3)
    report = check_coherence_homomorphisms(s, [Leaf(1)], 1, 1, True)
    assert not report.entry("nontrivial-associator").ok
