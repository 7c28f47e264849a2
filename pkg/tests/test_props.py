import itertools
from math import prod

import pytest
from hypothesis import given, strategies as st

from supplycat.finset import FinFunction, Permutation, identity_fn
from supplycat.props import (
    ArityError, Bijections, CobMorphism, CobProp, CospanMorphism, CospanProp, FinSetProp,
    Injections, Involutions, PresentationSyntaxError, check_presentation_functor,
    check_prop_axioms, cob_to_cospan, cospan_canonical_form, eval_prop_term, finset_op,
    injections_op, parse_presentation,
)
from supplycat.props.cob import perfect_matchings
from supplycat.props.cospan import cospan_identity, raw_cospans, relabel_apex
from supplycat.props.presentations import frobenius, monoid, self_dual


def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def port_partition(f: CospanMorphism):
    """Ports grouped by apex element, forgetting apex names, plus the floating count."""
    ports = [("L", i) for i in range(f.dom)] + [("R", j) for j in range(f.cod)]
    images = list(f.left) + list(f.right)
    blocks = {}
    for p, e in zip(ports, images):
        blocks.setdefault(e, set()).add(p)
    return frozenset(frozenset(b) for b in blocks.values()), f.apex - len(blocks)


def compose_by_components(f: CospanMorphism, g: CospanMorphism):
    """Brute-force pushout: components of the apex graph glued along the middle."""
    nodes = [("f", e) for e in range(1, f.apex + 1)] + [("g", e) for e in range(1, g.apex + 1)]
    comp = {v: v for v in nodes}

    def find(v):
        while comp[v] != v:
            v = comp[v]
        return v

    for a, b in zip(f.right, g.left):
        ra, rb = find(("f", a)), find(("g", b))
        if ra != rb:
            comp[rb] = ra
    ports = [("L", i) for i in range(f.dom)] + [("R", j) for j in range(g.cod)]
    roots = [find(("f", e)) for e in f.left] + [find(("g", e)) for e in g.right]
    blocks = {}
    for p, r in zip(ports, roots):
        blocks.setdefault(r, set()).add(p)
    all_roots = {find(v) for v in nodes}
    return frozenset(frozenset(b) for b in blocks.values()), len(all_roots) - len(blocks)


@st.composite
def cospans(draw, dom=None, cod=None, apex_max=3):
    m = draw(st.integers(0, 3)) if dom is None else dom
    n = draw(st.integers(0, 3)) if cod is None else cod
    apex = draw(st.integers(1 if m + n else 0, apex_max))
    left = tuple(draw(st.lists(st.integers(1, apex), min_size=m, max_size=m))) if apex else ()
    right = tuple(draw(st.lists(st.integers(1, apex), min_size=n, max_size=n))) if apex else ()
    return cospan_canonical_form(FinFunction(m, apex, left), FinFunction(n, apex, right))


# -- hom-set sizes --------------------------------------------------------------------------

@pytest.mark.parametrize("m,n,bound", [(0, 0, 2), (1, 1, 2), (2, 1, 3), (2, 2, 4), (3, 1, 4)])
def test_cospan_hom_sizes(m, n, bound):
    # each partition of the m+n ports into b blocks, with 0..bound-b floating points
    expected = sum(stirling2(m + n, b) * (bound - b + 1) for b in range(0, bound + 1)
                   if stirling2(m + n, b))
    assert len(CospanProp(bound).enumerate_hom(m, n, bound)) == expected


def test_cospan_hom_size_frozen():
    assert len(CospanProp(4).enumerate_hom(2, 2, 4)) == 38
    assert len(CospanProp(3).enumerate_hom(1, 1, 3)) == 5


@pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 0), (2, 2), (3, 1), (2, 1)])
def test_cob_hom_sizes(m, n):
    ports = m + n
    matchings = 0 if ports % 2 else prod(range(ports - 1, 0, -2))
    assert len(CobProp(0).enumerate_hom(m, n, 0)) == matchings
    assert len(CobProp(1).enumerate_hom(m, n, 1)) == 2 * matchings


def test_other_hom_sizes():
    assert len(FinSetProp().enumerate_hom(3, 2)) == 8
    assert len(Injections().enumerate_hom(2, 3)) == 6
    assert len(Bijections().enumerate_hom(3, 3)) == 6
    assert Bijections().enumerate_hom(2, 3) == []
    # permutations with a flag per wire
    assert len(Involutions().enumerate_hom(3, 3)) == 6 * 8
    assert len(finset_op().enumerate_hom(2, 3)) == 8


def test_perfect_matchings_are_involutions():
    for size in range(0, 7, 2):
        ms = list(perfect_matchings(size))
        assert len(set(ms)) == len(ms) == prod(range(size - 1, 0, -2))
    assert list(perfect_matchings(3)) == []


# -- composition ----------------------------------------------------------------------------

@given(st.data())
def test_cospan_compose_matches_components(data):
    f = data.draw(cospans())
    g = data.draw(cospans(dom=f.cod))
    h = CospanProp().compose(f, g)
    assert port_partition(h) == compose_by_components(f, g)


@given(st.data())
def test_cospan_canonical_form_ignores_apex_names(data):
    f = data.draw(cospans())
    perm = data.draw(st.permutations(list(range(1, f.apex + 1))))
    left, right = relabel_apex(f, tuple(perm))
    assert cospan_canonical_form(left, right) == f


def test_raw_cospans_collapse_to_canonical_forms():
    classes = {cospan_canonical_form(l, r) for l, r in raw_cospans(2, 1, 2)}
    exact = [f for f in CospanProp(2).enumerate_hom(2, 1, 2) if f.apex == 2]
    assert classes == set(exact)


@given(st.data())
def test_cospan_associativity_and_interchange(data):
    P = CospanProp()
    f = data.draw(cospans())
    g = data.draw(cospans(dom=f.cod))
    h = data.draw(cospans(dom=g.cod))
    assert P.compose(P.compose(f, g), h) == P.compose(f, P.compose(g, h))
    f2 = data.draw(cospans())
    g2 = data.draw(cospans(dom=f2.cod))
    lhs = P.compose(P.monoidal_sum(f, f2), P.monoidal_sum(g, g2))
    assert lhs == P.monoidal_sum(P.compose(f, g), P.compose(f2, g2))


def compose_by_strands(f: CobMorphism, g: CobMorphism):
    """Follow strands through the glued middle; closed ones become circles."""
    m, k, n = f.dom, f.cod, g.cod
    adj = {}
    edges = [(("in", p) if p <= m else ("mid", p - m), ("in", q) if q <= m else ("mid", q - m))
             for p, q in f.pairs()]
    edges += [(("mid", p) if p <= k else ("out", p - k), ("mid", q) if q <= k else ("out", q - k))
              for p, q in g.pairs()]
    for eid, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    used = set()

    def walk(start):
        cur, came = start, None
        while True:
            step = [(v, e) for v, e in adj[cur] if e != came]
            if not step:
                return cur
            (cur, came), = step[:1]
            used.add(came)
            if cur[0] != "mid":
                return cur

    ends = set()
    for start in [("in", i) for i in range(1, m + 1)] + [("out", j) for j in range(1, n + 1)]:
        ends.add(frozenset({start, walk(start)}))
    circles = 0
    for eid, (u, v) in enumerate(edges):
        if eid in used:
            continue
        circles += 1
        cur, came = v, eid
        used.add(eid)
        while cur != u:
            (cur, came), = [(w, e) for w, e in adj[cur] if e != came]
            used.add(came)
    return frozenset(ends), circles + f.circles + g.circles


def cob_shape(h: CobMorphism):
    def port(p):
        return ("in", p) if p <= h.dom else ("out", p - h.dom)
    return frozenset(frozenset({port(p), port(q)}) for p, q in h.pairs()), h.circles


@given(st.data())
def test_cob_compose_matches_strands(data):
    P = CobProp(1)
    m, k, n = (data.draw(st.integers(0, 3)) for _ in range(3))
    fs, gs = P.enumerate_hom(m, k, 1), P.enumerate_hom(k, n, 1)
    if not fs or not gs:
        return
    f, g = data.draw(st.sampled_from(fs)), data.draw(st.sampled_from(gs))
    assert cob_shape(P.compose(f, g)) == compose_by_strands(f, g)


def test_snake_in_cob_and_circle():
    P = CobProp()
    cup, cap = P.generator("cup"), P.generator("cap")
    snake = P.compose(P.monoidal_sum(P.identity(1), cup), P.monoidal_sum(cap, P.identity(1)))
    assert P.equal(snake, P.identity(1))
    circle = P.compose(cup, cap)
    assert circle.circles == 1 and circle.dom == circle.cod == 0


def test_cob_to_cospan_sends_circle_to_floating_point():
    P = CobProp()
    circle = P.compose(P.generator("cup"), P.generator("cap"))
    assert cob_to_cospan(circle) == CospanMorphism(0, 0, 1, (), ())


def test_involution_squares_to_identity():
    P = Involutions()
    i = P.generator("i")
    assert P.equal(P.compose(i, i), P.identity(1))
    two = P.monoidal_sum(i, P.identity(1))
    assert P.compose(P.braiding(1, 1), two).flags == (False, True)


def test_op_prop_reverses_composition():
    P = finset_op()
    delta, eps = P.generator("delta"), P.generator("epsilon")
    assert (P.dom(delta), P.cod(delta)) == (1, 2)
    counit = P.compose(delta, P.monoidal_sum(eps, P.identity(1)))
    assert P.equal(counit, P.identity(1))


# -- decomposition into generators ------------------------------------------------------------

PROPS = [
    (Bijections(), 3, None), (FinSetProp(), 3, None), (Injections(), 3, None),
    (finset_op(), 3, None), (injections_op(), 3, None), (Involutions(), 3, None),
    (CospanProp(3), 2, 3), (CobProp(1), 3, 1),
]


@pytest.mark.parametrize("prop,arity,bound", PROPS, ids=lambda x: getattr(x, "name", None))
def test_decompose_evaluates_back(prop, arity, bound):
    if not isinstance(prop, (Bijections,)) and prop.presentation is None:
        pytest.skip("no presentation")
    images = {name: prop.generator(name) for name in prop.presentation.generators}
    for m, n in itertools.product(range(arity + 1), repeat=2):
        for f in prop.enumerate_hom(m, n, bound):
            term = prop.decompose(f)
            assert (term.dom, term.cod) == (m, n)
            assert prop.equal(eval_prop_term(term, prop, images), f), f


# -- axioms ----------------------------------------------------------------------------------

@pytest.mark.parametrize("prop,bound", [(Bijections(), None), (Involutions(), None),
                                        (FinSetProp(), None), (Injections(), None),
                                        (CospanProp(3), 3), (CobProp(1), 1)],
                         ids=lambda x: getattr(x, "name", None))
def test_prop_axioms_small(prop, bound):
    report = check_prop_axioms(prop, 2, bound)
    assert report.passed, report.render_text()


class UnbraidedFinSet(FinSetProp):
    """Identity in place of the braiding: symmetric, but not natural."""
    name = "unbraided"

    def braiding(self, m, n):
        return self.identity(m + n)


def test_prop_axioms_catch_a_broken_braiding():
    report = check_prop_axioms(UnbraidedFinSet(), 2)
    assert not report.passed
    assert report.failures[0].witness


# -- presentations ---------------------------------------------------------------------------

def test_presentation_sizes():
    assert [len(p.generators) for p in (monoid(), frobenius(), self_dual())] == [2, 4, 2]
    assert [len(p.relations) for p in (monoid(), frobenius(), self_dual())] == [3, 9, 4]


@pytest.mark.parametrize("pres", [monoid(), frobenius(), self_dual()], ids=lambda p: p.name)
def test_presentation_text_round_trip(pres):
    again = parse_presentation(pres.to_text(), pres.name)
    assert again.to_text() == pres.to_text()


def test_presentation_syntax_errors():
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gen mu 2\n")
    with pytest.raises(PresentationSyntaxError):
        parse_presentation("gen mu 2 1\nrel comp mu = \n")
    with pytest.raises((ArityError, PresentationSyntaxError)):
        parse_presentation("gen mu 2 1\nrel comp mu mu = mu\n")


def test_standard_presentations_hold():
    fs, cs = FinSetProp(), CospanProp(4)
    assert check_presentation_functor(monoid(), fs, {"mu": fs.generator("mu"),
                                                     "eta": fs.generator("eta")}).passed
    images = {g: cs.generator(g) for g in ("mu", "eta", "delta", "epsilon")}
    assert check_presentation_functor(frobenius(), cs, images).passed
    assert check_presentation_functor(self_dual(), cs, {"cup": cs.generator("cup"),
                                                        "cap": cs.generator("cap")}).passed


def test_self_dual_snakes_are_identity_cospans():
    cs = CospanProp(4)
    images = {"cup": cs.generator("cup"), "cap": cs.generator("cap")}
    for rel in self_dual().relations[2:]:
        assert eval_prop_term(rel.lhs, cs, images) == cospan_identity(1)


def test_corrupted_cup_is_reported():
    cs = CospanProp(4)
    bad = CospanMorphism(0, 2, 2, (), (1, 2))
    report = check_presentation_functor(self_dual(), cs, {"cup": bad, "cap": cs.generator("cap")})
    assert not report.passed
    assert all(e.witness for e in report.failures)


def test_wrong_arity_image_is_reported():
    fs = FinSetProp()
    report = check_presentation_functor(monoid(), fs, {"mu": fs.identity(1), "eta": fs.generator("eta")})
    assert not report.entry("generator/mu").ok


def test_permutations_agree_with_braidings():
    for P in (Bijections(), FinSetProp(), CospanProp(), CobProp(), Involutions()):
        assert P.equal(P.permutation(Permutation([2, 1])), P.braiding(1, 1))
        assert P.equal(P.permutation(identity_fn(3)), P.identity(3))
