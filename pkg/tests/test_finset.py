import itertools
import math

import pytest
from hypothesis import given, strategies as st

from supplycat.finset import (
    CompositionError, FinFunction, Permutation, as_permutation, block_braiding, compose_fn,
    enumerate_functions, enumerate_permutations, grid_transpose, identity_fn, pushout, tensor_fn,
)


@st.composite
def functions(draw, dom=None, cod=None):
    m = draw(st.integers(0, 4)) if dom is None else dom
    n = draw(st.integers(1 if m else 0, 4)) if cod is None else cod
    table = draw(st.lists(st.integers(1, n), min_size=m, max_size=m)) if n else []
    return FinFunction(m, n, tuple(table))


@st.composite
def composable(draw):
    f = draw(functions())
    g = draw(functions(dom=f.cod))
    return f, g


def components(b, c, f, g):
    """Connected components of the bipartite graph joining f(i) and g(i); brute force."""
    nodes = [("b", i) for i in range(1, b + 1)] + [("c", j) for j in range(1, c + 1)]
    adj = {v: set() for v in nodes}
    for x, y in zip(f, g):
        adj[("b", x)].add(("c", y))
        adj[("c", y)].add(("b", x))
    seen, comps = {}, 0
    for v in nodes:
        if v in seen:
            continue
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen[u] = comps
            stack.extend(adj[u])
        comps += 1
    return comps, seen


def test_table_validation():
    with pytest.raises(ValueError):
        FinFunction(2, 1, (1, 2))
    with pytest.raises(ValueError):
        FinFunction(2, 2, (1,))
    with pytest.raises(ValueError):
        Permutation([1, 1])


def test_compose_rejects_mismatch():
    with pytest.raises(CompositionError):
        compose_fn(FinFunction(1, 2, (1,)), FinFunction(3, 1, (1, 1, 1)))


@given(composable())
def test_compose_matches_pointwise(fg):
    f, g = fg
    h = compose_fn(f, g)
    assert all(h(i) == g(f(i)) for i in range(1, f.dom + 1))


@given(functions(), functions())
def test_tensor_is_disjoint_union(f, g):
    h = tensor_fn(f, g)
    assert h.table[:f.dom] == f.table
    assert [e - f.cod for e in h.table[f.dom:]] == list(g.table)


@given(functions())
def test_identity_units(f):
    assert compose_fn(identity_fn(f.dom), f) == f
    assert compose_fn(f, identity_fn(f.cod)) == f


def test_enumeration_counts():
    for m, n in itertools.product(range(4), repeat=2):
        fs = enumerate_functions(m, n)
        assert len(fs) == n ** m
        assert len(set(fs)) == len(fs)
    for n in range(5):
        assert len(enumerate_permutations(n)) == math.factorial(n)


def test_block_braiding_values():
    assert block_braiding(2, 1).table == (2, 3, 1)
    assert block_braiding(1, 2).table == (3, 1, 2)
    assert block_braiding(0, 3) == identity_fn(3)


def test_grid_transpose_values():
    assert grid_transpose(2, 3).table == (1, 3, 5, 2, 4, 6)
    assert grid_transpose(1, 4) == identity_fn(4)


@given(st.integers(0, 4), st.integers(0, 4))
def test_grid_transpose_inverse(r, c):
    assert compose_fn(grid_transpose(r, c), grid_transpose(c, r)) == identity_fn(r * c)


@given(st.integers(0, 4), st.integers(0, 4))
def test_block_braiding_inverse(m, n):
    assert compose_fn(block_braiding(m, n), block_braiding(n, m)) == identity_fn(m + n)


@given(st.permutations(list(range(1, 6))))
def test_permutation_inverse(table):
    p = Permutation(table)
    assert compose_fn(p, p.inverse()) == identity_fn(5)
    assert as_permutation(FinFunction(5, 5, tuple(table))) == p


@given(st.data())
def test_pushout_against_components(data):
    a = data.draw(st.integers(0, 4))
    b = data.draw(st.integers(1, 4))
    c = data.draw(st.integers(1, 4))
    f = data.draw(functions(dom=a, cod=b))
    g = data.draw(functions(dom=a, cod=c))
    res = pushout(f, g)
    comps, label = components(b, c, f.table, g.table)
    assert res.apex == comps
    # the square commutes
    assert compose_fn(f, res.left_leg) == compose_fn(g, res.right_leg)
    # two points are identified exactly when they are connected
    tagged = [("b", i, res.left_leg(i)) for i in range(1, b + 1)]
    tagged += [("c", j, res.right_leg(j)) for j in range(1, c + 1)]
    for (s1, i1, k1), (s2, i2, k2) in itertools.combinations(tagged, 2):
        assert (k1 == k2) == (label[(s1, i1)] == label[(s2, i2)])


def test_pushout_example():
    # two points of b glued through one point of c
    res = pushout(FinFunction(2, 3, (1, 3)), FinFunction(2, 1, (1, 1)))
    assert res.apex == 2
    assert res.left_leg.table == (1, 2, 1)
    assert res.right_leg.table == (1,)
