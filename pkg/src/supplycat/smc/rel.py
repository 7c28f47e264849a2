"""Relations between finite sets, in two models, and finite functions.

* ``Rel`` stores a relation ``a -> b`` as a boolean matrix of shape
  ``size(b) x size(a)`` over row-major flattened indices, so associators
  and unitors are identity matrices.
* ``NestedRel`` stores the set of pairs of nested tuples, so that
  ``((x, y), z)`` and ``(x, (y, z))`` are different elements and every
  associator is a genuine non-identity morphism.
* ``FinSetCat`` holds the total functions, as index tables.

Leaves are finite sets given by their size; ``Leaf(0)`` is the empty set.
Elements of ``Leaf(n)`` are ``1..n`` and the unit has the single element ``()``.
"""
from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..finset import CompositionError
from .base import SMC, UNIT, Leaf, ObjectExpr, Tensor, Unit, flat_reindexing, kron, trees

FULL_ENUMERATION_CELLS = 9
SAMPLE_SIZE = 24


@lru_cache(maxsize=None)
def size(x: ObjectExpr) -> int:
    if isinstance(x, Unit):
        return 1
    if isinstance(x, Leaf):
        return int(x.label)
    return size(x.left) * size(x.right)


@lru_cache(maxsize=None)
def elements(x: ObjectExpr) -> tuple:
    """Nested-tuple elements in row-major order."""
    if isinstance(x, Unit):
        return ((),)
    if isinstance(x, Leaf):
        return tuple(range(1, int(x.label) + 1))
    return tuple((p, q) for p in elements(x.left) for q in elements(x.right))


@lru_cache(maxsize=None)
def element_index(x: ObjectExpr) -> dict:
    return {e: i for i, e in enumerate(elements(x))}


def finite_set_objects(max_leaf: int, max_depth: int) -> list[ObjectExpr]:
    atoms = [UNIT] + [Leaf(n) for n in range(max_leaf + 1)]
    return trees(atoms, max_depth)


def _seed(*parts) -> int:
    return zlib.crc32("|".join(map(str, parts)).encode())


def _require(f_cod, g_dom):
    if f_cod != g_dom:
        raise CompositionError(f"cannot compose: {f_cod} is not {g_dom}")


def _braid_table(a, b) -> list[int]:
    """Flat index of ``(y, x)`` in ``b x a`` for each flat ``(x, y)`` in ``a x b``."""
    na, nb = size(a), size(b)
    return [y * na + x for x in range(na) for y in range(nb)]


# -- boolean matrices --------------------------------------------------------

def bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product.  Path counts stay far below 2**24, so float32 BLAS is exact."""
    if a.shape[1] <= 16:
        return a @ b
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0


@dataclass(frozen=True, eq=False)
class RelMorphism:
    dom: ObjectExpr
    cod: ObjectExpr
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        if m.shape != (size(self.cod), size(self.dom)):
            raise ValueError(f"matrix shape {m.shape} does not fit {self.dom} -> {self.cod}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other):
        if not isinstance(other, RelMorphism):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((self.dom, self.cod, self.matrix.tobytes()))

    @classmethod
    def trusted(cls, dom, cod, matrix) -> "RelMorphism":
        """Skip validation; for matrices computed from valid morphisms."""
        out = object.__new__(cls)
        object.__setattr__(out, "dom", dom)
        object.__setattr__(out, "cod", cod)
        object.__setattr__(out, "matrix", matrix)
        return out

    def pairs(self) -> set[tuple[int, int]]:
        """``(i, j)`` flat index pairs, 0-based, with ``i`` in the domain."""
        return {(int(i), int(j)) for j, i in zip(*np.nonzero(self.matrix))}

    def __str__(self):
        rows = [" ".join("1" if v else "0" for v in row) for row in self.matrix]
        body = "\n".join(rows) if rows else "(no rows)"
        return f"{self.dom} -> {self.cod}\n{body}"


class Rel(SMC):
    name = "Rel"

    def __init__(self, seed: int = 0):
        self.seed = seed

    def relation(self, dom, cod, pairs) -> RelMorphism:
        m = np.zeros((size(cod), size(dom)), dtype=bool)
        for i, j in pairs:
            m[j, i] = True
        return RelMorphism(dom, cod, m)

    def _perm(self, dom, cod, table) -> RelMorphism:
        m = np.zeros((size(cod), size(dom)), dtype=bool)
        if table:
            m[table, range(len(table))] = True
        return RelMorphism(dom, cod, m)

    @lru_cache(maxsize=None)
    def _eye(self, dom, cod):
        return RelMorphism(dom, cod, np.eye(size(dom), dtype=bool))

    def identity(self, a):
        return self._eye(a, a)

    def compose(self, f, g):
        _require(f.cod, g.dom)
        return RelMorphism.trusted(f.dom, g.cod, bool_product(g.matrix, f.matrix))

    def tensor(self, f, g):
        return RelMorphism.trusted(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod),
                                   kron(f.matrix, g.matrix))

    def associator(self, a, b, c):
        return self._eye(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)))

    def associator_inv(self, a, b, c):
        return self._eye(Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c))

    def left_unitor(self, a):
        return self._eye(Tensor(UNIT, a), a)

    def left_unitor_inv(self, a):
        return self._eye(a, Tensor(UNIT, a))

    def right_unitor(self, a):
        return self._eye(Tensor(a, UNIT), a)

    def right_unitor_inv(self, a):
        return self._eye(a, Tensor(a, UNIT))

    def is_identity_like(self, f):
        m = f.matrix
        return m.shape[0] == m.shape[1] and np.array_equal(m, np.eye(m.shape[0], dtype=bool))

    @lru_cache(maxsize=None)
    def braiding(self, a, b):
        return self._perm(Tensor(a, b), Tensor(b, a), _braid_table(a, b))

    def reindexing_iso(self, src, tgt, perm):
        src_of = flat_reindexing(src, tgt, perm, lambda x: size(self.atom(x)))
        if src_of is None:
            return None
        m = np.zeros((len(src_of), len(src_of)), dtype=bool)
        m[np.arange(len(src_of)), src_of] = True
        m.setflags(write=False)
        return RelMorphism.trusted(self.eval_word(src), self.eval_word(tgt), m)

    def enumerate_hom(self, a, b):
        rows, cols = size(b), size(a)
        cells = rows * cols
        if cells <= FULL_ENUMERATION_CELLS:
            out = []
            for bits in itertools.product((False, True), repeat=cells):
                out.append(RelMorphism(a, b, np.array(bits, dtype=bool).reshape(rows, cols)))
            return out
        rng = np.random.default_rng(_seed(self.seed, a, b))
        picks = [np.zeros((rows, cols), bool), np.ones((rows, cols), bool)]
        picks += [rng.random((rows, cols)) < 0.5 for _ in range(SAMPLE_SIZE)]
        return list(dict.fromkeys(RelMorphism(a, b, m) for m in picks))

    def sample_objects(self, max_leaf, max_depth):
        return finite_set_objects(max_leaf, max_depth)


# -- sets of nested-tuple pairs ----------------------------------------------

@dataclass(frozen=True)
class NestedRelMorphism:
    dom: ObjectExpr
    cod: ObjectExpr
    pairs: frozenset

    def __str__(self):
        body = " ".join(f"{x}~{y}" for x, y in sorted(self.pairs, key=repr))
        return f"{self.dom} -> {self.cod} {{{body}}}"


class NestedRel(SMC):
    name = "NestedRel"

    def __init__(self, seed: int = 0):
        self.seed = seed

    def relation(self, dom, cod, pairs) -> NestedRelMorphism:
        el_d, el_c = set(elements(dom)), set(elements(cod))
        pairs = frozenset(pairs)
        for x, y in pairs:
            if x not in el_d or y not in el_c:
                raise ValueError(f"pair {(x, y)} outside {dom} x {cod}")
        return NestedRelMorphism(dom, cod, pairs)

    def identity(self, a):
        return NestedRelMorphism(a, a, frozenset((x, x) for x in elements(a)))

    def is_identity_like(self, f):
        return len(f.pairs) == size(f.dom) == size(f.cod) and all(x == y for x, y in f.pairs)

    def compose(self, f, g):
        _require(f.cod, g.dom)
        succ: dict = {}
        for y, z in g.pairs:
            succ.setdefault(y, []).append(z)
        return NestedRelMorphism(f.dom, g.cod, frozenset(
            (x, z) for x, y in f.pairs for z in succ.get(y, ())))

    def tensor(self, f, g):
        return NestedRelMorphism(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), frozenset(
            ((x1, x2), (y1, y2)) for x1, y1 in f.pairs for x2, y2 in g.pairs))

    def associator(self, a, b, c):
        return NestedRelMorphism(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)), frozenset(
            (((x, y), z), (x, (y, z)))
            for x in elements(a) for y in elements(b) for z in elements(c)))

    def associator_inv(self, a, b, c):
        f = self.associator(a, b, c)
        return NestedRelMorphism(f.cod, f.dom, frozenset((y, x) for x, y in f.pairs))

    def left_unitor(self, a):
        return NestedRelMorphism(Tensor(UNIT, a), a, frozenset((((), x), x) for x in elements(a)))

    def left_unitor_inv(self, a):
        return NestedRelMorphism(a, Tensor(UNIT, a), frozenset((x, ((), x)) for x in elements(a)))

    def right_unitor(self, a):
        return NestedRelMorphism(Tensor(a, UNIT), a, frozenset(((x, ()), x) for x in elements(a)))

    def right_unitor_inv(self, a):
        return NestedRelMorphism(a, Tensor(a, UNIT), frozenset((x, (x, ())) for x in elements(a)))

    def braiding(self, a, b):
        return NestedRelMorphism(Tensor(a, b), Tensor(b, a), frozenset(
            ((x, y), (y, x)) for x in elements(a) for y in elements(b)))

    def enumerate_hom(self, a, b):
        grid = [(x, y) for y in elements(b) for x in elements(a)]
        if len(grid) <= FULL_ENUMERATION_CELLS:
            return [NestedRelMorphism(a, b, frozenset(p for p, keep in zip(grid, bits) if keep))
                    for bits in itertools.product((False, True), repeat=len(grid))]
        rng = np.random.default_rng(_seed(self.seed, a, b))
        picks = [frozenset(), frozenset(grid)]
        for _ in range(SAMPLE_SIZE):
            mask = rng.random(len(grid)) < 0.5
            picks.append(frozenset(p for p, keep in zip(grid, mask) if keep))
        return [NestedRelMorphism(a, b, p) for p in dict.fromkeys(picks)]

    def sample_objects(self, max_leaf, max_depth):
        return finite_set_objects(max_leaf, max_depth)


def flatten_relation(f: NestedRelMorphism) -> RelMorphism:
    """The boolean matrix of a nested relation, over row-major indices."""
    di, ci = element_index(f.dom), element_index(f.cod)
    m = np.zeros((size(f.cod), size(f.dom)), dtype=bool)
    for x, y in f.pairs:
        m[ci[y], di[x]] = True
    return RelMorphism(f.dom, f.cod, m)


def nest_relation(f: RelMorphism) -> NestedRelMorphism:
    de, ce = elements(f.dom), elements(f.cod)
    return NestedRelMorphism(f.dom, f.cod, frozenset((de[i], ce[j]) for i, j in f.pairs()))


# -- total functions -----------------------------------------------------------

@dataclass(frozen=True)
class FunctionMorphism:
    """A function on flat 0-based indices: ``table[i]`` is the image of element ``i``."""

    dom: ObjectExpr
    cod: ObjectExpr
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != size(self.dom) or any(not 0 <= t < size(self.cod) for t in self.table):
            raise ValueError(f"table {self.table} is not a function {self.dom} -> {self.cod}")

    def __str__(self):
        de, ce = elements(self.dom), elements(self.cod)
        body = " ".join(f"{de[i]}>{ce[t]}" for i, t in enumerate(self.table))
        return f"{self.dom} -> {self.cod} [{body}]"


class FinSetCat(SMC):
    """Finite sets and functions, with the cartesian product as tensor."""

    name = "FinSetCat"

    def __init__(self, seed: int = 0, max_enumeration: int = 512):
        self.seed = seed
        self.max_enumeration = max_enumeration

    def function(self, dom, cod, fn) -> FunctionMorphism:
        """Build from a map on nested-tuple elements."""
        ci = element_index(cod)
        return FunctionMorphism(dom, cod, tuple(ci[fn(x)] for x in elements(dom)))

    def identity(self, a):
        return FunctionMorphism(a, a, tuple(range(size(a))))

    def is_identity_like(self, f):
        return size(f.dom) == size(f.cod) and f.table == tuple(range(size(f.dom)))

    def compose(self, f, g):
        _require(f.cod, g.dom)
        return FunctionMorphism(f.dom, g.cod, tuple(g.table[t] for t in f.table))

    def tensor(self, f, g):
        n2 = size(g.cod)
        return FunctionMorphism(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), tuple(
            s * n2 + t for s in f.table for t in g.table))

    def associator(self, a, b, c):
        n = size(a) * size(b) * size(c)
        return FunctionMorphism(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)), tuple(range(n)))

    def associator_inv(self, a, b, c):
        n = size(a) * size(b) * size(c)
        return FunctionMorphism(Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c), tuple(range(n)))

    def left_unitor(self, a):
        return FunctionMorphism(Tensor(UNIT, a), a, tuple(range(size(a))))

    def left_unitor_inv(self, a):
        return FunctionMorphism(a, Tensor(UNIT, a), tuple(range(size(a))))

    def right_unitor(self, a):
        return FunctionMorphism(Tensor(a, UNIT), a, tuple(range(size(a))))

    def right_unitor_inv(self, a):
        return FunctionMorphism(a, Tensor(a, UNIT), tuple(range(size(a))))

    def braiding(self, a, b):
        return FunctionMorphism(Tensor(a, b), Tensor(b, a), tuple(_braid_table(a, b)))

    def reindexing_iso(self, src, tgt, perm):
        src_of = flat_reindexing(src, tgt, perm, lambda x: size(self.atom(x)))
        if src_of is None:
            return None
        table = [0] * len(src_of)
        for t, s in enumerate(src_of):
            table[s] = t
        return FunctionMorphism(self.eval_word(src), self.eval_word(tgt), tuple(table))

    def enumerate_hom(self, a, b):
        na, nb = size(a), size(b)
        if nb ** na <= self.max_enumeration:
            return [FunctionMorphism(a, b, t) for t in itertools.product(range(nb), repeat=na)]
        rng = np.random.default_rng(_seed(self.seed, a, b))
        picks = [tuple(int(v) for v in rng.integers(0, nb, na)) for _ in range(SAMPLE_SIZE)]
        return [FunctionMorphism(a, b, t) for t in dict.fromkeys(picks)]

    def sample_objects(self, max_leaf, max_depth):
        return finite_set_objects(max_leaf, max_depth)


def function_as_relation(f: FunctionMorphism) -> RelMorphism:
    m = np.zeros((size(f.cod), size(f.dom)), dtype=bool)
    if f.table:
        m[list(f.table), range(len(f.table))] = True
    return RelMorphism(f.dom, f.cod, m)


def function_as_nested(f: FunctionMorphism) -> NestedRelMorphism:
    de, ce = elements(f.dom), elements(f.cod)
    return NestedRelMorphism(f.dom, f.cod, frozenset((de[i], ce[t]) for i, t in enumerate(f.table)))
