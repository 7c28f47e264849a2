"""Matrices over the rationals, with the Kronecker product as tensor.

A matrix is an integer numerator array with one positive common
denominator, kept in lowest terms so that equality is exact.  Leaves are
dimensions ``>= 1``; a leaf of dimension 1 plays the part of the unit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np

from ..finset import CompositionError
from .base import SMC, UNIT, Leaf, ObjectExpr, Tensor, Unit, flat_reindexing, kron, trees

_SAFE = 1 << 62
_FLOAT_EXACT = 1 << 53


@lru_cache(maxsize=None)
def dim(x: ObjectExpr) -> int:
    if isinstance(x, Unit):
        return 1
    if isinstance(x, Leaf):
        return int(x.label)
    return dim(x.left) * dim(x.right)


def _normalize(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = -num, -den
    if den > 1:
        if num.dtype == object:
            g = math.gcd(den, *(int(v) for v in num.flat))
        else:
            g = math.gcd(den, int(np.gcd.reduce(num, axis=None)) if num.size else 0)
        if g > 1:
            num = num // g
            den //= g
    if num.dtype == object and _bound(num) < _SAFE:
        num = num.astype(np.int64)
    return num, den


def _bound(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a).max())


def _product_fits(a: np.ndarray, b: np.ndarray, terms: int) -> bool:
    return _bound(a) * _bound(b) * max(terms, 1) < _SAFE


@dataclass(frozen=True, eq=False)
class MatQMorphism:
    dom: ObjectExpr
    cod: ObjectExpr
    num: np.ndarray
    den: int = 1

    def __post_init__(self):
        num = np.asarray(self.num)
        if num.dtype != object:
            num = num.astype(np.int64)
        if num.shape != (dim(self.cod), dim(self.dom)):
            raise ValueError(f"matrix shape {num.shape} does not fit {self.dom} -> {self.cod}")
        num, den = _normalize(num, int(self.den))
        num.setflags(write=False)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_rows(cls, dom, cod, rows) -> "MatQMorphism":
        """Build from a nested list of ints or ``Fraction`` values."""
        fr = [[Fraction(v) for v in row] for row in rows]
        den = reduce(math.lcm, (v.denominator for row in fr for v in row), 1)
        num = np.array([[int(v * den) for v in row] for row in fr], dtype=object).reshape(
            dim(cod), dim(dom))
        return cls(dom, cod, num, den)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(int(self.num[i, j]), self.den)

    def rows(self) -> list[list[Fraction]]:
        return [[self.entry(i, j) for j in range(self.num.shape[1])] for i in range(self.num.shape[0])]

    def __eq__(self, other):
        if not isinstance(other, MatQMorphism):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod and self.den == other.den
                and np.array_equal(self.num, other.num))

    def __hash__(self):
        return hash((self.dom, self.cod, self.den, tuple(int(v) for v in self.num.flat)))

    def __str__(self):
        body = "\n".join(" ".join(str(v) for v in row) for row in self.rows())
        return f"{self.dom} -> {self.cod}\n{body}"


def _permutation_matrix(n_out: int, table: list[int]) -> np.ndarray:
    m = np.zeros((n_out, len(table)), dtype=np.int64)
    if table:
        m[table, range(len(table))] = 1
    return m


class MatQ(SMC):
    name = "MatQ"

    def matrix(self, dom, cod, rows) -> MatQMorphism:
        return MatQMorphism.from_rows(dom, cod, rows)

    def scale(self, f: MatQMorphism, q) -> MatQMorphism:
        q = Fraction(q)
        return MatQMorphism(f.dom, f.cod, f.num.astype(object) * q.numerator, f.den * q.denominator)

    def transpose(self, f: MatQMorphism) -> MatQMorphism:
        return MatQMorphism(f.cod, f.dom, f.num.T.copy(), f.den)

    def identity(self, a):
        return self._eye(a, a)

    def is_identity_like(self, f):
        n = f.num
        return n.shape[0] == n.shape[1] and f.den == 1 and np.array_equal(n, np.eye(n.shape[0]))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose: {f.cod} is not {g.dom}")
        a, b = g.num, f.num
        if a.dtype != object and b.dtype != object:
            bound = _bound(a) * _bound(b) * max(a.shape[1], 1)
        else:
            bound = _SAFE
        if bound < _FLOAT_EXACT:
            # every partial sum is an integer below 2**53, so BLAS is exact here
            num = (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        elif bound < _SAFE:
            num = a @ b
        else:
            num = a.astype(object).dot(b.astype(object))
        return MatQMorphism(f.dom, g.cod, num, f.den * g.den)

    def tensor(self, f, g):
        a, b = f.num, g.num
        if a.dtype != object and b.dtype != object and _product_fits(a, b, 1):
            num = kron(a, b)
        else:
            num = kron(a.astype(object), b.astype(object))
        return MatQMorphism(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), num, f.den * g.den)

    @lru_cache(maxsize=None)
    def _eye(self, dom, cod):
        return MatQMorphism(dom, cod, np.eye(dim(dom), dtype=np.int64))

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

    @lru_cache(maxsize=None)
    def braiding(self, a, b):
        """The commutation matrix sending ``e_i x e_j`` to ``e_j x e_i``."""
        na, nb = dim(a), dim(b)
        table = [j * na + i for i in range(na) for j in range(nb)]
        return MatQMorphism(Tensor(a, b), Tensor(b, a), _permutation_matrix(na * nb, table))

    def reindexing_iso(self, src, tgt, perm):
        src_of = flat_reindexing(src, tgt, perm, lambda x: dim(self.atom(x)))
        if src_of is None:
            return None
        num = np.zeros((len(src_of), len(src_of)), dtype=np.int64)
        num[np.arange(len(src_of)), src_of] = 1
        return MatQMorphism(self.eval_word(src), self.eval_word(tgt), num, 1)

    def enumerate_hom(self, a, b):
        """A fixed finite sample: zero, units, identity-like, and small integer matrices."""
        rows, cols = dim(b), dim(a)
        out = [MatQMorphism(a, b, np.zeros((rows, cols), dtype=np.int64))]
        for i in range(rows):
            for j in range(cols):
                m = np.zeros((rows, cols), dtype=np.int64)
                m[i, j] = 1
                out.append(MatQMorphism(a, b, m))
        ramp = np.arange(rows * cols, dtype=np.int64).reshape(rows, cols) - (rows * cols) // 2
        out.append(MatQMorphism(a, b, ramp, 2))
        if rows == cols:
            out.append(MatQMorphism(a, b, np.eye(rows, dtype=np.int64)))
        return list(dict.fromkeys(out))

    def sample_objects(self, max_leaf, max_depth):
        atoms = [UNIT] + [Leaf(d) for d in range(1, max_leaf + 1)]
        return trees(atoms, max_depth)

    def render(self, f):
        return str(f)
