"""Object expressions and the interface of a (non-strict) symmetric monoidal category."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Union

import numpy as np


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "I"


@dataclass(frozen=True)
class Leaf:
    label: Hashable

    def __str__(self):
        return str(self.label)


_TENSORS: dict = {}


@dataclass(frozen=True, eq=False, init=False)
class Tensor:
    left: "ObjectExpr"
    right: "ObjectExpr"

    def __new__(cls, left, right):
        # hash-consed, so equal trees are usually the same object and cache
        # lookups on deep trees do not recurse
        key = (left, right)
        out = _TENSORS.get(key)
        if out is None:
            out = object.__new__(cls)
            object.__setattr__(out, "left", left)
            object.__setattr__(out, "right", right)
            object.__setattr__(out, "_hash", hash(key))
            _TENSORS[key] = out
        return out

    def __init__(self, left, right):
        pass

    def __getnewargs__(self):
        return (self.left, self.right)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tensor):
            return NotImplemented
        if hash(self) != hash(other):
            return False
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"({self.left} x {self.right})"


ObjectExpr = Union[Unit, Leaf, Tensor]
UNIT = Unit()


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2-d arrays, row-major like ``np.kron``."""
    (r1, c1), (r2, c2) = a.shape, b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(r1 * r2, c1 * c2)


def flat_reindexing(src: ObjectExpr, tgt: ObjectExpr, perm, size_of) -> np.ndarray | None:
    """Source flat index for each target flat index of the canonical iso ``src -> tgt``.

    Valid where products flatten row-major over atoms in order, so that
    bracketing never moves an element.  ``perm`` is 1-based (``None`` for
    the identity); returns None if the atoms of ``tgt`` are not those of
    ``src`` rearranged by ``perm``.
    """
    a, b = leaves(src), leaves(tgt)
    n = len(a)
    if len(b) != n:
        return None
    order = [0] * n
    for i in range(n):
        p = perm(i + 1) - 1 if perm is not None else i
        if not 0 <= p < n or b[p] != a[i]:
            return None
        order[p] = i
    sizes = [size_of(x) for x in a]
    return np.arange(int(np.prod(sizes, dtype=np.int64))).reshape(sizes).transpose(order).ravel()


def is_object_expr(x) -> bool:
    return isinstance(x, (Unit, Leaf, Tensor))


def leaves(x: ObjectExpr) -> list:
    """Leaf labels from left to right; units contribute nothing."""
    if isinstance(x, Leaf):
        return [x.label]
    if isinstance(x, Tensor):
        return leaves(x.left) + leaves(x.right)
    return []


def depth(x: ObjectExpr) -> int:
    if isinstance(x, Tensor):
        return 1 + max(depth(x.left), depth(x.right))
    return 0


def tensor_all(xs: Iterable[ObjectExpr]) -> ObjectExpr:
    """The left-nested product ``((x1 x x2) x x3) ...``, with the empty product ``I``."""
    out = None
    for x in xs:
        out = x if out is None else Tensor(out, x)
    return UNIT if out is None else out


def power_word(x: ObjectExpr, m: int) -> ObjectExpr:
    """``x`` to the ``m``-th tensor power, nested to the left."""
    return tensor_all([x] * m)


def trees(atoms: list[ObjectExpr], max_depth: int) -> list[ObjectExpr]:
    """Every tensor tree over ``atoms`` of depth at most ``max_depth``."""
    current = list(atoms)
    for _ in range(max_depth):
        current = list(atoms) + [Tensor(a, b) for a in current for b in current]
    return current


class SMC:
    """A symmetric monoidal category with explicit coherence data.

    Composition is diagrammatic: ``compose(f, g)`` is ``f`` then ``g``.
    Objects are whatever the instance uses; ``atom`` turns the label of a
    word leaf into an object so that coherence isomorphisms can be built
    over arbitrary bracketings (see ``coherence.canonical_iso``).
    """

    name = "smc"
    unit: Any = UNIT

    # objects
    def tensor_obj(self, a, b):
        return Tensor(a, b)

    def atom(self, label):
        return label if is_object_expr(label) else Leaf(label)

    def eval_word(self, w: ObjectExpr):
        if isinstance(w, Unit):
            return self.unit
        if isinstance(w, Leaf):
            return self.atom(w.label)
        return self.tensor_obj(self.eval_word(w.left), self.eval_word(w.right))

    def reindexing_iso(self, src: ObjectExpr, tgt: ObjectExpr, perm):
        """A direct construction of a canonical isomorphism, or None.

        Categories where a coherence isomorphism is a mere reindexing of
        elements override this; ``canonical_iso`` falls back to composing
        associators, unitors and braidings otherwise.
        """
        return None

    def power(self, c, m: int):
        return self.eval_word(power_word(Leaf(c), m))

    # morphisms
    def identity(self, a):
        raise NotImplementedError

    def compose(self, f, g):
        raise NotImplementedError

    def tensor(self, f, g):
        raise NotImplementedError

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def equal(self, f, g) -> bool:
        return f == g

    def is_identity_like(self, f) -> bool:
        """Whether ``f`` acts as an identity on underlying data, ignoring bracketing."""
        return self.dom(f) == self.cod(f) and self.equal(f, self.identity(self.dom(f)))

    def compose_all(self, *fs):
        out = fs[0]
        for f in fs[1:]:
            out = self.compose(out, f)
        return out

    def tensor_power(self, f, m: int):
        """``f`` tensored with itself ``m`` times, nested to the left."""
        if m == 0:
            return self.identity(self.unit)
        out = f
        for _ in range(m - 1):
            out = self.tensor(out, f)
        return out

    # coherence
    def associator(self, a, b, c):
        raise NotImplementedError

    def associator_inv(self, a, b, c):
        raise NotImplementedError

    def left_unitor(self, a):
        raise NotImplementedError

    def left_unitor_inv(self, a):
        raise NotImplementedError

    def right_unitor(self, a):
        raise NotImplementedError

    def right_unitor_inv(self, a):
        raise NotImplementedError

    def braiding(self, a, b):
        raise NotImplementedError

    # enumeration
    def enumerate_hom(self, a, b) -> list:
        raise NotImplementedError(f"{self.name} cannot enumerate hom-sets")

    def sample_objects(self, max_leaf: int, max_depth: int) -> list:
        raise NotImplementedError

    def render(self, f) -> str:
        return str(f)

    def render_object(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

