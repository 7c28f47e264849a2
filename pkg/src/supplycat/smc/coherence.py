"""Canonical coherence isomorphisms between bracketings of the same atoms.

A *word* is an ``ObjectExpr`` whose leaves are atoms of a category (for
categories whose objects are themselves trees, any object can serve as an
atom).  ``canonical_iso`` builds the composite of associators, unitors and
braidings that normalises the source word to the right-nested form,
permutes its atoms by adjacent swaps, and de-normalises to the target.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from ..finset import Permutation, block_braiding
from .base import SMC, UNIT, Leaf, ObjectExpr, Tensor, Unit, leaves, power_word


class LeafMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Iso:
    """A symbolic coherence morphism, evaluated in a category on demand.

    ``kind`` is one of ``id, alpha, alpha_inv, lambda, lambda_inv, rho,
    rho_inv, gamma, tensor, compose``; ``args`` are words or sub-terms.
    """

    kind: str
    args: tuple

    def inverse(self) -> "Iso":
        k, a = self.kind, self.args
        if k == "id":
            return self
        if k == "gamma":
            return Iso("gamma", (a[1], a[0]))
        if k == "tensor":
            return Iso("tensor", (a[0].inverse(), a[1].inverse()))
        if k == "compose":
            return Iso("compose", (a[1].inverse(), a[0].inverse()))
        if k.endswith("_inv"):
            return Iso(k[:-4], a)
        return Iso(k + "_inv", a)


def _id(w):
    return Iso("id", (w,))


def _tensor(s, t):
    if s.kind == "id" and t.kind == "id":
        return _id(Tensor(s.args[0], t.args[0]))
    return Iso("tensor", (s, t))


def _then(s, t):
    if s.kind == "id":
        return t
    if t.kind == "id":
        return s
    return Iso("compose", (s, t))


def _right_nested(atoms: Sequence) -> ObjectExpr:
    if not atoms:
        return UNIT
    out = Leaf(atoms[-1])
    for a in reversed(atoms[:-1]):
        out = Tensor(Leaf(a), out)
    return out


def _merge(left: list, right: list) -> Iso:
    """``N(left) x N(right) -> N(left + right)`` for right-nested normal forms."""
    if not left:
        return Iso("lambda", (_right_nested(right),))
    if not right:
        return Iso("rho", (_right_nested(left),))
    if len(left) == 1:
        return _id(Tensor(Leaf(left[0]), _right_nested(right)))
    head, rest = Leaf(left[0]), left[1:]
    alpha = Iso("alpha", (head, _right_nested(rest), _right_nested(right)))
    return _then(alpha, _tensor(_id(head), _merge(rest, right)))


def normalize(w: ObjectExpr) -> tuple[Iso, list]:
    """The iso from ``w`` to the right-nested word on its atoms, and those atoms."""
    if isinstance(w, (Unit, Leaf)):
        return _id(w), leaves(w)
    sl, al = normalize(w.left)
    sr, ar = normalize(w.right)
    return _then(_tensor(sl, sr), _merge(al, ar)), al + ar


def _swap_at(atoms: list, p: int) -> Iso:
    """Swap the atoms at 0-based positions ``p`` and ``p + 1`` of a right-nested word."""
    a, b = Leaf(atoms[p]), Leaf(atoms[p + 1])
    rest = atoms[p + 2:]
    if rest:
        r = _right_nested(rest)
        local = _then(Iso("alpha_inv", (a, b, r)),
                      _then(_tensor(Iso("gamma", (a, b)), _id(r)), Iso("alpha", (b, a, r))))
    else:
        local = Iso("gamma", (a, b))
    for q in range(p - 1, -1, -1):
        local = _tensor(_id(Leaf(atoms[q])), local)
    return local


def permute_normal(atoms: list, perm: Permutation) -> Iso:
    """Move atom ``i`` of a right-nested word to position ``perm(i)``."""
    order = list(range(1, len(atoms) + 1))
    current = list(atoms)
    out = _id(_right_nested(atoms))
    changed = True
    while changed:
        changed = False
        for p in range(len(order) - 1):
            if perm(order[p]) > perm(order[p + 1]):
                out = _then(out, _swap_at(current, p))
                order[p], order[p + 1] = order[p + 1], order[p]
                current[p], current[p + 1] = current[p + 1], current[p]
                changed = True
    return out


def canonical_iso_term(src: ObjectExpr, tgt: ObjectExpr, perm: Permutation | None = None) -> Iso:
    to_normal, src_atoms = normalize(src)
    from_normal, tgt_atoms = normalize(tgt)
    if perm is None:
        perm = Permutation(range(1, len(src_atoms) + 1))
    if perm.size != len(src_atoms) or len(tgt_atoms) != len(src_atoms):
        raise LeafMismatch(f"{src} has {len(src_atoms)} atoms, {tgt} has {len(tgt_atoms)}")
    for i, a in enumerate(src_atoms, 1):
        if tgt_atoms[perm(i) - 1] != a:
            raise LeafMismatch(f"atom {i} of {src} does not land on a matching atom of {tgt}")
    return _then(_then(to_normal, permute_normal(src_atoms, perm)), from_normal.inverse())


def evaluate(C: SMC, t: Iso):
    k, a = t.kind, t.args
    w = C.eval_word
    if k == "id":
        return C.identity(w(a[0]))
    if k == "compose":
        return C.compose(evaluate(C, a[0]), evaluate(C, a[1]))
    if k == "tensor":
        return C.tensor(evaluate(C, a[0]), evaluate(C, a[1]))
    if k == "alpha":
        return C.associator(w(a[0]), w(a[1]), w(a[2]))
    if k == "alpha_inv":
        return C.associator_inv(w(a[0]), w(a[1]), w(a[2]))
    if k == "lambda":
        return C.left_unitor(w(a[0]))
    if k == "lambda_inv":
        return C.left_unitor_inv(w(a[0]))
    if k == "rho":
        return C.right_unitor(w(a[0]))
    if k == "rho_inv":
        return C.right_unitor_inv(w(a[0]))
    if k == "gamma":
        return C.braiding(w(a[0]), w(a[1]))
    raise ValueError(f"unknown coherence generator {k}")


def canonical_iso(C: SMC, src: ObjectExpr, tgt: ObjectExpr, perm: Permutation | None = None):
    """The canonical isomorphism ``src -> tgt`` moving source atom ``i`` to target position ``perm(i)``."""
    cache = C.__dict__.setdefault("_canonical_cache", {})
    key = (src, tgt, perm)
    out = cache.get(key)
    if out is None:
        out = C.reindexing_iso(src, tgt, perm)
        if out is None:
            out = composite_iso(C, src, tgt, perm)
        cache[key] = out
    return out


def composite_iso(C: SMC, src: ObjectExpr, tgt: ObjectExpr, perm: Permutation | None = None):
    """The canonical isomorphism as an explicit composite of coherence maps, uncached."""
    return evaluate(C, canonical_iso_term(src, tgt, perm))


def interleave_permutation(n: int) -> Permutation:
    """``c1..cn d1..dn`` to ``c1 d1 c2 d2 ...``."""
    table = [2 * i - 1 for i in range(1, n + 1)] + [2 * j for j in range(1, n + 1)]
    return Permutation(table)


def sigma_interleave(C: SMC, n: int, c: Any, d: Any):
    """``c^n x d^n -> (c x d)^n``, interleaving the factors."""
    src = Tensor(power_word(Leaf(c), n), power_word(Leaf(d), n))
    tgt = power_word(Tensor(Leaf(c), Leaf(d)), n)
    return canonical_iso(C, src, tgt, interleave_permutation(n))


def sigma_unit(C: SMC, n: int):
    """``I -> I^n``; the identity for ``n = 0``, inverse unitors otherwise."""
    return canonical_iso(C, UNIT, power_word(UNIT, n))


def power_split(C: SMC, c: Any, m: int, n: int):
    """``c^m x c^n -> c^(m+n)``, the iso relating sums of arities to tensors."""
    src = Tensor(power_word(Leaf(c), m), power_word(Leaf(c), n))
    return canonical_iso(C, src, power_word(Leaf(c), m + n))


def block_braiding_iso(C: SMC, c: Any, m: int, n: int):
    """``c^(m+n) -> c^(m+n)`` exchanging the first ``m`` factors with the last ``n``."""
    w = power_word(Leaf(c), m + n)
    return canonical_iso(C, w, w, block_braiding(m, n))
