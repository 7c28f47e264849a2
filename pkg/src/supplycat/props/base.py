"""The prop interface and evaluation of free terms in a prop."""
from __future__ import annotations

from typing import Any, Callable, Mapping

from ..finset import FinFunction, Permutation
from .terms import ArityError, Braid, Compose, Generator, Id, PropPresentation, PropTerm, Sum


class EnumerationUnavailable(NotImplementedError):
    pass


class Prop:
    """A strict symmetric monoidal category whose objects are ``(N, 0, +)``.

    Subclasses supply the morphism operations.  ``decompose`` writes a
    morphism as a term over ``presentation.generators``; supplies use it to
    extend generator images to every morphism.
    """

    name = "prop"
    presentation: PropPresentation | None = None

    def identity(self, n: int) -> Any:
        raise NotImplementedError

    def compose(self, f, g):
        raise NotImplementedError

    def monoidal_sum(self, f, g):
        raise NotImplementedError

    def braiding(self, m: int, n: int):
        raise NotImplementedError

    def equal(self, f, g) -> bool:
        return f == g

    def dom(self, f) -> int:
        return f.dom

    def cod(self, f) -> int:
        return f.cod

    def enumerate_hom(self, m: int, n: int, bound: int | None = None) -> list:
        raise EnumerationUnavailable(f"{self.name} cannot enumerate hom-sets")

    def can_enumerate(self) -> bool:
        return type(self).enumerate_hom is not Prop.enumerate_hom

    def decompose(self, f) -> PropTerm:
        raise NotImplementedError(f"{self.name} has no generator decomposition")

    def generator(self, name: str):
        """The morphism named by a generator of ``presentation``."""
        raise KeyError(name)

    def scalar_split(self, f) -> tuple[Any, int]:
        """Split off ``k`` inert closed components, returning ``(core, k)``.

        Props whose morphisms carry components disconnected from the boundary
        (floating apex points, closed circles) may override this together
        with ``with_scalar``; the law checker then works on cores.
        """
        return f, 0

    def with_scalar(self, core, k: int):
        if k:
            raise ValueError(f"{self.name} has no inert components")
        return core

    def permutation(self, perm: Permutation):
        return eval_prop_term(permutation_term(perm), self, {})

    def render(self, f) -> str:
        return str(f)

    def __repr__(self):
        return self.name


def _pad(before: int, term: PropTerm, after: int) -> PropTerm:
    if before:
        term = Sum(Id(before), term)
    if after:
        term = Sum(term, Id(after))
    return term


def permutation_term(perm: Permutation) -> PropTerm:
    """Adjacent transpositions realising ``perm`` (wire ``i`` ends at ``perm(i)``)."""
    n = perm.size
    arr = list(range(1, n + 1))
    steps: list[PropTerm] = []
    changed = True
    while changed:
        changed = False
        for p in range(n - 1):
            if perm(arr[p]) > perm(arr[p + 1]):
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                steps.append(_pad(p, Braid(1, 1), n - p - 2))
                changed = True
    if not steps:
        return Id(n)
    term = steps[0]
    for s in steps[1:]:
        term = Compose(term, s)
    return term


def sorting_permutation(f: FinFunction) -> Permutation:
    """The permutation moving input ``i`` to its rank when sorted by ``f(i)``."""
    order = sorted(range(1, f.dom + 1), key=lambda i: (f(i), i))
    table = [0] * f.dom
    for rank, i in enumerate(order, 1):
        table[i - 1] = rank
    return Permutation(table)


def merge_term(r: int, mul: Generator, unit: Generator) -> PropTerm:
    """The ``r``-ary merge built from a binary ``mul`` and nullary ``unit``."""
    if r == 0:
        return unit
    term: PropTerm = Id(1)
    for _ in range(r - 1):
        term = Compose(Sum(term, Id(1)), mul)
    return term


def function_term(f: FinFunction, mul: Generator, unit: Generator) -> PropTerm:
    """Write a function as a permutation followed by a sum of merges."""
    perm = sorting_permutation(f)
    blocks = [merge_term(r, mul, unit) for r in f.fibre_sizes()]
    merged: PropTerm = Id(0) if not blocks else blocks[0]
    for b in blocks[1:]:
        merged = Sum(merged, b)
    if perm == Permutation(range(1, f.dom + 1)):
        return merged
    return Compose(permutation_term(perm), merged)


def eval_prop_term(term: PropTerm, target: Prop, images: Mapping[str, Any] | Callable[[Generator], Any]):
    """Interpret a free term in ``target``, sending generators to ``images``."""
    lookup = images if callable(images) else (lambda g: _image(images, g))
    cache: dict = {}

    def go(t):
        hit = cache.get(t)
        if hit is not None:
            return hit
        if isinstance(t, Generator):
            out = lookup(t)
            if (target.dom(out), target.cod(out)) != (t.dom, t.cod):
                raise ArityError(
                    f"image of {t.name} is {target.dom(out)}->{target.cod(out)}, "
                    f"expected {t.dom}->{t.cod}")
        elif isinstance(t, Id):
            out = target.identity(t.n)
        elif isinstance(t, Braid):
            out = target.braiding(t.m, t.n)
        elif isinstance(t, Compose):
            out = target.compose(go(t.first), go(t.second))
        elif isinstance(t, Sum):
            out = target.monoidal_sum(go(t.left), go(t.right))
        else:
            raise TypeError(f"not a prop term: {t!r}")
        cache[t] = out
        return out

    return go(term)


def _image(images: Mapping[str, Any], g: Generator):
    try:
        return images[g.name]
    except KeyError:
        raise KeyError(f"no image for generator {g.name}") from None
