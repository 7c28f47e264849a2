"""Free prop terms, presentations, and the plain-text presentation format.

A presentation file has one declaration per line::

    # the prop for commutative monoids
    gen mu 2 1
    gen eta 0 1
    rel comp braid 1 1 mu = mu

Terms are written in prefix form: ``comp T1 T2``, ``sum T1 T2``,
``braid m n``, ``id n``, or a generator name.  Parentheses may be used for
readability and are otherwise ignored by the grammar.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path
from typing import Iterable, Union


class ArityError(ValueError):
    """A term or image whose boundary does not fit its context."""


class PresentationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    dom: int
    cod: int

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Id:
    n: int

    @property
    def dom(self):
        return self.n

    @property
    def cod(self):
        return self.n

    def __str__(self):
        return f"id {self.n}"


@dataclass(frozen=True)
class Braid:
    m: int
    n: int

    @property
    def dom(self):
        return self.m + self.n

    @property
    def cod(self):
        return self.m + self.n

    def __str__(self):
        return f"braid {self.m} {self.n}"


@dataclass(frozen=True)
class Compose:
    first: PropTerm
    second: PropTerm

    def __post_init__(self):
        if self.first.cod != self.second.dom:
            raise ArityError(
                f"cannot compose {self.first.dom}->{self.first.cod} with "
                f"{self.second.dom}->{self.second.cod}")

    @property
    def dom(self):
        return self.first.dom

    @property
    def cod(self):
        return self.second.cod

    def __str__(self):
        return f"(comp {self.first} {self.second})"


@dataclass(frozen=True)
class Sum:
    left: PropTerm
    right: PropTerm

    @property
    def dom(self):
        return self.left.dom + self.right.dom

    @property
    def cod(self):
        return self.left.cod + self.right.cod

    def __str__(self):
        return f"(sum {self.left} {self.right})"


PropTerm = Union[Generator, Id, Braid, Compose, Sum]


def compose_all(terms: Iterable[PropTerm]) -> PropTerm:
    return reduce(Compose, terms)


def sum_all(terms: Iterable[PropTerm], empty: int = 0) -> PropTerm:
    terms = list(terms)
    if not terms:
        return Id(empty)
    return reduce(Sum, terms)


def generators_of(term: PropTerm) -> set[Generator]:
    if isinstance(term, Generator):
        return {term}
    if isinstance(term, Compose):
        return generators_of(term.first) | generators_of(term.second)
    if isinstance(term, Sum):
        return generators_of(term.left) | generators_of(term.right)
    return set()


def dual_term(term: PropTerm, rename: dict[str, str]) -> PropTerm:
    """The mirror image of ``term`` in the opposite prop."""
    if isinstance(term, Generator):
        return Generator(rename.get(term.name, term.name), term.cod, term.dom)
    if isinstance(term, Id):
        return term
    if isinstance(term, Braid):
        return Braid(term.n, term.m)
    if isinstance(term, Compose):
        return Compose(dual_term(term.second, rename), dual_term(term.first, rename))
    return Sum(dual_term(term.left, rename), dual_term(term.right, rename))


@dataclass(frozen=True)
class Relation:
    lhs: PropTerm
    rhs: PropTerm
    label: str = ""

    def __post_init__(self):
        if (self.lhs.dom, self.lhs.cod) != (self.rhs.dom, self.rhs.cod):
            raise ArityError(
                f"relation sides {self.lhs.dom}->{self.lhs.cod} and "
                f"{self.rhs.dom}->{self.rhs.cod} differ")

    def __str__(self):
        return self.label or f"{self.lhs} = {self.rhs}"


@dataclass
class PropPresentation:
    generators: dict[str, Generator] = field(default_factory=dict)
    relations: list[Relation] = field(default_factory=list)
    name: str = ""

    def add_generator(self, name: str, dom: int, cod: int) -> Generator:
        if name in self.generators or name in _KEYWORDS:
            raise PresentationSyntaxError(f"generator name {name!r} already used")
        g = Generator(name, dom, cod)
        self.generators[name] = g
        return g

    def add_relation(self, lhs: PropTerm, rhs: PropTerm, label: str = "") -> Relation:
        unknown = {g for g in generators_of(lhs) | generators_of(rhs)
                   if self.generators.get(g.name) != g}
        if unknown:
            raise PresentationSyntaxError(f"undeclared generators {sorted(g.name for g in unknown)}")
        rel = Relation(lhs, rhs, label)
        self.relations.append(rel)
        return rel

    def parse_term(self, text: str) -> PropTerm:
        tokens = _tokenize(text)
        term, rest = _parse(tokens, self.generators)
        if rest:
            raise PresentationSyntaxError(f"trailing tokens {rest!r} in {text!r}")
        return term

    def to_text(self) -> str:
        lines = [f"gen {g.name} {g.dom} {g.cod}" for g in self.generators.values()]
        lines += [f"rel {_unparen(r.lhs)} = {_unparen(r.rhs)}" for r in self.relations]
        return "\n".join(lines) + "\n"


_KEYWORDS = {"comp", "sum", "braid", "id", "gen", "rel", "="}


def _unparen(term: PropTerm) -> str:
    text = str(term)
    return text[1:-1] if text.startswith("(") else text


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ").replace(")", " ").split()


def _nat(token: str) -> int:
    if not token.isdigit():
        raise PresentationSyntaxError(f"expected a natural number, got {token!r}")
    return int(token)


def _parse(tokens: list[str], gens: dict[str, Generator]) -> tuple[PropTerm, list[str]]:
    if not tokens:
        raise PresentationSyntaxError("unexpected end of term")
    head, rest = tokens[0], tokens[1:]
    if head == "id":
        if not rest:
            raise PresentationSyntaxError("id needs an arity")
        return Id(_nat(rest[0])), rest[1:]
    if head == "braid":
        if len(rest) < 2:
            raise PresentationSyntaxError("braid needs two arities")
        return Braid(_nat(rest[0]), _nat(rest[1])), rest[2:]
    if head in ("comp", "sum"):
        a, rest = _parse(rest, gens)
        b, rest = _parse(rest, gens)
        return (Compose(a, b) if head == "comp" else Sum(a, b)), rest
    if head in gens:
        return gens[head], rest
    raise PresentationSyntaxError(f"unknown generator or keyword {head!r}")


def parse_presentation(text: str, name: str = "") -> PropPresentation:
    pres = PropPresentation(name=name)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, body = line.partition(" ")
        try:
            if keyword == "gen":
                parts = body.split()
                if len(parts) != 3:
                    raise PresentationSyntaxError("expected: gen NAME m n")
                pres.add_generator(parts[0], _nat(parts[1]), _nat(parts[2]))
            elif keyword == "rel":
                if body.count("=") != 1:
                    raise PresentationSyntaxError("expected: rel TERM = TERM")
                lhs, rhs = body.split("=")
                pres.add_relation(pres.parse_term(lhs), pres.parse_term(rhs))
            else:
                raise PresentationSyntaxError(f"unknown declaration {keyword!r}")
        except (PresentationSyntaxError, ArityError) as exc:
            raise PresentationSyntaxError(f"line {lineno}: {exc}") from None
    return pres


def load_presentation(path: str | Path) -> PropPresentation:
    path = Path(path)
    return parse_presentation(path.read_text(), name=path.stem)
