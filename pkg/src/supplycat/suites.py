"""Named verification suites assembled from instances, supplies and functors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .constructions import (
    biproduct, biproduct_supply, check_biproduct, check_functor, check_preservation_factoring,
    check_preserves_supply, check_strict_coherence, check_strongators_homomorphisms,
    constant_unit_functor, coprojection, finset_op_to_cospan, flattening_functor, from_terminal,
    identity_functor, identity_section, inclusion_functor, projection, self_dual_to_cospan,
    smf_tensor, strictify, strictify_supply, to_terminal, transfer_along_prop_functor,
    transfer_along_strict_surjection,
)
from .constructions.functors import middle_four
from .props import (
    Bijections, CospanMorphism, CospanProp, CobProp, FinSetProp, Injections, Involutions,
    check_presentation_functor, check_prop_axioms, eval_prop_term, finset_op, injections_op,
    load_presentation,
)
from .props.cospan import cospan_identity
from .props.presentations import frobenius, monoid, self_dual
from .report import CheckReport, run_parallel
from .smc import MatQ, NestedRel, Rel, Terminal, check_smc_axioms
from .smc.base import UNIT, Leaf
from .smc.rel import FinSetCat
from .supplies import (
    broken_supply, cup_matrix, finsetcat_comonoid_supply, frobenius_images,
    matq_rescaled_supply, matq_self_dual_supply, nested_rel_hypergraph_supply,
    rel_comonoid_supply_direct, rel_hypergraph_supply, terminal_supply,
)
from .supply import (
    check_coherence_homomorphisms, check_supply, generator_name, homomorphic_subcategory,
    is_homomorphism, self_supply,
)

# sampling budget for the biproduct's SMC laws; its instance spaces are the
# squares of the component ones
BIPRODUCT_LAW_BUDGET = 15_000


class UsageError(ValueError):
    """Bad suite name, instance or bounds; reported with its own exit status."""


@dataclass
class SuiteConfig:
    suite: str
    instance: str | None = None
    max_leaf: int | None = None
    max_depth: int | None = None
    max_arity: int | None = None
    max_apex: int | None = None
    format: str = "text"
    seed: int = 0
    presentation: str | None = None
    target: str | None = None

    def __post_init__(self):
        for name in ("max_leaf", "max_depth", "max_arity", "max_apex"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be >= 0, got {v}")

    def get(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v

    @property
    def leaf(self):
        return self.get("max_leaf", 2)

    @property
    def depth(self):
        return self.get("max_depth", 3)

    def arity(self, default: int = 3):
        return self.get("max_arity", default)

    def apex(self, default: int = 4):
        return self.get("max_apex", default)


SUITES: dict[str, tuple[str, Callable[[SuiteConfig], CheckReport]]] = {}


def suite(name: str, summary: str):
    def register(fn):
        SUITES[name] = (summary, fn)
        return fn
    return register


def pick(cfg: SuiteConfig, instances: dict) -> dict:
    """Restrict to ``--instance`` if given."""
    if cfg.instance is None:
        return instances
    if cfg.instance not in instances:
        raise UsageError(f"suite {cfg.suite} has no instance {cfg.instance!r}; "
                         f"choose from {', '.join(instances)}")
    return {cfg.instance: instances[cfg.instance]}


def merged(cfg: SuiteConfig, bounds: dict, parts: dict) -> CheckReport:
    """Run named sub-checks (possibly in parallel) and prefix their ids."""
    names = list(parts)

    def task(name):
        def run():
            out = CheckReport(cfg.suite)
            return out.extend(parts[name](), prefix=f"{name}/")
        return run

    return run_parallel([task(n) for n in names], cfg.suite, bounds)


def supply_objects(C, cfg: SuiteConfig) -> tuple[list, list]:
    """Objects two tensor levels below ``--max-depth``, and atoms for the tensor square."""
    return C.sample_objects(cfg.leaf, max(0, cfg.depth - 2)), C.sample_objects(cfg.leaf, 0)


def expect_failure(report: CheckReport, cid: str, anchor: str, failing: CheckReport,
                   entry: str, generator: str | None) -> None:
    """Record that ``failing`` fails at ``entry``, with ``generator`` as its witness."""
    e = failing.entry(entry)
    got = (e.witness or {}).get("mu_generator")
    ok = e.status == "fail" and (generator is None or got == generator)
    witness = dict(e.witness or {})
    if not ok:
        witness["expected"] = f"failure at {entry} with generator {generator}"
        witness["status"] = e.status
    report.add(cid, anchor, ok, witness or None)


# -- props -------------------------------------------------------------------------------

@suite("prop-axioms", "strict symmetric monoidal laws in each built-in prop")
def prop_axioms(cfg: SuiteConfig) -> CheckReport:
    a, apex = cfg.arity(3), cfg.apex(4)
    props = pick(cfg, {
        "B": (Bijections(), None), "Inv": (Involutions(), None), "FinSet": (FinSetProp(), None),
        "FinSet^op": (finset_op(), None), "Cospan": (CospanProp(apex), apex), "Cob": (CobProp(1), 1),
    })
    return merged(cfg, {"arity": a, "apex": apex}, {
        name: (lambda p=p, b=b: check_prop_axioms(p, a, b)) for name, (p, b) in props.items()})


CORRUPTED_CUP = CospanMorphism(0, 2, 2, (), (1, 2))


def _images(prop, names):
    return {n: prop.generator(n) for n in names}


@suite("presentations", "standard presentations hold under their generator images")
def presentations_suite(cfg: SuiteConfig) -> CheckReport:
    fs, cs = FinSetProp(), CospanProp(cfg.apex(4))
    sd_images = _images(cs, ["cup", "cap"])

    def snakes():
        out = CheckReport("snakes")
        pres = self_dual()
        for idx, label in ((2, "snake/left"), (3, "snake/right")):
            rel = pres.relations[idx]
            value = eval_prop_term(rel.lhs, cs, sd_images)
            ok = cs.equal(value, cospan_identity(1))
            out.add(label, "the snake composite is the identity cospan", ok,
                    None if ok else {"value": cs.render(value)})
        return out

    def corrupted():
        out = CheckReport("fixture")
        bad = check_presentation_functor(self_dual(), cs, {**sd_images, "cup": CORRUPTED_CUP})
        failures = bad.failures
        ok = bool(failures)
        witness = {"relation": failures[0].anchor, **(failures[0].witness or {})} if ok else None
        out.add("corrupted-fails", "a cup with two apex points breaks a self-dual relation", ok,
                witness)
        return out

    parts = {
        "monoid-in-FinSet": lambda: check_presentation_functor(monoid(), fs, _images(fs, ["mu", "eta"])),
        "self-dual-in-Cospan": lambda: check_presentation_functor(self_dual(), cs, sd_images),
        "frobenius-in-Cospan": lambda: check_presentation_functor(
            frobenius(), cs, _images(cs, ["mu", "eta", "delta", "epsilon"])),
        "self-dual-snakes": snakes,
        "corrupted-cup": corrupted,
    }
    return merged(cfg, {"apex": cfg.apex(4)}, pick(cfg, parts))


PROP_TARGETS = {
    "B": Bijections, "Inv": Involutions, "FinSet": FinSetProp, "FinSet^op": finset_op,
    "Inj": Injections, "Inj^op": injections_op, "Cospan": CospanProp, "Cob": CobProp,
}


@suite("presentation", "a presentation file checked in a target prop (--presentation, --target)")
def presentation_file(cfg: SuiteConfig) -> CheckReport:
    if not cfg.presentation or not cfg.target:
        raise UsageError("suite presentation needs --presentation FILE and --target PROP")
    if cfg.target not in PROP_TARGETS:
        raise UsageError(f"unknown target prop {cfg.target!r}; choose from {', '.join(PROP_TARGETS)}")
    try:
        pres = load_presentation(cfg.presentation)
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.presentation}: {exc}") from exc
    except ValueError as exc:
        raise UsageError(f"{cfg.presentation}: {exc}") from exc
    target = PROP_TARGETS[cfg.target]()
    try:
        images = _images(target, pres.generators)
    except KeyError as exc:
        raise UsageError(f"{cfg.target} has no generator named {exc}") from exc
    report = check_presentation_functor(pres, target, images)
    return CheckReport(cfg.suite, {"target": cfg.target}, report.entries).sorted()


# -- symmetric monoidal categories --------------------------------------------------------

def smc_instances(cfg: SuiteConfig) -> dict:
    return {
        "Rel": (Rel(cfg.seed), 50_000), "NestedRel": (NestedRel(cfg.seed), 50_000),
        "MatQ": (MatQ(), 50_000), "Terminal": (Terminal(), 50_000),
        "Rel+Rel": (biproduct(Rel(cfg.seed), Rel(cfg.seed)), BIPRODUCT_LAW_BUDGET),
    }


@suite("smc-axioms", "coherence laws of the concrete symmetric monoidal categories")
def smc_axioms(cfg: SuiteConfig) -> CheckReport:
    insts = pick(cfg, smc_instances(cfg))
    return merged(cfg, {"max_leaf": cfg.leaf, "max_depth": cfg.depth, "seed": cfg.seed}, {
        name: (lambda C=C, b=b: check_smc_axioms(C, cfg.leaf, cfg.depth, b, cfg.seed))
        for name, (C, b) in insts.items()})


# -- supplies ------------------------------------------------------------------------------

def _supply_suite(cfg: SuiteConfig, s, objects=None, pair_objects=None, arity=2, size=3):
    objs, atoms = supply_objects(s.category, cfg)
    objects = objs if objects is None else objects
    pair_objects = atoms if pair_objects is None else pair_objects
    a = cfg.arity(arity)
    report = check_supply(s, objects, a, size, pair_objects)
    bounds = {"max_leaf": cfg.leaf, "max_depth": cfg.depth, **report.bounds}
    return CheckReport(cfg.suite, bounds, report.entries).sorted()


@suite("rel-hypergraph", "Frobenius structure on Rel from diagonals and codiagonals")
def rel_hypergraph(cfg: SuiteConfig) -> CheckReport:
    apex = cfg.apex(3)
    return _supply_suite(cfg, rel_hypergraph_supply(Rel(cfg.seed), apex), size=apex)


@suite("nested-rel-hypergraph", "Frobenius structure on relations stored as sets of nested pairs")
def nested_rel_hypergraph(cfg: SuiteConfig) -> CheckReport:
    apex = cfg.apex(3)
    return _supply_suite(cfg, nested_rel_hypergraph_supply(NestedRel(cfg.seed), apex), size=apex)


@suite("matq-self-dual", "cups and caps of rational matrices")
def matq_self_dual(cfg: SuiteConfig) -> CheckReport:
    return _supply_suite(cfg, matq_self_dual_supply(MatQ()), size=1)


@suite("finsetcat-comonoid", "diagonals and terminal maps of finite sets")
def finsetcat_comonoid(cfg: SuiteConfig) -> CheckReport:
    return _supply_suite(cfg, finsetcat_comonoid_supply(FinSetCat(cfg.seed)), size=None)


@suite("terminal", "the unique supply in the terminal category")
def terminal(cfg: SuiteConfig) -> CheckReport:
    apex = cfg.apex(3)
    return _supply_suite(cfg, terminal_supply(CospanProp(apex)), [UNIT], [UNIT], size=apex)


@suite("self-supply", "each prop supplies itself by acting wire-wise")
def self_supply_suite(cfg: SuiteConfig) -> CheckReport:
    objects = list(range(4))
    apex = cfg.apex(3)
    props = pick(cfg, {"B": (Bijections(), 3, None), "FinSet": (FinSetProp(), 3, None),
                       "Cospan": (CospanProp(apex), 2, apex)})
    return merged(cfg, {"objects": len(objects), "apex": apex}, {
        name: (lambda p=p, a=a, b=b: check_supply(self_supply(p, b), objects, cfg.arity(a), b))
        for name, (p, a, b) in props.items()})


@suite("biproduct-supply", "pointwise comonoid supply on Rel (+) Rel")
def biproduct_supply_suite(cfg: SuiteConfig) -> CheckReport:
    R = Rel(cfg.seed)
    s = rel_comonoid_supply_direct(R)
    B = biproduct(R, R)
    atoms = R.sample_objects(cfg.leaf, 0)
    pairs = [(a, b) for a in atoms for b in atoms]
    return _supply_suite(cfg, biproduct_supply(s, s, B), pairs, pairs)


@suite("fixtures/broken-supply", "a comonoid assignment with a corrupted counit; expected to fail")
def broken(cfg: SuiteConfig) -> CheckReport:
    R = Rel(cfg.seed)
    return _supply_suite(cfg, broken_supply(R), R.sample_objects(cfg.leaf, 0))


# -- homomorphisms -------------------------------------------------------------------------

@suite("coherence-homomorphisms", "associators, unitors and braidings are supply homomorphisms")
def coherence_homs(cfg: SuiteConfig) -> CheckReport:
    a = cfg.arity(2)
    apex = cfg.apex(3)
    leaf = cfg.leaf

    def run(s, size, require):
        C = s.category
        objects = C.sample_objects(leaf, 1)
        atoms = C.sample_objects(leaf, 0)
        return check_coherence_homomorphisms(s, objects, a, size, require, atoms)

    insts = pick(cfg, {
        "NestedRel": lambda: run(nested_rel_hypergraph_supply(NestedRel(cfg.seed), apex), apex, True),
        "Rel": lambda: run(rel_hypergraph_supply(Rel(cfg.seed), apex), apex, False),
        "MatQ": lambda: run(matq_self_dual_supply(MatQ()), 1, False),
    })
    return merged(cfg, {"arity": a, "apex": apex, "max_leaf": leaf}, insts)


@suite("homomorphic-subcategory", "homomorphisms of the Rel comonoid supply are closed under ; and x")
def homomorphic_sub(cfg: SuiteConfig) -> CheckReport:
    R = Rel(cfg.seed)
    s = rel_comonoid_supply_direct(R)
    atoms = R.sample_objects(cfg.leaf, 0)
    res = homomorphic_subcategory(s, atoms, cfg.arity(2), None)
    return CheckReport(cfg.suite, res.report.bounds, res.report.entries).sorted()


def orthogonal(M: MatQ, f) -> bool:
    """``M^T M = M M^T = I``, by exact arithmetic."""
    t = M.transpose(f)
    return (M.equal(M.compose(t, f), M.identity(M.cod(f)))
            and M.equal(M.compose(f, t), M.identity(M.dom(f))))


MATQ_FIXTURES = [
    ("identity", [[1, 0], [0, 1]]),
    ("swap", [[0, 1], [1, 0]]),
    ("rotation-3-4-5", [[Fraction(3, 5), Fraction(4, 5)], [Fraction(-4, 5), Fraction(3, 5)]]),
    ("reflection-3-4-5", [[Fraction(3, 5), Fraction(4, 5)], [Fraction(4, 5), Fraction(-3, 5)]]),
    ("symmetric-3-4-5", [[Fraction(3, 5), Fraction(4, 5)], [Fraction(4, 5), Fraction(3, 5)]]),
    ("shear", [[1, 1], [0, 1]]),
    ("sign-flip", [[-1, 0], [0, 1]]),
    ("double", [[2, 0], [0, 2]]),
    ("squeeze", [[Fraction(1, 2), 0], [0, 2]]),
    ("zero", [[0, 0], [0, 0]]),
]


@suite("examples", "worked examples: the empty relation, functional relations, orthogonal matrices")
def examples_suite(cfg: SuiteConfig) -> CheckReport:
    a = cfg.arity(2)

    def empty_relation():
        R = Rel(cfg.seed)
        s = rel_comonoid_supply_direct(R)
        one = Leaf(1)
        res = is_homomorphism(s, R.relation(one, one, []), a, None)
        name = generator_name(s.prop, res.witness) if not res else None
        out = CheckReport("empty")
        ok = (not res) and name == "epsilon"
        out.add("not-a-homomorphism", "the empty relation 1 -> 1 fails at the counit", ok,
                dict(res.details or {}) or {"holds": "true"})
        return out

    def functional():
        R = Rel(cfg.seed)
        s = rel_comonoid_supply_direct(R)
        two = Leaf(2)
        rels = R.enumerate_hom(two, two)
        homs = {f for f in rels if is_homomorphism(s, f, a, None)}
        funcs = {f for f in rels if (f.matrix.sum(axis=0) == 1).all()}
        out = CheckReport("functional")
        ok = len(rels) == 16 and homs == funcs and len(homs) == 4
        out.add("exactly-functions", "exactly the functional relations 2 -> 2 are homomorphisms", ok,
                {"relations": str(len(rels)), "homomorphisms": str(len(homs)),
                 "functional": str(len(funcs))})
        return out

    def orthogonal_matrices():
        M = MatQ()
        s = matq_self_dual_supply(M)
        two = Leaf(2)
        fixtures = [(n, M.matrix(two, two, rows)) for n, rows in MATQ_FIXTURES]
        objs = M.sample_objects(cfg.leaf, 0)
        fixtures += [(f"enumerated-{i}", f) for i, f in enumerate(
            f for x in objs for y in objs for f in M.enumerate_hom(x, y))]
        out = CheckReport("orthogonal")
        bad = None
        count = 0
        for name, f in fixtures:
            hom = bool(is_homomorphism(s, f, a, 1))
            count += hom
            if hom != orthogonal(M, f):
                bad = {"matrix": name, "homomorphism": str(hom), "orthogonal": str(not hom),
                       "value": M.render(f)}
                break
        out.add("exactly-orthogonal", "homomorphisms are exactly the orthogonal matrices", bad is None,
                bad or {"tested": str(len(fixtures)), "homomorphisms": str(count)})
        rot = dict(fixtures)["rotation-3-4-5"]
        ok = bool(is_homomorphism(s, rot, a, 1)) and rot.den != 1
        out.add("non-permutation", "a rational rotation that is not a permutation is a homomorphism",
                ok, None if ok else {"value": M.render(rot)})
        return out

    def finsetcat():
        C = FinSetCat(cfg.seed)
        s = finsetcat_comonoid_supply(C)
        objects = C.sample_objects(cfg.leaf, 1)
        tested, bad = 0, None
        for x, y in itertools.product(objects, repeat=2):
            for f in C.enumerate_hom(x, y):
                tested += 1
                res = is_homomorphism(s, f, a, None)
                if not res and bad is None:
                    bad = res.details
        out = CheckReport("finsetcat")
        out.add("homomorphic", "every enumerated function is a comonoid homomorphism", bad is None,
                bad or {"tested": str(tested)})
        return out

    return merged(cfg, {"arity": a}, pick(cfg, {
        "empty-relation": empty_relation, "functional-relations": functional,
        "orthogonal-matrices": orthogonal_matrices, "finsetcat-homomorphic": finsetcat}))


# -- constructions -------------------------------------------------------------------------

@suite("transfer", "supplies moved along prop functors and strict surjections")
def transfer_suite(cfg: SuiteConfig) -> CheckReport:
    apex = cfg.apex(3)
    a = cfg.arity(2)
    R = Rel(cfg.seed)
    objects, atoms = supply_objects(R, cfg)

    def comonoid():
        hyp = rel_hypergraph_supply(R, apex)
        op = finset_op()
        t = transfer_along_prop_functor(op, finset_op_to_cospan(hyp.prop), hyp)
        out = check_supply(t, objects, a, None, atoms)
        images = frobenius_images(R)
        for gen in ("delta", "epsilon"):
            w = None
            for c in objects:
                got = t.action(c, op.generator(gen))
                if not R.equal(got, images[gen](c)):
                    w = {"object": str(c), "got": R.render(got), "expected": R.render(images[gen](c))}
                    break
            label = "diagonal" if gen == "delta" else "total relation to the unit"
            out.add(f"{gen}-is-{'diagonal' if gen == 'delta' else 'total'}",
                    f"the transferred {gen} is the {label}", w is None, w)
        direct = rel_comonoid_supply_direct(R)
        w = None
        for c in objects:
            for mu in (m for _, _, homs in _homs(op, a) for m in homs):
                if not R.equal(t.action(c, mu), direct.action(c, mu)):
                    w = {"object": str(c), "mu": op.render(mu)}
                    break
            if w:
                break
        out.add("agrees-with-direct", "transferred and directly built comonoid supplies agree",
                w is None, w)
        return out

    def self_dual_rel():
        hyp = rel_hypergraph_supply(R, apex)
        t = transfer_along_prop_functor(CobProp(1), self_dual_to_cospan(hyp.prop), hyp)
        return check_supply(t, objects, a, 1, atoms)

    def symmetries():
        hyp = rel_hypergraph_supply(R, apex)
        t = transfer_along_prop_functor(Bijections(), {}, hyp)
        return check_supply(t, objects, cfg.arity(3), None, atoms)

    def flatten():
        F = flattening_functor(NestedRel(cfg.seed), R)
        s = nested_rel_hypergraph_supply(F.source, apex)
        t = transfer_along_strict_surjection(F, s, identity_section(F))
        out = check_supply(t, objects, a, apex, atoms)
        direct = rel_hypergraph_supply(R, apex)
        out.extend(check_preserves_supply(F, s, direct, objects, a, apex), prefix="preserved-")
        return out

    def inclusion():
        F = inclusion_functor(FinSetCat(cfg.seed), R)
        s = finsetcat_comonoid_supply(F.source)
        t = transfer_along_strict_surjection(F, s, identity_section(F))
        out = check_supply(t, objects, a, None, atoms)
        images = frobenius_images(R)
        w = None
        for c in objects:
            got = t.action(c, t.prop.generator("delta"))
            if not R.equal(got, images["delta"](c)):
                w = {"object": str(c), "got": R.render(got)}
                break
        out.add("delta-is-diagonal", "the transferred diagonal is the diagonal relation", w is None, w)
        return out

    def identity():
        s = rel_comonoid_supply_direct(R)
        F = identity_functor(R)
        t = transfer_along_strict_surjection(F, s, identity_section(F))
        out = CheckReport("identity")
        w = None
        for c in objects:
            for mu in (m for _, _, homs in _homs(s.prop, a) for m in homs):
                if not R.equal(t.action(c, mu), s.action(c, mu)):
                    w = {"object": str(c), "mu": s.prop.render(mu)}
                    break
            if w:
                break
        out.add("unchanged", "transfer along the identity returns the same supply", w is None, w)
        return out

    return merged(cfg, {"arity": a, "apex": apex}, pick(cfg, {
        "FinSet^op->Cospan": comonoid, "Cob->Cospan": self_dual_rel, "B->Cospan": symmetries,
        "NestedRel->Rel": flatten, "FinSetCat->Rel": inclusion, "identity": identity}))


def _homs(prop, arity):
    from .supply import prop_morphisms
    return prop_morphisms(prop, arity, None)


@suite("strictification", "lists of Rel objects: strict laws, induced supply, and evaluation")
def strictification(cfg: SuiteConfig) -> CheckReport:
    a = cfg.arity(2)
    R = Rel(cfg.seed)
    res = strictify(R)
    S, F = res.category, res.tensor_functor
    s = rel_comonoid_supply_direct(R)
    ss = strictify_supply(s, S)
    lists = S.sample_objects(cfg.leaf, 1)
    short = [x for x in lists if len(x) <= 1]
    short_morphisms = [f for x in short for y in short for f in S.enumerate_hom(x, y)]

    def evaluation():
        out = CheckReport("evaluation")
        a1, b1, c1 = Leaf(0), Leaf(1), Leaf(2)
        ok = S.ev((a1, b1, c1)) == R.tensor_obj(R.tensor_obj(a1, b1), c1) and S.ev(()) == R.unit
        out.add("left-nested", "lists evaluate to left-nested products, the empty list to the unit",
                ok, None if ok else {"got": str(S.ev((a1, b1, c1)))})
        w = None
        for c in lists:
            if len(c) != 2:
                continue
            eps = ss.prop.generator("epsilon")
            got = ss.action(c, eps)
            expected = S.tensor(S.lift((c[0],), (), s.action(c[0], eps)),
                                S.lift((c[1],), (), s.action(c[1], eps)))
            if not S.equal(got, expected):
                w = {"object": S.render_object(c), "got": S.render(got),
                     "expected": S.render(expected)}
                break
        out.add("counit-on-pairs", "the counit on a two-element list is the tensor of counits",
                w is None, w)
        w = None
        for c in short:
            if len(c) != 1:
                continue
            for mu in (m for _, _, homs in _homs(s.prop, a) for m in homs):
                if not R.equal(F(ss.action(c, mu)), s.action(c[0], mu)):
                    w = {"object": S.render_object(c), "mu": s.prop.render(mu)}
                    break
            if w:
                break
        out.add("singletons", "on a one-element list the action is the original action", w is None, w)
        return out

    parts = {
        "smc-axioms": lambda: check_smc_axioms(S, cfg.leaf, cfg.depth, 50_000, cfg.seed),
        "strict-coherence": lambda: check_strict_coherence(S, lists),
        "supply": lambda: check_supply(ss, lists, a, None, short),
        "evaluation": evaluation,
        "functor": lambda: check_functor(F, short, short_morphisms),
        "preserves": lambda: check_preserves_supply(F, ss, s, lists, a, None),
        "strongator-homomorphisms": lambda: check_strongators_homomorphisms(
            F, ss, s, lists, a, None, short_morphisms),
        "factoring": lambda: check_preservation_factoring(F, ss, s, short, a, None),
    }
    return merged(cfg, {"arity": a, "max_leaf": cfg.leaf, "max_depth": cfg.depth}, pick(cfg, parts))


@suite("preservation", "functors that carry one supply to another")
def preservation(cfg: SuiteConfig) -> CheckReport:
    a = cfg.arity(2)
    apex = cfg.apex(3)
    R = Rel(cfg.seed)
    objects, atoms = supply_objects(R, cfg)

    def inclusion():
        F = inclusion_functor(FinSetCat(cfg.seed), R)
        s, t = finsetcat_comonoid_supply(F.source), rel_comonoid_supply_direct(R)
        out = check_preserves_supply(F, s, t, objects, a, None)
        out.extend(check_strongators_homomorphisms(F, s, t, atoms, a, None), prefix="homs/")
        out.extend(check_preservation_factoring(F, s, t, atoms, a, None), prefix="factoring/")
        out.extend(check_functor(F, atoms), prefix="functor/")
        return out

    def flatten():
        F = flattening_functor(NestedRel(cfg.seed), R)
        s, t = nested_rel_hypergraph_supply(F.source, apex), rel_hypergraph_supply(R, apex)
        out = check_preserves_supply(F, s, t, objects, a, apex)
        out.extend(check_strongators_homomorphisms(F, s, t, atoms, a, apex), prefix="homs/")
        out.extend(check_functor(F, atoms), prefix="functor/")
        return out

    def terminal_functors():
        s = rel_comonoid_supply_direct(R)
        T = terminal_supply(s.prop)
        out = CheckReport("terminal")
        to, fro = to_terminal(R, T.category), from_terminal(R, T.category)
        out.extend(check_preserves_supply(to, s, T, objects, a, None), prefix="to/")
        out.extend(check_strongators_homomorphisms(to, s, T, atoms, a, None), prefix="to/homs/")
        out.extend(check_preserves_supply(fro, T, s, [UNIT], a, None), prefix="from/")
        out.extend(check_functor(fro, [UNIT]), prefix="from/functor/")
        return out

    def pointwise_tensor():
        F = inclusion_functor(FinSetCat(cfg.seed), R)
        G = constant_unit_functor(F.source, R)
        FG, FF = smf_tensor(F, G), smf_tensor(F, F)
        out = check_functor(FF, atoms)
        out.extend(check_functor(FG, atoms), prefix="with-unit/")
        w = None
        for c in atoms:
            if FF.obj(c) != R.tensor_obj(F.obj(c), F.obj(c)):
                w = {"object": str(c)}
                break
        out.add("objects", "the pointwise tensor sends c to F(c) x G(c)", w is None, w)
        w = None
        for c, d in itertools.product(atoms, repeat=2):
            for f in F.source.enumerate_hom(c, d):
                lhs = R.compose(FG(f), R.right_unitor(F.obj(d)))
                rhs = R.compose(R.right_unitor(F.obj(c)), F(f))
                if not R.equal(lhs, rhs):
                    w = w or {"f": F.source.render(f)}
        out.add("unit-is-neutral", "tensoring with the constant unit functor is undone by unitors",
                w is None, w)
        w = None
        for c, d in itertools.product(atoms, repeat=2):
            expected = middle_four(R, c, c, d, d)
            if not R.equal(FF.phi(c, d), expected):
                w = {"c": str(c), "d": str(d)}
                break
        out.add("strongator-is-interchange", "the strongator of F x F is the middle interchange",
                w is None, w)
        return out

    return merged(cfg, {"arity": a, "apex": apex}, pick(cfg, {
        "FinSetCat->Rel": inclusion, "NestedRel->Rel": flatten, "terminal": terminal_functors,
        "pointwise-tensor": pointwise_tensor}))


@suite("preservation-negative", "rescaled cups and caps: a supply the identity functor does not preserve")
def preservation_negative(cfg: SuiteConfig) -> CheckReport:
    M = MatQ()
    a = cfg.arity(2)
    std, resc = matq_self_dual_supply(M), matq_rescaled_supply(M)
    objects = M.sample_objects(cfg.leaf, 0)
    F = identity_functor(M)
    out = CheckReport(cfg.suite, {"arity": a, "objects": len(objects)})
    out.extend(check_supply(std, objects, a, 1), prefix="standard/")
    out.extend(check_supply(resc, objects, a, 1), prefix="rescaled/")
    two = Leaf(2)
    ok = not M.equal(resc.action(two, resc.prop.generator("cup")), cup_matrix(M, two))
    out.add("rescaled/differs", "the rescaled cup differs from the standard one", ok)
    expect_failure(out, "identity/fails-at-cup", "the identity functor does not preserve the supply, "
                   "first failing at cup", check_preserves_supply(F, std, resc, objects, a, 1),
                   "square", "cup")
    factoring = check_preservation_factoring(F, std, resc, objects, a, 1)
    out.add("identity/verdicts-agree", "the two-part characterization agrees with the direct check",
            factoring.entry("verdicts-agree").ok, factoring.entry("verdicts-agree").witness)
    return out.sorted()


@suite("biproduct", "Rel (+) Rel: unit, projections, pairing, copairing and supply preservation")
def biproduct_suite(cfg: SuiteConfig) -> CheckReport:
    a = cfg.arity(2)
    R = Rel(cfg.seed)
    B = biproduct(R, R)
    s = rel_comonoid_supply_direct(R)
    bs = biproduct_supply(s, s, B)
    atoms = R.sample_objects(cfg.leaf, 0)
    pairs = [(x, y) for x in atoms for y in atoms]
    idR = identity_functor(R)
    parts = {"universal": lambda: check_biproduct(B, atoms, idR, idR, pairs, idR, idR)}
    for which in (0, 1):
        P, I = projection(B, which), coprojection(B, which)
        parts[f"pi{which}"] = (lambda P=P: check_preserves_supply(P, bs, s, pairs, a, None)
                               .extend(check_functor(P, pairs[:9]), prefix="functor/"))
        parts[f"iota{which}"] = (lambda I=I: check_preserves_supply(I, s, bs, atoms, a, None)
                                 .extend(check_strongators_homomorphisms(I, s, bs, atoms, a, None),
                                         prefix="homs/")
                                 .extend(check_functor(I, atoms), prefix="functor/"))
    return merged(cfg, {"arity": a, "pairs": len(pairs)}, pick(cfg, parts))


def run_suite(cfg: SuiteConfig) -> CheckReport:
    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; run 'supplycat list'")
    report = SUITES[cfg.suite][1](cfg)
    report.suite = cfg.suite
    return report


def suite_names() -> list[str]:
    return list(SUITES)

