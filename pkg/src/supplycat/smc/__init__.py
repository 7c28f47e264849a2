"""Symmetric monoidal categories with explicit coherence data."""
from .base import SMC, UNIT, Leaf, ObjectExpr, Tensor, Unit, depth, leaves, power_word, tensor_all, trees
from .checks import check_smc_axioms
from .coherence import (
    LeafMismatch, canonical_iso, interleave_permutation, power_split, sigma_interleave, sigma_unit,
)
from .matq import MatQ, MatQMorphism
from .prop_smc import PropAsSMC
from .rel import (
    FinSetCat, FunctionMorphism, NestedRel, NestedRelMorphism, Rel, RelMorphism, elements,
    flatten_relation, function_as_nested, function_as_relation, nest_relation, size,
)
from .terminal import Terminal
