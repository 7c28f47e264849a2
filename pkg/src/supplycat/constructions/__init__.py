"""Strong monoidal functors, supply preservation, and constructions that move supplies around."""
from .biproduct import (
    BiproductSMC, PairMorphism, biproduct, biproduct_all, biproduct_supply, check_biproduct,
    copairing, coprojection, pairing, projection,
)
from .functors import (
    StrongMonoidalFunctor, check_functor, compose_functors, constant_unit_functor,
    flattening_functor, from_terminal, identity_functor, inclusion_functor, nesting_functor,
    smf_tensor, strict_functor, to_terminal,
)
from .preservation import (
    PropMismatch, check_preservation_factoring, check_preserves_supply,
    check_strongators_homomorphisms,
)
from .strictify import (
    StrictCategory, StrictificationResult, StrictMorphism, check_strict_coherence, strictify,
    strictify_supply,
)
from .transfer import (
    TransferError, finset_op_to_cospan, identity_section, self_dual_to_cospan,
    transfer_along_prop_functor, transfer_along_strict_surjection,
)
