"""Props: strict symmetric monoidal categories with objects the naturals."""
from .base import EnumerationUnavailable, Prop, eval_prop_term, function_term, permutation_term
from .builtin import (
    Bijections, FinSetProp, Injections, InvolutionMorphism, Involutions, OpMorphism, OpProp,
    finset_op, injections_op, involution_on,
)
from .checks import check_presentation_functor, check_prop_axioms
from .cob import CobMorphism, CobProp, cob_compose, cob_sum, cob_to_cospan
from .cospan import (
    CospanMorphism, CospanProp, cospan_canonical_form, cospan_compose, cospan_of_function,
    cospan_of_opfunction, cospan_sum,
)
from .terms import (
    ArityError, Braid, Compose, Generator, Id, PresentationSyntaxError, PropPresentation,
    PropTerm, Relation, Sum, load_presentation, parse_presentation,
)
