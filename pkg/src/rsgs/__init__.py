"""Groebner-Shirshov bases for free right-symmetric (pre-Lie) algebras over Q."""
from .terms import Alphabet, GoodWord, Letter, compare, decompose, enumerate_good, good_below, is_good, tree_form
from .freers import Poly, leading_product, multiply, normalize
from .gs import Presentation, complete, irr, is_gs, nf_equal, reduce
from .lie import (
    LieAlgebra, abelian, affine2, enveloping_presentation, heisenberg, pbw_basis, sl2, validate,
    verify_theorem,
)
from .oracle import count_good, quotient_dims, rank

__all__ = [
    "Alphabet", "GoodWord", "Letter", "compare", "decompose", "enumerate_good", "good_below",
    "is_good", "tree_form", "Poly", "leading_product", "multiply", "normalize", "Presentation",
    "complete", "irr", "is_gs", "nf_equal", "reduce", "LieAlgebra", "enveloping_presentation",
    "pbw_basis", "validate", "verify_theorem", "abelian", "affine2", "heisenberg", "sl2", "count_good", "quotient_dims", "rank",
]
