"""Two-parameter quantum groups U_{r,s}(g), the Kashiwara algebra B_{r,s}(g) and
its extremal projector, computed exactly over Q(r, s)."""

from .algebra import (
    Algebras, AlgebraElement, Letter, basis_of_weight_space, commutation_lemma, get_algebras,
    normal_form, serre_relation, weight_of,
)
from .canonical import c_element, c_inverse, canonical_tensor, casimir
from .category_o import DirectSum, VermaModule, gamma_apply, kernel
from .dsl import parse_expression
from .hopf import TensorElement, antipode, coproduct, counit, phi, psi
from .pairing import dual_basis, gram_matrix, pair
from .projector import gamma, gamma_sl2_closed
from .rootdata import cartan_type
from .scalars import Scalar
from .verify import Config, make_config, run_verify

__all__ = [
    "Algebras", "AlgebraElement", "Config", "DirectSum", "Letter", "Scalar", "TensorElement",
    "VermaModule", "antipode", "basis_of_weight_space", "c_element", "c_inverse",
    "canonical_tensor", "cartan_type", "casimir", "commutation_lemma", "coproduct", "counit",
    "dual_basis", "gamma", "gamma_apply", "gamma_sl2_closed", "get_algebras", "gram_matrix",
    "kernel", "make_config", "normal_form", "pair", "parse_expression", "phi", "psi",
    "run_verify", "serre_relation", "weight_of",
]
