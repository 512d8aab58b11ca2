"""Exact computations for n-ary Hom-Nambu algebras over the rationals."""

from .algebra import (
    BracketTensor,
    HomNambuAlgebra,
    IdentityReport,
    MultiLinearMap,
    verify_hom_lie,
    verify_hom_nambu,
    verify_hom_nambu_multiplicative,
    verify_leibniz,
    verify_morphism,
    verify_multiplicative,
)
from .cohomology import (
    Representation,
    adjoint_module,
    cochain_spaces,
    coboundary,
    cocycle_residual,
    cocycle_space,
    coboundary_space,
    ext_dimension,
    semidirect_algebra,
    split_check,
    trivial_module,
    verify_representation,
)
from .constructions import (
    compose_twist,
    derivation_extension,
    tensor_hom_leibniz,
    tensor_leibniz,
    tensor_power_nary,
    twist_by_endomorphism,
)
from .derivations import (
    assemble_der_algebra,
    check_inn_ideal,
    derivation_space,
    inner_derivation,
    inner_space,
    omega_derivation_space,
)
from .exact import Matrix, Q
from .textio import parse_algebra, serialize_algebra

__version__ = "0.1.0"

__all__ = [
    "BracketTensor",
    "HomNambuAlgebra",
    "IdentityReport",
    "MultiLinearMap",
    "verify_hom_lie",
    "verify_hom_nambu",
    "verify_hom_nambu_multiplicative",
    "verify_leibniz",
    "verify_morphism",
    "verify_multiplicative",
    "Representation",
    "adjoint_module",
    "cochain_spaces",
    "coboundary",
    "cocycle_residual",
    "cocycle_space",
    "coboundary_space",
    "ext_dimension",
    "semidirect_algebra",
    "split_check",
    "trivial_module",
    "verify_representation",
    "compose_twist",
    "derivation_extension",
    "tensor_hom_leibniz",
    "tensor_leibniz",
    "tensor_power_nary",
    "twist_by_endomorphism",
    "assemble_der_algebra",
    "check_inn_ideal",
    "derivation_space",
    "inner_derivation",
    "inner_space",
    "omega_derivation_space",
    "Matrix",
    "Q",
    "parse_algebra",
    "serialize_algebra",
]
