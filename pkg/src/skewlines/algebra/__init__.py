from skewlines.algebra.field import Fel, FieldCtx, FieldKind
from skewlines.algebra.roots import (
    cyclotomic_field,
    cyclotomic_modulus,
    is_root_of_unity,
    multiplicative_order,
    primitive_root_of_unity,
)

__all__ = [
    "Fel",
    "FieldCtx",
    "FieldKind",
    "cyclotomic_field",
    "cyclotomic_modulus",
    "is_root_of_unity",
    "multiplicative_order",
    "primitive_root_of_unity",
]
