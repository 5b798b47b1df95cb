from skewlines.constructions.base import Expected, NamedConfig
from skewlines.constructions.named import (
    NamedLabel,
    d4,
    f4,
    h4,
    named_example,
    penrose80,
    subfamily_orbits,
)
from skewlines.constructions.spreads import (
    first_nonsquare,
    hopf_map,
    hopf_multiplier_group,
    hopf_spread,
)
from skewlines.constructions.standard import (
    MultVariant,
    StandardFrame,
    additive_span,
    cone_identity_check,
    grid_config,
    l4_from_lt,
    l4_from_roots,
    lt_from_roots,
    standard_construction_add,
    standard_construction_mult,
)

__all__ = [
    "Expected",
    "MultVariant",
    "NamedConfig",
    "NamedLabel",
    "StandardFrame",
    "additive_span",
    "cone_identity_check",
    "d4",
    "f4",
    "first_nonsquare",
    "grid_config",
    "h4",
    "hopf_map",
    "hopf_multiplier_group",
    "hopf_spread",
    "l4_from_lt",
    "l4_from_roots",
    "lt_from_roots",
    "named_example",
    "penrose80",
    "standard_construction_add",
    "standard_construction_mult",
    "subfamily_orbits",
]
