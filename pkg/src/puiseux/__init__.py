"""Exact Puiseux-series factorization over towers of separable algebras."""

from .scalars import Rat, rat, rat_from_str, rat_to_str
from .tower import (
    AlgElem,
    InvertLeaf,
    Split,
    SplitOutcome,
    SplitPart,
    Tower,
    TowerHom,
    Value,
    adjoin_root,
    decompose_by_idempotent,
    elem_add,
    elem_mul,
    hom_apply,
    invert_or_split,
    lift_element,
    quasi_inverse,
    resolve_invert,
)
from .upoly import (
    Poly,
    bezout_pair,
    egcd_branching,
    poly_divmod,
    root_multiplicity,
    separable_associate,
)
from .series import (
    Series,
    SeriesPoly,
    first_unit_coefficient,
    segment_substitute,
    series_inverse,
    substitute_ramify,
    unsegment_factor,
)
from .hensel import hensel_lift
from .newton import (
    Branch,
    PuiseuxFactor,
    expand,
    newton_slope,
    segment_factor_step,
    tschirnhaus_shift,
    verify_product,
)
from .splits import (
    AutomorphismCertificate,
    SplitWitness,
    WitnessNode,
    endo_decompose,
    enumerate_homs,
    harvest_root_hints,
    normalize_pair,
    splits_check,
)
from .cli import InputPoly, main, parse_poly, separability_gate
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AlgElem",
    "AutomorphismCertificate",
    "Branch",
    "InputPoly",
    "InvertLeaf",
    "Poly",
    "PuiseuxFactor",
    "Rat",
    "Series",
    "SeriesPoly",
    "Split",
    "SplitOutcome",
    "SplitPart",
    "SplitWitness",
    "Tower",
    "TowerHom",
    "Value",
    "WitnessNode",
    "adjoin_root",
    "bezout_pair",
    "decompose_by_idempotent",
    "egcd_branching",
    "elem_add",
    "elem_mul",
    "endo_decompose",
    "enumerate_homs",
    "errors",
    "expand",
    "first_unit_coefficient",
    "harvest_root_hints",
    "hensel_lift",
    "hom_apply",
    "invert_or_split",
    "lift_element",
    "main",
    "newton_slope",
    "normalize_pair",
    "parse_poly",
    "poly_divmod",
    "quasi_inverse",
    "rat",
    "rat_from_str",
    "rat_to_str",
    "resolve_invert",
    "root_multiplicity",
    "segment_factor_step",
    "segment_substitute",
    "separability_gate",
    "separable_associate",
    "series_inverse",
    "splits_check",
    "substitute_ramify",
    "tschirnhaus_shift",
    "unsegment_factor",
    "verify_product",
]
