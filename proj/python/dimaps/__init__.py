"""Regular and reflexible Cayley maps on dihedral groups."""

from ._core import (
    BadParametersError,
    BoundExceededError,
    CayleyMap,
    DimapsError,
    InvalidMapError,
    NotRegularError,
    ParseError,
    block_subgroup_sizes,
    build_family,
    classify,
    cross_check,
    enumerate_reflexible_regular,
    enumerate_regular,
    family_map,
    family_parameters,
    genus,
    is_reflexible,
    is_regular,
    isomorphic,
    isomorphism_classes,
    quotient,
    reflection_index,
    skew_morphism,
    summarize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
