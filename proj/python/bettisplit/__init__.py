"""Simplicial Betti-splitting toolkit.

Reduced simplicial homology over Q and F_p, graded Betti numbers of
Alexander-dual ideals, and splitting verdicts for standard decompositions.
"""

from ._core import (
    SimplicialComplex,
    StandardDecomposition,
    admits_betti_splitting,
    admits_homology_splitting,
    alexander_dual_ideal,
    complex_from_ideal,
    corpus_description,
    corpus_load,
    corpus_names,
    decompose,
    decomposition_at,
    decomposition_count,
    essential_facets,
    f_vector,
    graded_betti,
    is_acyclic,
    is_betti_splitting,
    is_betti_splitting_recursive,
    is_closed_pseudomanifold,
    is_connected,
    is_homology_splitting,
    is_trivially_decomposable,
    mayer_vietoris_maps_vanish,
    orientability,
    reduced_betti,
    reduced_betti_all,
    remove_facet,
    splitting_probability,
)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "StandardDecomposition",
    "admits_betti_splitting",
    "admits_homology_splitting",
    "alexander_dual_ideal",
    "complex_from_ideal",
    "corpus_description",
    "corpus_load",
    "corpus_names",
    "decompose",
    "decomposition_at",
    "decomposition_count",
    "essential_facets",
    "f_vector",
    "graded_betti",
    "is_acyclic",
    "is_betti_splitting",
    "is_betti_splitting_recursive",
    "is_closed_pseudomanifold",
    "is_connected",
    "is_homology_splitting",
    "is_trivially_decomposable",
    "mayer_vietoris_maps_vanish",
    "orientability",
    "reduced_betti",
    "reduced_betti_all",
    "remove_facet",
    "splitting_probability",
]
