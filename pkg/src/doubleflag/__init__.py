"""Orbit combinatorics, Hecke module structure and finite-field
certification for the type-AIII double flag variety."""

from .core import (
    Graph,
    Invariants,
    PartialPermutationPair,
    RankMatrix,
    Shape,
    admissible_triples,
    count_orbits,
    enumerate_graphs,
    graph_from_matrix,
    invariants,
    make_graph,
    matrix_from_graph,
    rank_matrix,
    weyl_act,
)
from .hecke import (
    GeneratorCase,
    ModuleVector,
    OperatorMatrix,
    apply_generator,
    classify,
    generators,
    operator_matrix,
    verify_relations,
    weyl_decompose,
)
from .oracle import (
    certify_theorem,
    classify_orbits,
    convolution_action,
    enumerate_grassmannian,
    gaussian_binomial,
    rank_profile,
)
from .polynomial import IntPoly
from .poset import OrbitPoset, build_poset, closure_leq, to_dot

__all__ = [
    "Graph",
    "Invariants",
    "PartialPermutationPair",
    "RankMatrix",
    "Shape",
    "admissible_triples",
    "count_orbits",
    "enumerate_graphs",
    "graph_from_matrix",
    "invariants",
    "make_graph",
    "matrix_from_graph",
    "rank_matrix",
    "weyl_act",
    "GeneratorCase",
    "ModuleVector",
    "OperatorMatrix",
    "apply_generator",
    "classify",
    "generators",
    "operator_matrix",
    "verify_relations",
    "weyl_decompose",
    "certify_theorem",
    "classify_orbits",
    "convolution_action",
    "enumerate_grassmannian",
    "gaussian_binomial",
    "rank_profile",
    "IntPoly",
    "OrbitPoset",
    "build_poset",
    "closure_leq",
    "to_dot",
]
