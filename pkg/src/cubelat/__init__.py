"""Combinatorics and connectivity checks for cubical polytopes."""
from .complex import Face, PolytopalComplex, build_complex
from .cube import EMPTY, CubeCutsetSpec, CubeWord
from .graph import Graph
from .polytope import CubicalPolytope, chain_of_cubes, connected_sum, from_facets, hypercube

__all__ = [
    "EMPTY",
    "CubeCutsetSpec",
    "CubeWord",
    "CubicalPolytope",
    "Face",
    "Graph",
    "PolytopalComplex",
    "build_complex",
    "chain_of_cubes",
    "connected_sum",
    "from_facets",
    "hypercube",
]
