"""Fano-plane detection, counting and partition extraction for 3-uniform hypergraphs."""
from fanostab.hypercore import (
    FormatError,
    Hypergraph3,
    Multigraph,
    degree_profile,
    edges_within,
    ex_fano,
    generate,
    induced,
    is_linear,
    parse,
    serialize,
)
from fanostab.kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FormatError",
    "Hypergraph3",
    "Multigraph",
    "degree_profile",
    "edges_within",
    "ex_fano",
    "generate",
    "induced",
    "is_linear",
    "parse",
    "serialize",
]
