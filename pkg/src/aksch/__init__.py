"""Representation type of Ariki-Koike algebras and cyclotomic q-Schur algebras.

The package classifies the algebras by parameters, partitions multipartitions
into blocks, computes Jantzen coefficients and finite-type decomposition
matrices, and models the finite-type blocks by a bounded quiver algebra.
"""
from .blocks import Block, block_partition, find_block, morita_reduction, residue, varying_components
from .combinatorics import Dominance, Node, dominance_leq, enumerate_multipartitions, rim_hook
from .errors import AkschError, DegenerateError, RegimeError, TruncationError
from .jantzen import ModularConfig, decomposition_matrix, jantzen_coefficient, sum_formula
from .parameters import INFINITY, Kind, ParameterSet, Verdict, classify, classify_multi_orbit
from .quiver import cartan, construct, projective_radical_series
from .tableaux import count_standard, dim_hecke, dim_schur, enumerate_semistandard

__version__ = "0.1.0"

__all__ = [
    "AkschError", "Block", "DegenerateError", "Dominance", "INFINITY", "Kind", "ModularConfig",
    "Node", "ParameterSet", "RegimeError", "TruncationError", "Verdict", "block_partition",
    "cartan", "classify", "classify_multi_orbit", "construct", "count_standard",
    "decomposition_matrix", "dim_hecke", "dim_schur", "dominance_leq", "enumerate_multipartitions",
    "enumerate_semistandard", "find_block", "jantzen_coefficient", "morita_reduction",
    "projective_radical_series", "residue", "rim_hook", "sum_formula", "varying_components",
]
