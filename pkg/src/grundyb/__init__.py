"""Grundy numbers, b-chromatic numbers and b-coloring certificates."""

from .bchromatic import b_coloring_with, b_number, b_of_tree, is_b_monotone, is_pivoted_tree, m_of
from .coloring import Coloring, dominates, is_b_valid, is_grundy_valid, is_proper
from .families import (
    FamilySpec, atom_coloring, atom_metrics, atom_tree, build_family, cactus_chain, fig2_cactus,
    gmn, gmn_nonmonotone_witness, gt, planted_cactus, random_family,
)
from .graph import (
    INFINITE, Graph, Verdict, block_decomposition, build_graph, degree_sequence, girth,
    induced_subgraph, is_cactus, is_k4e_c4_free, is_tree,
)
from .grundy import first_fit, grundy_at_least, grundy_number, witness_decomposition
from .io import export_dot, parse_coloring, parse_graph, serialize_coloring, serialize_graph
from .recolor import (
    RecoloringCertificate, check_certificate, find_b3_witness, recolor_cactus, recolor_girth6, recolor_k4e,
)
from .verify import VerificationReport, run_verification

__all__ = [
    "Coloring", "FamilySpec", "Graph", "INFINITE", "RecoloringCertificate", "Verdict",
    "VerificationReport", "atom_coloring", "atom_metrics", "atom_tree", "b_coloring_with", "b_number",
    "b_of_tree", "block_decomposition", "build_family", "build_graph", "cactus_chain", "check_certificate",
    "degree_sequence", "dominates", "export_dot", "fig2_cactus", "find_b3_witness", "first_fit", "girth",
    "gmn", "gmn_nonmonotone_witness", "grundy_at_least", "grundy_number", "gt", "induced_subgraph",
    "is_b_monotone", "is_b_valid", "is_cactus", "is_grundy_valid", "is_k4e_c4_free", "is_pivoted_tree",
    "is_proper", "is_tree", "m_of", "parse_coloring", "parse_graph", "planted_cactus", "random_family",
    "recolor_cactus", "recolor_girth6", "recolor_k4e", "run_verification", "serialize_coloring",
    "serialize_graph", "witness_decomposition",
]
