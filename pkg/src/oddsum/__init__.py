"""Odd-sum colorings, odd-dominating sets, and the graph families around them."""

from oddsum.chios import OddSumCertificate, odd_sum_chromatic, oracle_odd_sum_chromatic, validate_odd_sum_coloring
from oddsum.coloring import ProperColoring, chromatic_number
from oddsum.domination import GF2System, count_odd_dominating_sets, enumerate_odd_dominating_sets, solve_odd_domination
from oddsum.graph import INFINITE, Graph, VertexSet, build_graph, girth

__all__ = [
    "INFINITE",
    "GF2System",
    "Graph",
    "OddSumCertificate",
    "ProperColoring",
    "VertexSet",
    "build_graph",
    "chromatic_number",
    "count_odd_dominating_sets",
    "enumerate_odd_dominating_sets",
    "girth",
    "odd_sum_chromatic",
    "oracle_odd_sum_chromatic",
    "solve_odd_domination",
    "validate_odd_sum_coloring",
]
