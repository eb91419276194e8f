"""
Exact oracle for small graphs: spanning-tree enumeration, exact tree-stretch,
tree k-spanner decisions and the Matrix-Tree count used to cross-check them.
"""

from src.solver.enumeration import SpanningTreeEnumerator, enumerate_spanning_trees
from src.solver.exact import bfs_trees, exact_tree_stretch, k_spanner_decision
from src.solver.kirchhoff import count_spanning_trees, laplacian_matrix
from src.solver.types import SolveBudget, SolveResult, SpannerDecision
