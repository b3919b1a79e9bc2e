"""
Algorithms module - PSTw e algoritmos de referência.
"""

from pyapsp.algorithms.pstw import run_pstw
from pyapsp.algorithms.baselines import apsp_dijkstra, apsp_floyd_warshall, apsp_peng, sssp_dijkstra

__all__ = [
    "run_pstw",
    "sssp_dijkstra",
    "apsp_dijkstra",
    "apsp_peng",
    "apsp_floyd_warshall"
]
