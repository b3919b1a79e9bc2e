"""
Core module - Grafos, fila indexada, matrizes e métricas.
"""

from pyapsp.core.graph import Graph, GraphStats, WeightRange
from pyapsp.core.indexed_queue import IndexedMinQueue
from pyapsp.core.metrics import RunMetrics, VerifyReport
from pyapsp.core import utils

__all__ = [
    "Graph",
    "GraphStats",
    "WeightRange",
    "IndexedMinQueue",
    "RunMetrics",
    "VerifyReport",
    "utils"
]
