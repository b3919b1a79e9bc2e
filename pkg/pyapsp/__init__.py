"""
PyAPSP - Caminhos mínimos entre todos os pares (PSTw e algoritmos de referência)
com instrumentação de acessos a vértices adjacentes.
"""

# Imports de subpastas
from pyapsp.core.graph import (
    Graph,
    WeightRange,
    gen_hypercube,
    gen_scale_free,
    graph_stats,
)
from pyapsp.core.indexed_queue import IndexedMinQueue
from pyapsp.core.metrics import RunMetrics, VerifyReport, alpha, verify_distances, verify_tree
from pyapsp.algorithms.pstw import run_pstw
from pyapsp.algorithms.baselines import apsp_dijkstra, apsp_floyd_warshall, apsp_peng, sssp_dijkstra
from pyapsp.data import GraphSource, EdgeListFileClient, GeneratorClient, load_graph, save_graph
from pyapsp.export.records import ExperimentConfig, ResultRecord
from pyapsp.export.experiment_pipeline import ExperimentPipeline, run_experiment

__all__ = [
    "Graph",
    "WeightRange",
    "gen_hypercube",
    "gen_scale_free",
    "graph_stats",
    "IndexedMinQueue",
    "RunMetrics",
    "VerifyReport",
    "alpha",
    "verify_distances",
    "verify_tree",
    "run_pstw",
    "sssp_dijkstra",
    "apsp_dijkstra",
    "apsp_peng",
    "apsp_floyd_warshall",
    "GraphSource",
    "EdgeListFileClient",
    "GeneratorClient",
    "load_graph",
    "save_graph",
    "ExperimentConfig",
    "ResultRecord",
    "ExperimentPipeline",
    "run_experiment",
]
