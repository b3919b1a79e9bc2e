"""
Data module - Fontes de grafos.
"""

from pyapsp.data.client import GraphSource
from pyapsp.data.clients import EdgeListFileClient, GeneratorClient, load_graph, save_graph

__all__ = [
    "GraphSource",
    "EdgeListFileClient",
    "GeneratorClient",
    "load_graph",
    "save_graph"
]
