"""
Implementações concretas de GraphSource.
"""

from pyapsp.data.clients.file import EdgeListFileClient, load_graph, save_graph
from pyapsp.data.clients.generator import GeneratorClient

__all__ = [
    "EdgeListFileClient",
    "GeneratorClient",
    "load_graph",
    "save_graph"
]
