#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Interface base para fontes de grafos.

Esta classe abstrata define a interface comum para todas as fontes de grafos
(arquivos edge-list, geradores sementeados, etc.), permitindo que os pipelines
funcionem com qualquer origem de forma transparente.
"""
from abc import ABC, abstractmethod

from pyapsp.core.graph import Graph


class GraphSource(ABC):
    """
    Interface base abstrata para obtenção de grafos.

    Define os métodos que todas as fontes devem fornecer.
    """

    @abstractmethod
    def carregar_grafo(self) -> Graph:
        """
        Obtém o grafo desta fonte.

        Returns:
            Graph validado
        """
        pass

    @abstractmethod
    def descrever(self) -> str:
        """
        Descrição curta da fonte, usada em mensagens e no campo graph das métricas.

        Returns:
            Texto como "hypercube n=64 seed=0" ou "arquivo grafo.txt"
        """
        pass

    def __enter__(self):
        """Suporte para context manager (with statement)."""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Suporte para context manager (with statement)."""
        pass
