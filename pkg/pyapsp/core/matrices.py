#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Matrizes de saída dos algoritmos de caminhos mínimos entre todos os pares.

- Matriz de distâncias D (n x n): D[i, j] é a distância entre v_i e v_j.
- Matriz de pais S (n x n): S[i, j] é o predecessor de v_i no caminho mínimo a
  partir da fonte v_j; a coluna j codifica a árvore de caminhos mínimos T(v_j).

Internamente os ids são 0-based e as sentinelas ficam fora do intervalo de ids.
Para exportação há a conversão para ids 1-based,
com NO_PARENT = -1 e NOT_SEARCHED = 0.
"""
import numpy as np

NO_PARENT = -1
NOT_SEARCHED = -2

# Sentinelas do formato exportado (ids 1-based)
NO_PARENT_EXPORTADO = -1
NOT_SEARCHED_EXPORTADO = 0


def nova_matriz_distancias(n: int) -> np.ndarray:
    """Cria a matriz D zerada (n x n)."""
    return np.zeros((n, n), dtype=np.float64)


def nova_matriz_pais(n: int) -> np.ndarray:
    """Cria a matriz S com NO_PARENT na diagonal e NOT_SEARCHED no restante."""
    S = np.full((n, n), NOT_SEARCHED, dtype=np.int64)
    np.fill_diagonal(S, NO_PARENT)
    return S


def parent_matrix_one_based(S: np.ndarray) -> np.ndarray:
    """
    Converte S para o formato exportado: ids 1-based, NO_PARENT = -1, NOT_SEARCHED = 0.

    Args:
        S: Matriz de pais com ids 0-based e sentinelas internas

    Returns:
        Nova matriz com a codificação exportada
    """
    S = np.asarray(S, dtype=np.int64)
    saida = S + 1
    saida[S == NO_PARENT] = NO_PARENT_EXPORTADO
    saida[S == NOT_SEARCHED] = NOT_SEARCHED_EXPORTADO
    return saida
