#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Algoritmos de referência: Dijkstra (uma fonte e todos os pares), Peng (Dijkstra
com reaproveitamento de colunas já calculadas) e Floyd-Warshall (oráculo).

Dijkstra e Peng usam a mesma IndexedMinQueue e o mesmo desempate do PSTw, de modo
que diferenças de α e de tempo vêm dos algoritmos e não das estruturas.
"""
import os
from typing import List, Optional, Tuple

import numpy as np

from pyapsp.core.graph import Graph
from pyapsp.core.indexed_queue import IndexedMinQueue
from pyapsp.core.matrices import NO_PARENT, nova_matriz_distancias, nova_matriz_pais
from pyapsp.core.metrics import RunMetrics, timed

LIMITE_ORACULO_PADRAO = 2048
VARIAVEL_LIMITE_ORACULO = "PST_ORACLE_CAP"


class ContadorAcessos:
    """Contador simples de acessos a vértices adjacentes."""

    __slots__ = ("total",)

    def __init__(self):
        self.total = 0


def sssp_dijkstra(
    g: Graph, s: int, counter: Optional[ContadorAcessos] = None
) -> Tuple[List[float], List[int]]:
    """
    Dijkstra clássico com decrease-key a partir de s.

    Cada vértice retirado da fila varre toda a sua adjacência; cada vizinho
    examinado conta um acesso.

    Returns:
        Tupla (distâncias, pais), com pais[s] = NO_PARENT
    """
    n = g.n
    dist = [float("inf")] * n
    pai = [NO_PARENT] * n
    resolvido = [False] * n
    dist[s] = 0.0
    fila = IndexedMinQueue()
    fila.enqueue(s, 0.0)
    acessos = 0
    while True:
        item = fila.dequeue_min()
        if item is None:
            break
        v, d_v = item
        resolvido[v] = True
        adj = g.adjacency[v]
        acessos += len(adj)
        for u, e in adj:
            if resolvido[u]:
                continue
            d_u = d_v + e
            if d_u < dist[u]:
                if u in fila:
                    fila.update(u, d_u)
                else:
                    fila.enqueue(u, d_u)
                dist[u] = d_u
                pai[u] = v
    if counter is not None:
        counter.total += acessos
    return dist, pai


def apsp_dijkstra(g: Graph) -> Tuple[np.ndarray, np.ndarray, RunMetrics]:
    """
    Executa sssp_dijkstra a partir de cada vértice.

    Em qualquer grafo conexo α = 2m/n; em grafos regulares de grau k, α = k.
    """
    D = nova_matriz_distancias(g.n)
    S = nova_matriz_pais(g.n)
    contador = ContadorAcessos()

    def _todas_as_fontes():
        for s in range(g.n):
            dist, pai = sssp_dijkstra(g, s, contador)
            D[:, s] = dist
            S[:, s] = pai

    _, segundos = timed(_todas_as_fontes)
    metrics = RunMetrics(
        algorithm="dijkstra", graph=f"n={g.n} m={g.m}", n=g.n,
        access_count=contador.total, wall_seconds=segundos,
    )
    return D, S, metrics


def ordem_peng(g: Graph) -> List[int]:
    """Ordem das fontes no Peng: grau decrescente, empate por id crescente."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def apsp_peng(g: Graph) -> Tuple[np.ndarray, np.ndarray, RunMetrics]:
    """
    Dijkstra a partir de cada fonte, reaproveitando colunas completas.

    Quando o vértice retirado v já tem sua coluna completa (foi fonte antes), todo
    u ainda não resolvido é relaxado com D[v, s] + D[u, v], com pai = S[u, v], e u
    fica marcado como coberto por essa coluna. Vértices retirados com a coluna
    completa ou com a marca não varrem a adjacência nem contam acessos: os caminhos
    que passam por eles já foram oferecidos pela coluna reaproveitada. Uma
    relaxação pela adjacência desfaz a marca.
    """
    n = g.n
    D = nova_matriz_distancias(n)
    S = nova_matriz_pais(n)
    completa = np.zeros(n, dtype=bool)
    contador = ContadorAcessos()

    def _todas_as_fontes():
        for s in ordem_peng(g):
            dist = np.full(n, np.inf)
            pai = np.full(n, NO_PARENT, dtype=np.int64)
            resolvido = np.zeros(n, dtype=bool)
            coberto = np.zeros(n, dtype=bool)
            dist[s] = 0.0
            fila = IndexedMinQueue()
            fila.enqueue(s, 0.0)
            while True:
                item = fila.dequeue_min()
                if item is None:
                    break
                v, d_v = item
                resolvido[v] = True
                if completa[v]:
                    # Reaproveita a coluna de v
                    candidatos = d_v + D[:, v]
                    melhora = (~resolvido) & (candidatos < dist)
                    for u in np.flatnonzero(melhora).tolist():
                        d_u = float(candidatos[u])
                        if u in fila:
                            fila.update(u, d_u)
                        else:
                            fila.enqueue(u, d_u)
                        dist[u] = d_u
                        pai[u] = S[u, v]
                        coberto[u] = True
                    continue
                if coberto[v]:
                    continue
                adj = g.adjacency[v]
                contador.total += len(adj)
                for u, e in adj:
                    if resolvido[u]:
                        continue
                    d_u = d_v + e
                    if d_u < dist[u]:
                        if u in fila:
                            fila.update(u, d_u)
                        else:
                            fila.enqueue(u, d_u)
                        dist[u] = d_u
                        pai[u] = v
                        coberto[u] = False
            D[:, s] = dist
            S[:, s] = pai
            completa[s] = True

    _, segundos = timed(_todas_as_fontes)
    metrics = RunMetrics(
        algorithm="peng", graph=f"n={g.n} m={g.m}", n=n,
        access_count=contador.total, wall_seconds=segundos,
    )
    return D, S, metrics


def obter_limite_oraculo(padrao: int = LIMITE_ORACULO_PADRAO) -> int:
    """
    Limite de n para Floyd-Warshall, sobrescrito pela variável PST_ORACLE_CAP.

    Raises:
        ValueError: Se a variável não for um inteiro >= 1
    """
    valor = os.environ.get(VARIAVEL_LIMITE_ORACULO)
    if valor is None or not valor.strip():
        return padrao
    try:
        limite = int(valor)
    except ValueError:
        raise ValueError(f"{VARIAVEL_LIMITE_ORACULO} deve ser inteiro. Recebido: {valor!r}")
    if limite < 1:
        raise ValueError(f"{VARIAVEL_LIMITE_ORACULO} deve ser >= 1. Recebido: {limite}")
    return limite


def apsp_floyd_warshall(g: Graph, cap: Optional[int] = None) -> np.ndarray:
    """
    Floyd-Warshall sobre a matriz de adjacência (oráculo de distâncias).

    O laço sobre o vértice intermediário k é explícito; cada passo relaxa a
    matriz inteira de uma vez com numpy.

    Args:
        g: Grafo
        cap: Maior n aceito (padrão: obter_limite_oraculo())

    Raises:
        ValueError: Se g.n exceder o limite
    """
    cap = obter_limite_oraculo() if cap is None else cap
    n = g.n
    if n > cap:
        raise ValueError(f"Floyd-Warshall limitado a n <= {cap}; grafo tem n={n}.")
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0.0)
    for u, v, e in g.edges():
        D[u, v] = e
        D[v, u] = e
    for k in range(n):
        np.minimum(D, D[:, k, None] + D[None, k, :], out=D)
    return D
