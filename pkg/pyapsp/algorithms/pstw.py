#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
PSTw: caminhos mínimos entre todos os pares por poda com árvores de caminhos
mínimos de vértices adjacentes (grafos ponderados).

Cada vértice v mantém sua árvore T(v). As árvores crescem em varreduras
round-robin, uma chamada de `extend` por fonte ativa e por varredura, em ordem
crescente de id. Ao determinar w em T(v), em vez de varrer a adjacência de w,
o algoritmo percorre os filhos de w na árvore do vizinho por onde w foi
alcançado (o t-vértice `cor`). Se esse t-vértice ainda não está determinado na
outra árvore, o par volta para a fila com a mesma prioridade (espera).

Convenções das matrizes (ver pyapsp.core.matrices): a coluna j de D e S
corresponde à fonte v_j.
"""
from typing import Dict, List, Optional, Tuple

import numpy as np

from pyapsp.core.graph import Graph, graph_stats
from pyapsp.core.indexed_queue import IndexedMinQueue
from pyapsp.core.matrices import NOT_SEARCHED, nova_matriz_distancias, nova_matriz_pais
from pyapsp.core.metrics import RunMetrics, timed


class TreeVertex:
    """
    Nó (t-vértice) de uma árvore de caminhos mínimos.

    Attributes:
        vertex: id do vértice do grafo
        cor: t-vértice do mesmo vértice na árvore do vizinho por onde foi alcançado
        parent: t-vértice pai (None na raiz)
        children: filhos indexados pelo id do vértice, em ordem de inserção
        is_determined: distância a partir da fonte já é definitiva
        parent_edge_len: peso da aresta até o pai
    """

    __slots__ = ("vertex", "cor", "parent", "children", "is_determined", "parent_edge_len")

    def __init__(
        self,
        vertex: int,
        cor: Optional["TreeVertex"] = None,
        parent: Optional["TreeVertex"] = None,
        parent_edge_len: float = 0.0,
    ):
        self.vertex = vertex
        self.cor = cor
        self.parent = parent
        self.children: Dict[int, "TreeVertex"] = {}
        self.is_determined = False
        self.parent_edge_len = parent_edge_len
        if parent is not None:
            parent.children[vertex] = self

    def reparent(self, novo_pai: "TreeVertex", parent_edge_len: float) -> None:
        """Move o t-vértice para baixo de novo_pai, mantendo pai/filhos consistentes."""
        if self.parent is not None:
            del self.parent.children[self.vertex]
        self.parent = novo_pai
        novo_pai.children[self.vertex] = self
        self.parent_edge_len = parent_edge_len

    def __repr__(self) -> str:
        pai = self.parent.vertex if self.parent is not None else None
        return f"TreeVertex({self.vertex}, parent={pai}, determined={self.is_determined})"


class SourceState:
    """
    Estado de busca de uma fonte: raiz de T(id), fila e mapa id -> t-vértice.

    adj guarda pares (SourceState do vizinho, peso) para que o ramo de criação dos
    vizinhos alcance diretamente a raiz da árvore de cada vizinho.
    """

    __slots__ = ("id", "adj", "root", "queue", "tv_map")

    def __init__(self, id: int):
        self.id = id
        self.adj: Tuple[Tuple["SourceState", float], ...] = ()
        self.root: Optional[TreeVertex] = None
        self.queue = IndexedMinQueue()
        self.tv_map: Dict[int, TreeVertex] = {}

    def __repr__(self) -> str:
        return f"SourceState({self.id}, criados={len(self.tv_map)}, fila={len(self.queue)})"


def init_sources(g: Graph) -> Tuple[List[SourceState], np.ndarray, np.ndarray]:
    """
    Cria um SourceState por vértice, D zerada e S com sentinelas.

    Raises:
        ValueError: Se o grafo for desconexo (D zerada não distingue "não alcançado"
                    de distância zero)
    """
    if not graph_stats(g).connected:
        raise ValueError("PSTw exige grafo conexo.")
    estados = [SourceState(v) for v in range(g.n)]
    for v, adj in enumerate(g.adjacency):
        estados[v].adj = tuple((estados[w], e) for w, e in adj)
    return estados, nova_matriz_distancias(g.n), nova_matriz_pais(g.n)


def extend(v: SourceState, D: np.ndarray, S: np.ndarray, metrics: Optional[RunMetrics] = None) -> bool:
    """
    Estende T(v) em um passo.

    Três ramos:
    1. árvore vazia: cria a raiz, já determinada
    2. só a raiz: cria os vizinhos de v (com cor = raiz do vizinho) e os enfileira
    3. caso geral: retira o mínimo w' da fila; se w'.cor ainda não está
       determinado, reenfileira com a mesma prioridade (espera); senão determina w'
       e relaxa os filhos de w'.cor

    Args:
        v: Estado da fonte
        D, S: Matrizes criadas por init_sources
        metrics: Contadores de acesso e de espera (opcional)

    Returns:
        False quando a fila de v fica vazia (todos os caminhos a partir de v obtidos)
    """
    tv_map = v.tv_map
    src = v.id

    if not tv_map:
        raiz = TreeVertex(src)
        raiz.is_determined = True
        v.root = raiz
        tv_map[src] = raiz
        return True

    if len(tv_map) == 1:
        raiz = v.root
        for w, e in v.adj:
            if w.root is None:
                raise RuntimeError(f"Raiz de T({w.id}) ainda não criada ao expandir T({src}).")
            D[w.id, src] = e
            S[w.id, src] = src
            tv_map[w.id] = TreeVertex(w.id, cor=w.root, parent=raiz, parent_edge_len=e)
            v.queue.enqueue(w.id, e)
        if metrics is not None:
            metrics.access_count += len(v.adj)
        return len(v.queue) > 0

    item = v.queue.dequeue_min()
    if item is None:
        raise AssertionError(f"Fila de T({src}) vazia no ramo de extensão.")
    w, d = item
    w1 = tv_map[w]
    w2 = w1.cor
    if not w2.is_determined:
        # espera
        v.queue.enqueue(w, d)
        if metrics is not None:
            metrics.wait_count += 1
        return True

    w1.is_determined = True
    d_w = D[w, src]
    filhos = list(w2.children.values())
    if metrics is not None:
        metrics.access_count += len(filhos)
    for x2 in filhos:
        x = x2.vertex
        if x == src:
            continue
        d_x = d_w + x2.parent_edge_len
        if S[x, src] == NOT_SEARCHED:
            tv_map[x] = TreeVertex(x, cor=x2, parent=w1, parent_edge_len=x2.parent_edge_len)
            v.queue.enqueue(x, d_x)
            D[x, src] = d_x
            S[x, src] = w
        elif d_x < D[x, src]:
            x1 = tv_map[x]
            v.queue.update(x, d_x)
            x1.cor = x2
            x1.reparent(w1, x2.parent_edge_len)
            D[x, src] = d_x
            S[x, src] = w
    return len(v.queue) > 0


def _verificar_consistencia(v: SourceState, D: np.ndarray, determinados: Dict[int, float]) -> None:
    """Checagens de depuração de T(v) após um extend."""
    for x, tv in v.tv_map.items():
        if tv.vertex != x:
            raise AssertionError(f"T({v.id}): tv_map[{x}] aponta para o vértice {tv.vertex}")
        if tv.parent is not None and tv.parent.children.get(x) is not tv:
            raise AssertionError(f"T({v.id}): {x} ausente dos filhos do pai {tv.parent.vertex}")
        for filho in tv.children.values():
            if filho.parent is not tv:
                raise AssertionError(f"T({v.id}): filho {filho.vertex} não aponta para o pai {x}")
        if tv.cor is not None and tv.cor.vertex != x:
            raise AssertionError(f"T({v.id}): cor de {x} aponta para o vértice {tv.cor.vertex}")
        if x in v.queue and v.queue.priority(x) != D[x, v.id]:
            raise AssertionError(
                f"T({v.id}): prioridade de {x} na fila ({v.queue.priority(x)}) difere de D ({D[x, v.id]})"
            )
        if tv.is_determined:
            anterior = determinados.setdefault(x, float(D[x, v.id]))
            if anterior != D[x, v.id]:
                raise AssertionError(
                    f"T({v.id}): distância de {x} mudou após determinado ({anterior} -> {D[x, v.id]})"
                )


def run_pstw(g: Graph, verificar_consistencia: bool = False) -> Tuple[np.ndarray, np.ndarray, RunMetrics]:
    """
    Executa o PSTw até que todas as árvores estejam completas.

    O tempo medido exclui a inicialização (init_sources).

    Args:
        g: Grafo conexo com pesos positivos
        verificar_consistencia: Se True, verifica invariantes das árvores após cada extend

    Returns:
        Tupla (D, S, RunMetrics)

    Raises:
        RuntimeError: Se o limite de 10·n·n varreduras for atingido ou se uma varredura
                      inteira só produzir esperas
    """
    estados, D, S = init_sources(g)
    metrics = RunMetrics(algorithm="pstw", graph=f"n={g.n} m={g.m}", n=g.n)
    limite = 10 * g.n * g.n
    determinados: Dict[int, Dict[int, float]] = {v.id: {} for v in estados}

    def _laco():
        ativos = estados
        while ativos:
            metrics.sweeps += 1
            if metrics.sweeps > limite:
                raise RuntimeError(f"PSTw excedeu o limite de {limite} varreduras (n={g.n}).")
            esperas_antes = metrics.wait_count
            proximos = []
            for v in ativos:
                if extend(v, D, S, metrics):
                    proximos.append(v)
                if verificar_consistencia:
                    _verificar_consistencia(v, D, determinados[v.id])
            if metrics.wait_count - esperas_antes == len(ativos):
                raise RuntimeError(
                    f"PSTw sem progresso na varredura {metrics.sweeps}: "
                    f"{len(ativos)} fontes ativas, todas em espera."
                )
            ativos = proximos

    _, metrics.wall_seconds = timed(_laco)
    return D, S, metrics
