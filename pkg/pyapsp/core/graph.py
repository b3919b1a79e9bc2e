#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Representação de grafos não direcionados ponderados e geradores determinísticos.

Famílias de grafos usadas nos experimentos:
- hypercube: 2^d vértices, aresta entre ids que diferem em exatamente um bit
- scalefree: clique inicial de n' vértices e anexação preferencial ao grau

Os geradores são funções puras de (parâmetros, semente): a mesma entrada produz
exatamente o mesmo grafo, arestas e pesos. O PRNG é o PCG64 do numpy
(numpy.random.default_rng) semeado com um inteiro sem sinal de 64 bits.
"""
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

# Pares (vizinho, peso) de um vértice
Adjacencia = Tuple[Tuple[int, float], ...]

SEMENTE_MAXIMA = 2 ** 64 - 1
DIMENSAO_MAXIMA = 20


@dataclass(frozen=True)
class WeightRange:
    """
    Intervalo [lo, hi) dos pesos sorteados uniformemente pelos geradores.

    O padrão [0.1, 1.0) evita pesos próximos de zero.
    """
    lo: float = 0.1
    hi: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"Intervalo de pesos deve ser finito: [{self.lo}, {self.hi})")
        if not self.lo > 0:
            raise ValueError(f"Limite inferior dos pesos deve ser positivo. Recebido: {self.lo}")
        if self.hi < self.lo:
            raise ValueError(f"Limite superior ({self.hi}) menor que o inferior ({self.lo}).")

    @classmethod
    def parse(cls, texto: str) -> "WeightRange":
        """
        Converte texto no formato "lo,hi" (ex: "0.1,1.0").

        Raises:
            ValueError: Se o texto não tiver dois números separados por vírgula
        """
        partes = [p.strip() for p in str(texto).split(",")]
        if len(partes) != 2:
            raise ValueError(f"Intervalo de pesos deve ter o formato lo,hi. Recebido: {texto!r}")
        try:
            lo, hi = float(partes[0]), float(partes[1])
        except ValueError:
            raise ValueError(f"Intervalo de pesos com valor não numérico: {texto!r}")
        return cls(lo, hi)


@dataclass(frozen=True)
class Graph:
    """
    Grafo não direcionado ponderado, imutável após a construção.

    Invariantes verificados na construção:
    - ids de vértices 0..n-1
    - simetria: (v, w, e) presente se e somente se (w, v, e) presente
    - pesos finitos e estritamente positivos
    - sem laços e sem arestas paralelas (vizinhos em ordem estritamente crescente)
    """
    n: int
    adjacency: Tuple[Adjacencia, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Número de vértices negativo: {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError(
                f"Adjacência com {len(self.adjacency)} listas para n={self.n} vértices."
            )
        for v, adj in enumerate(self.adjacency):
            anterior = -1
            for w, e in adj:
                if not 0 <= w < self.n:
                    raise ValueError(f"Vértice {v}: vizinho {w} fora do intervalo 0..{self.n - 1}")
                if w == v:
                    raise ValueError(f"Vértice {v}: laço não permitido")
                if w <= anterior:
                    raise ValueError(f"Vértice {v}: vizinhos fora de ordem ou aresta paralela com {w}")
                if not (math.isfinite(e) and e > 0):
                    raise ValueError(f"Aresta ({v}, {w}): peso deve ser positivo e finito, recebido {e}")
                anterior = w
        for v, pesos in enumerate(self._mapa_pesos):
            for w, e in pesos.items():
                if self._mapa_pesos[w].get(v) != e:
                    raise ValueError(f"Aresta ({v}, {w}) sem simétrica de mesmo peso")

    @classmethod
    def from_edges(cls, n: int, arestas: Iterable[Tuple[int, int, float]]) -> "Graph":
        """
        Constrói o grafo a partir de arestas não direcionadas (u, v, peso).

        Args:
            n: Número de vértices
            arestas: Cada aresta listada uma única vez, em qualquer orientação

        Raises:
            ValueError: Aresta repetida, laço, vértice fora do intervalo ou peso inválido
        """
        listas: List[Dict[int, float]] = [{} for _ in range(n)]
        for u, v, e in arestas:
            u, v, e = int(u), int(v), float(e)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Aresta ({u}, {v}) com vértice fora do intervalo 0..{n - 1}")
            if u == v:
                raise ValueError(f"Laço no vértice {u} não permitido")
            if v in listas[u]:
                raise ValueError(f"Aresta ({u}, {v}) repetida")
            listas[u][v] = e
            listas[v][u] = e
        adjacency = tuple(tuple(sorted(pesos.items())) for pesos in listas)
        return cls(n, adjacency)

    @cached_property
    def _mapa_pesos(self) -> List[Dict[int, float]]:
        return [dict(adj) for adj in self.adjacency]

    @property
    def m(self) -> int:
        """Número de arestas não direcionadas."""
        return sum(len(adj) for adj in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(adj) for adj in self.adjacency), default=0)

    def weight(self, u: int, v: int) -> Optional[float]:
        """Peso da aresta (u, v), ou None se não forem adjacentes."""
        return self._mapa_pesos[u].get(v)

    def edges(self) -> List[Tuple[int, int, float]]:
        """Arestas (u, v, peso) com u < v, em ordem crescente de (u, v)."""
        return [(u, w, e) for u, adj in enumerate(self.adjacency) for w, e in adj if u < w]


class GraphStats(NamedTuple):
    n: int
    m: int
    average_degree: float
    connected: bool


def _validar_semente(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed <= SEMENTE_MAXIMA:
        raise ValueError(f"Semente deve ser um inteiro de 64 bits sem sinal. Recebido: {seed}")
    return seed


def _sortear_pesos(rng: np.random.Generator, wr: WeightRange, quantidade: int) -> List[float]:
    return rng.uniform(wr.lo, wr.hi, size=quantidade).tolist()


def gen_hypercube(d: int, wr: Optional[WeightRange] = None, seed: int = 0) -> Graph:
    """
    Gera o hipercubo de dimensão d com pesos uniformes em [lo, hi).

    Args:
        d: Dimensão (1 <= d <= 20); o grafo tem 2^d vértices, todos de grau d
        wr: Intervalo de pesos (padrão: WeightRange())
        seed: Semente de 64 bits

    Returns:
        Graph com d * 2^(d-1) arestas
    """
    if not 1 <= d <= DIMENSAO_MAXIMA:
        raise ValueError(f"Dimensão do hipercubo deve estar entre 1 e {DIMENSAO_MAXIMA}. Recebido: {d}")
    wr = wr or WeightRange()
    rng = np.random.default_rng(_validar_semente(seed))
    n = 1 << d
    pares = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    pesos = _sortear_pesos(rng, wr, len(pares))
    return Graph.from_edges(n, ((u, v, e) for (u, v), e in zip(pares, pesos)))


def sample_attachment_targets(graus: Sequence[int], k: int, rng: np.random.Generator) -> List[int]:
    """
    Sorteia k vértices distintos com probabilidade proporcional ao grau atual.

    Args:
        graus: Grau atual de cada vértice existente
        k: Número de alvos (sem reposição)
        rng: Gerador numpy

    Returns:
        Lista de ids sorteados, na ordem do sorteio
    """
    pesos = np.asarray(graus, dtype=np.float64)
    total = pesos.sum()
    if total <= 0:
        raise ValueError("Anexação preferencial exige pelo menos um vértice com grau positivo.")
    return rng.choice(len(pesos), size=k, replace=False, p=pesos / total).tolist()


def gen_scale_free(n: int, n_prime: int, wr: Optional[WeightRange] = None, seed: int = 0) -> Graph:
    """
    Gera um grafo livre de escala por anexação preferencial.

    Começa com o grafo completo em n' vértices; cada um dos n - n' vértices
    seguintes se liga a n' vértices existentes distintos, sorteados com
    probabilidade proporcional ao grau. Os pesos são sorteados depois da
    topologia, na ordem de criação das arestas.

    Args:
        n: Número total de vértices
        n_prime: Tamanho do clique inicial e arestas por vértice novo (2 <= n' < n)
        wr: Intervalo de pesos (padrão: WeightRange())
        seed: Semente de 64 bits

    Returns:
        Graph com n'(n'-1)/2 + (n - n') * n' arestas
    """
    if n_prime < 2 or n_prime >= n:
        raise ValueError(f"n' deve satisfazer 2 <= n' < n. Recebido: n={n}, n'={n_prime}")
    wr = wr or WeightRange()
    rng = np.random.default_rng(_validar_semente(seed))
    graus = np.zeros(n, dtype=np.int64)
    pares: List[Tuple[int, int]] = []

    # Clique inicial
    for u in range(n_prime):
        for v in range(u + 1, n_prime):
            pares.append((u, v))
    graus[:n_prime] = n_prime - 1

    for novo in range(n_prime, n):
        alvos = sample_attachment_targets(graus[:novo], n_prime, rng)
        for alvo in sorted(alvos):
            pares.append((alvo, novo))
            graus[alvo] += 1
        graus[novo] = n_prime

    pesos = _sortear_pesos(rng, wr, len(pares))
    return Graph.from_edges(n, ((u, v, e) for (u, v), e in zip(pares, pesos)))


def dense_n_prime(n: int) -> int:
    """n' do caso denso: round(sqrt(n))."""
    return int(round(math.sqrt(n)))


def graph_stats(g: Graph) -> GraphStats:
    """
    Estatísticas básicas: (n, m, grau médio = 2m/n, conexo).

    A conectividade é verificada por busca em largura a partir do vértice 0.
    """
    m = g.m
    grau_medio = (2 * m / g.n) if g.n else 0.0
    if g.n == 0:
        return GraphStats(0, 0, 0.0, True)

    visitado = [False] * g.n
    visitado[0] = True
    fila = deque([0])
    alcancados = 1
    while fila:
        v = fila.popleft()
        for w, _ in g.adjacency[v]:
            if not visitado[w]:
                visitado[w] = True
                alcancados += 1
                fila.append(w)
    return GraphStats(g.n, m, grau_medio, alcancados == g.n)
