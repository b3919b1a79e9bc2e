#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Leitura e gravação de grafos no formato edge-list textual.

Formato:
    n m
    u v peso
    ...

Uma linha por aresta não direcionada, com u < v na gravação. O peso é gravado
com repr(), que preserva o float exatamente na releitura. Na leitura, linhas em
branco e linhas iniciadas por '#' são ignoradas; uma aresta pode aparecer nas
duas orientações desde que com o mesmo peso.
"""
import io
import math
from pathlib import Path
from typing import Dict, Iterable, TextIO, Tuple, Union

from pyapsp.core.graph import Graph
from pyapsp.data.client import GraphSource

Origem = Union[str, Path, TextIO]


def save_graph(g: Graph, dest: Union[str, Path, TextIO]) -> None:
    """
    Grava o grafo em edge-list.

    Args:
        g: Grafo
        dest: Caminho de arquivo ou stream de texto
    """
    linhas = [f"{g.n} {g.m}\n"]
    linhas.extend(f"{u} {v} {e!r}\n" for u, v, e in g.edges())
    if isinstance(dest, (str, Path)):
        caminho = Path(dest)
        caminho.parent.mkdir(parents=True, exist_ok=True)
        with open(caminho, "w", encoding="utf-8", newline="\n") as f:
            f.writelines(linhas)
    else:
        dest.writelines(linhas)


def _linhas_uteis(linhas: Iterable[str]) -> Iterable[Tuple[int, str]]:
    for numero, linha in enumerate(linhas, start=1):
        texto = linha.strip()
        if texto and not texto.startswith("#"):
            yield numero, texto


def _parse(linhas: Iterable[str]) -> Graph:
    uteis = _linhas_uteis(linhas)
    try:
        numero, cabecalho = next(uteis)
    except StopIteration:
        raise ValueError("Arquivo de grafo vazio: cabeçalho 'n m' ausente.")

    partes = cabecalho.split()
    try:
        if len(partes) != 2:
            raise ValueError
        n, m = int(partes[0]), int(partes[1])
    except ValueError:
        raise ValueError(f"linha {numero}: cabeçalho deve ser 'n m'. Recebido: {cabecalho!r}")
    if n < 0 or m < 0:
        raise ValueError(f"linha {numero}: n e m devem ser não negativos.")

    pesos: Dict[Tuple[int, int], float] = {}
    orientacao: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for numero, texto in uteis:
        partes = texto.split()
        if len(partes) != 3:
            raise ValueError(f"linha {numero}: esperado 'u v peso'. Recebido: {texto!r}")
        try:
            u, v, e = int(partes[0]), int(partes[1]), float(partes[2])
        except ValueError:
            raise ValueError(f"linha {numero}: valores inválidos em {texto!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"linha {numero}: vértice fora do intervalo 0..{n - 1}")
        if u == v:
            raise ValueError(f"linha {numero}: laço no vértice {u} não permitido")
        if not (math.isfinite(e) and e > 0):
            raise ValueError(f"linha {numero}: peso deve ser positivo e finito. Recebido: {partes[2]}")
        chave = (min(u, v), max(u, v))
        if chave in pesos:
            if orientacao[chave] == (u, v):
                raise ValueError(f"linha {numero}: aresta ({u}, {v}) duplicada")
            if pesos[chave] != e:
                raise ValueError(
                    f"linha {numero}: aresta ({u}, {v}) assimétrica: peso {e} difere de {pesos[chave]}"
                )
            continue
        pesos[chave] = e
        orientacao[chave] = (u, v)

    if len(pesos) != m:
        raise ValueError(f"Cabeçalho declara m={m} arestas, mas o arquivo tem {len(pesos)}.")
    return Graph.from_edges(n, ((u, v, e) for (u, v), e in pesos.items()))


def load_graph(src: Origem) -> Graph:
    """
    Lê um grafo em edge-list.

    Args:
        src: Caminho de arquivo ou stream de texto

    Raises:
        FileNotFoundError: Se o arquivo não existir
        ValueError: Linha malformada, peso não positivo, aresta duplicada ou
                    assimétrica, vértice fora do intervalo, m inconsistente
                    (com o número da linha quando aplicável)
    """
    if isinstance(src, (str, Path)):
        caminho = Path(src)
        if not caminho.exists():
            raise FileNotFoundError(f"Arquivo não encontrado: {caminho}")
        with open(caminho, "r", encoding="utf-8") as f:
            return _parse(f)
    return _parse(src)


def loads_graph(texto: str) -> Graph:
    """Lê um grafo a partir do texto edge-list."""
    return _parse(io.StringIO(texto))


class EdgeListFileClient(GraphSource):
    """
    Fonte de grafo a partir de um arquivo edge-list.

    O grafo é lido uma vez e mantido em cache.
    """

    def __init__(self, caminho: Union[str, Path], base_dir: Union[str, Path, None] = None):
        """
        Args:
            caminho: Caminho do arquivo (relativo a base_dir, se fornecido)
            base_dir: Diretório base opcional
        """
        self.caminho = Path(base_dir) / caminho if base_dir is not None else Path(caminho)
        self._grafo = None

    def carregar_grafo(self) -> Graph:
        if self._grafo is None:
            self._grafo = load_graph(self.caminho)
        return self._grafo

    def descrever(self) -> str:
        return f"arquivo {self.caminho.name}"
