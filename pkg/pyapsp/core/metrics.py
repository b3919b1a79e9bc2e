#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Instrumentação comum aos algoritmos: contadores de acesso, α, tempo e relatórios
de verificação.

α é o número médio de acessos a vértices adjacentes: access_count / n².
Cada algoritmo define onde incrementa o contador; aqui só se divide.
"""
import time
from dataclasses import dataclass
from typing import Any, Callable, List, Tuple

import numpy as np

from pyapsp.core.graph import Graph
from pyapsp.core.matrices import NO_PARENT

TOLERANCIA_PADRAO = 1e-9


@dataclass
class RunMetrics:
    """
    Métricas de uma execução de algoritmo APSP.

    wait_count e sweeps só são usados pelo PSTw; os demais algoritmos deixam zero.
    """
    algorithm: str
    graph: str = ""
    n: int = 0
    access_count: int = 0
    wait_count: int = 0
    sweeps: int = 0
    wall_seconds: float = 0.0

    @property
    def alpha(self) -> float:
        return alpha(self, self.n)


def alpha(m: RunMetrics, n: int) -> float:
    """
    Calcula α = access_count / n².

    Raises:
        ValueError: Se n <= 0
    """
    if n <= 0:
        raise ValueError(f"α exige n > 0. Recebido: {n}")
    return m.access_count / (n * n)


@dataclass
class VerifyReport:
    """Resultado de uma verificação de distâncias e/ou árvores."""
    max_abs_error: float = 0.0
    mismatch_count: int = 0
    tree_violations: int = 0

    @property
    def passed(self) -> bool:
        return self.mismatch_count == 0 and self.tree_violations == 0

    def combinar(self, outro: "VerifyReport") -> "VerifyReport":
        """Junta dois relatórios (máximo dos erros, soma das contagens)."""
        return VerifyReport(
            max_abs_error=max(self.max_abs_error, outro.max_abs_error),
            mismatch_count=self.mismatch_count + outro.mismatch_count,
            tree_violations=self.tree_violations + outro.tree_violations,
        )

    def resumo(self) -> str:
        status = "OK" if self.passed else "FALHOU"
        return (
            f"{status} max_abs_error={self.max_abs_error:.3g} "
            f"mismatch_count={self.mismatch_count} tree_violations={self.tree_violations}"
        )


def verify_distances(D, D_oracle, tol: float = TOLERANCIA_PADRAO) -> VerifyReport:
    """
    Compara duas matrizes de distância elemento a elemento.

    Uma célula confere quando |Δ| <= tol. NaN conta como diferença infinita.

    Args:
        D: Matriz calculada
        D_oracle: Matriz de referência
        tol: Tolerância absoluta

    Raises:
        ValueError: Se as formas das matrizes forem diferentes
    """
    A = np.asarray(D, dtype=np.float64)
    B = np.asarray(D_oracle, dtype=np.float64)
    if A.shape != B.shape:
        raise ValueError(f"Matrizes com formas diferentes: {A.shape} e {B.shape}")
    if A.size == 0:
        return VerifyReport()

    with np.errstate(invalid="ignore"):
        diff = np.abs(A - B)
    diff[A == B] = 0.0
    diff[np.isnan(diff)] = np.inf
    return VerifyReport(
        max_abs_error=float(diff.max()),
        mismatch_count=int(np.count_nonzero(diff > tol)),
    )


def _cadeias_validas(coluna: np.ndarray, raiz: int) -> List[bool]:
    """
    Para cada vértice, indica se a cadeia de predecessores chega à raiz sem ciclo.

    Estados: 0 não visitado, 1 no caminho atual, 2 válido, 3 inválido.
    """
    n = len(coluna)
    estado = [0] * n
    estado[raiz] = 2
    for inicio in range(n):
        caminho = []
        v = inicio
        while True:
            if not 0 <= v < n:
                resultado = 3
                break
            if estado[v] == 1:
                resultado = 3
                break
            if estado[v] in (2, 3):
                resultado = estado[v]
                break
            estado[v] = 1
            caminho.append(v)
            v = int(coluna[v])
        for u in caminho:
            estado[u] = resultado
    return [e == 2 for e in estado]


def verify_tree(S, D, g: Graph, tol: float = TOLERANCIA_PADRAO) -> VerifyReport:
    """
    Verifica se cada coluna de S codifica uma árvore de caminhos mínimos.

    Para a coluna j (fonte v_j) e cada i != j, com p = S[i, j]:
    - p é um vértice adjacente a i
    - D[i, j] == D[p, j] + peso(p, i) dentro de tol
    - a cadeia de predecessores a partir de i chega a j sem ciclos

    A diagonal deve ter NO_PARENT e distância zero. Cada célula conta no máximo
    uma violação; violações são contadas, nunca lançadas.
    """
    S = np.asarray(S)
    D = np.asarray(D, dtype=np.float64)
    n = g.n
    if S.shape != (n, n) or D.shape != (n, n):
        raise ValueError(f"Matrizes devem ser {n}x{n}: S={S.shape}, D={D.shape}")

    violacoes = 0
    erro_maximo = 0.0
    for j in range(n):
        coluna = S[:, j]
        validas = _cadeias_validas(coluna, j)
        for i in range(n):
            p = int(coluna[i])
            if i == j:
                if p != NO_PARENT or D[j, j] != 0.0:
                    violacoes += 1
                continue
            peso = g.weight(p, i) if 0 <= p < n else None
            if peso is None or not validas[i]:
                violacoes += 1
                continue
            erro = abs(D[i, j] - (D[p, j] + peso))
            erro_maximo = max(erro_maximo, erro)
            if not erro <= tol:
                violacoes += 1
    return VerifyReport(max_abs_error=erro_maximo, tree_violations=violacoes)


def timed(f: Callable[..., Any], *args, **kwargs) -> Tuple[Any, float]:
    """Executa f(*args, **kwargs) e retorna (resultado, segundos de relógio monotônico)."""
    inicio = time.perf_counter()
    resultado = f(*args, **kwargs)
    return resultado, time.perf_counter() - inicio
