#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuração de experimento e registros de resultado.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

from pyapsp.core.graph import WeightRange
from pyapsp.core.utils import ALGORITMOS
from pyapsp.data.clients.generator import FAMILIAS, eh_potencia_de_dois, resolver_n_prime

FORMATOS = ("csv", "markdown", "xlsx")
N_PADRAO = (64, 256, 1024)
N_ESTENDIDO = 4096
SEMENTES_PADRAO = 5

COLUNAS_CSV = (
    "family", "n", "n_prime", "seed", "algorithm",
    "wall_seconds", "access_count", "alpha", "waits", "verified",
)


@dataclass
class ExperimentConfig:
    """
    Parâmetros de uma campanha de medição.

    Attributes:
        family: "hypercube" ou "scalefree"
        ns: Valores de n (potências de dois para hypercube)
        n_prime: Regra de n' para scalefree: inteiro fixo ou "sqrt"
        weights: Intervalo dos pesos
        seeds: Sementes; cada (n, semente) gera um grafo
        algorithms: Algoritmos a executar, na ordem dos registros
        verify: Verifica contra o oráculo Floyd-Warshall quando n <= limite
        out: Arquivo de saída (None: saída padrão)
        format: "csv", "markdown" ou "xlsx"
        no_timing: Zera wall_seconds para saída byte-idêntica
        jobs: Processos em paralelo (1 = sequencial)
        oracle_cap: Limite de n do oráculo (None: PST_ORACLE_CAP ou 2048)
        run_log: Arquivo de log de execuções (None: desabilitado)
    """
    family: str = "hypercube"
    ns: List[int] = field(default_factory=lambda: list(N_PADRAO))
    n_prime: Union[int, str] = 2
    weights: WeightRange = field(default_factory=WeightRange)
    seeds: List[int] = field(default_factory=lambda: list(range(SEMENTES_PADRAO)))
    algorithms: List[str] = field(default_factory=lambda: list(ALGORITMOS))
    verify: bool = False
    out: Optional[Path] = None
    format: str = "csv"
    no_timing: bool = False
    jobs: int = 1
    oracle_cap: Optional[int] = None
    run_log: Optional[str] = None

    def validar(self) -> None:
        """
        Valida a configuração.

        Raises:
            ValueError: Família, n, n', algoritmos, sementes, formato ou jobs inválidos
        """
        if self.family not in FAMILIAS:
            raise ValueError(f"Família desconhecida: {self.family!r}. Valores aceitos: {', '.join(FAMILIAS)}")
        if not self.ns:
            raise ValueError("Informe ao menos um valor de n.")
        if not self.algorithms:
            raise ValueError("Conjunto de algoritmos vazio.")
        desconhecidos = [a for a in self.algorithms if a not in ALGORITMOS]
        if desconhecidos:
            raise ValueError(f"Algoritmos desconhecidos: {', '.join(desconhecidos)}")
        if not self.seeds:
            raise ValueError("Informe ao menos uma semente.")
        repetidas = sorted({s for s in self.seeds if self.seeds.count(s) > 1})
        if repetidas:
            raise ValueError(f"Sementes repetidas: {', '.join(map(str, repetidas))}")
        if self.format not in FORMATOS:
            raise ValueError(f"Formato deve ser um de {', '.join(FORMATOS)}. Recebido: {self.format!r}")
        if self.format == "xlsx" and self.out is None:
            raise ValueError("Formato xlsx exige --out.")
        if self.jobs < 1:
            raise ValueError(f"jobs deve ser >= 1. Recebido: {self.jobs}")
        for n in self.ns:
            if self.family == "hypercube":
                if n < 2 or not eh_potencia_de_dois(n):
                    raise ValueError(f"hypercube exige n potência de dois >= 2. Recebido: {n}")
            else:
                n_prime = resolver_n_prime(self.n_prime, n)
                if n_prime < 2 or n_prime >= n:
                    raise ValueError(f"scalefree exige 2 <= n' < n. Recebido: n={n}, n'={n_prime}")


@dataclass
class ResultRecord:
    """
    Resultado de um algoritmo sobre uma instância de grafo.

    alpha é None para Floyd-Warshall (sem α definido).
    """
    family: str
    n: int
    n_prime: int
    seed: int
    algorithm: str
    wall_seconds: float
    access_count: int
    alpha: Optional[float]
    waits: int
    verified: bool
