#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Fonte de grafos gerados deterministicamente (hypercube e scalefree).
"""
from typing import Optional, Union

from pyapsp.core.graph import (
    Graph,
    WeightRange,
    dense_n_prime,
    gen_hypercube,
    gen_scale_free,
)
from pyapsp.data.client import GraphSource

FAMILIAS = ("hypercube", "scalefree")


def eh_potencia_de_dois(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def resolver_n_prime(regra: Union[int, str], n: int) -> int:
    """
    Converte a regra de n' no valor usado para um dado n.

    Args:
        regra: Inteiro fixo ou "sqrt" (round(sqrt(n)), caso denso)
        n: Número de vértices

    Raises:
        ValueError: Se a regra não for inteiro nem "sqrt"
    """
    if isinstance(regra, str):
        texto = regra.strip().lower()
        if texto == "sqrt":
            return dense_n_prime(n)
        try:
            return int(texto)
        except ValueError:
            raise ValueError(f"n' deve ser inteiro ou 'sqrt'. Recebido: {regra!r}")
    return int(regra)


class GeneratorClient(GraphSource):
    """
    Fonte de grafo sementeado de uma das famílias de experimento.

    O grafo é gerado na primeira chamada a carregar_grafo e mantido em cache.
    """

    def __init__(
        self,
        family: str,
        n: int,
        n_prime: Union[int, str] = 2,
        weights: Optional[WeightRange] = None,
        seed: int = 0,
    ):
        """
        Args:
            family: "hypercube" ou "scalefree"
            n: Número de vértices (potência de dois para hypercube)
            n_prime: Regra de n' para scalefree (inteiro ou "sqrt"); ignorado para hypercube
            weights: Intervalo de pesos (padrão: WeightRange())
            seed: Semente de 64 bits

        Raises:
            ValueError: Família desconhecida ou n inválido para a família
        """
        family = str(family).strip().lower()
        if family not in FAMILIAS:
            raise ValueError(f"Família desconhecida: {family!r}. Valores aceitos: {', '.join(FAMILIAS)}")
        if family == "hypercube" and not eh_potencia_de_dois(n):
            raise ValueError(f"hypercube exige n potência de dois. Recebido: {n}")
        self.family = family
        self.n = int(n)
        self.n_prime = 0 if family == "hypercube" else resolver_n_prime(n_prime, self.n)
        self.weights = weights or WeightRange()
        self.seed = int(seed)
        self._grafo: Optional[Graph] = None

    def carregar_grafo(self) -> Graph:
        if self._grafo is None:
            if self.family == "hypercube":
                self._grafo = gen_hypercube(self.n.bit_length() - 1, self.weights, self.seed)
            else:
                self._grafo = gen_scale_free(self.n, self.n_prime, self.weights, self.seed)
        return self._grafo

    def descrever(self) -> str:
        if self.family == "hypercube":
            return f"hypercube n={self.n} seed={self.seed}"
        return f"scalefree n={self.n} n'={self.n_prime} seed={self.seed}"
