#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Utilitários compartilhados para o módulo pyapsp.
"""
import math
import re
from typing import List

# Nomes canônicos dos algoritmos, na ordem de execução e de relatório
ALGORITMOS = ("pstw", "dijkstra", "peng", "floyd")

_ALIASES_ALGORITMO = {
    "pstw": "pstw",
    "dijkstra": "dijkstra",
    "ap-dijkstra": "dijkstra",
    "apdijkstra": "dijkstra",
    "peng": "peng",
    "floyd": "floyd",
    "floyd-warshall": "floyd",
    "fw": "floyd",
}


def fmt_sig(v: float, digitos: int = 6) -> str:
    """
    Formata número com `digitos` algarismos significativos, mantendo zeros à direita.

    Ex: 6.0 -> "6.00000", 0.0123 -> "0.0123000"
    """
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    return f"{float(v):#.{digitos}g}"


def parse_lista_inteiros(texto: str) -> List[int]:
    """
    Converte "64,256,1024" em [64, 256, 1024]. Vírgulas sobrando são ignoradas.

    Raises:
        ValueError: Se algum item não for inteiro ou a lista ficar vazia
    """
    itens = [p.strip() for p in re.split(r"[,\s]+", str(texto)) if p.strip()]
    if not itens:
        raise ValueError(f"Lista de inteiros vazia: {texto!r}")
    try:
        return [int(p) for p in itens]
    except ValueError:
        raise ValueError(f"Lista de inteiros inválida: {texto!r}")


def parse_sementes(texto: str) -> List[int]:
    """
    Interpreta a lista de sementes.

    Um inteiro isolado k significa as sementes 0..k-1; uma lista com vírgula é
    literal ("42," é a semente 42).
    """
    texto = str(texto).strip()
    if "," not in texto:
        try:
            k = int(texto)
        except ValueError:
            raise ValueError(f"Sementes devem ser uma contagem ou lista: {texto!r}")
        if k < 1:
            raise ValueError(f"Contagem de sementes deve ser >= 1. Recebido: {k}")
        return list(range(k))
    return parse_lista_inteiros(texto)


def normalizar_algoritmo(nome: str) -> str:
    """
    Converte um nome de algoritmo (aceita apelidos como "ap-dijkstra") no nome canônico.

    Raises:
        ValueError: Se o algoritmo for desconhecido
    """
    chave = str(nome).strip().lower().replace("_", "-")
    if chave not in _ALIASES_ALGORITMO:
        raise ValueError(
            f"Algoritmo desconhecido: {nome!r}. Valores aceitos: {', '.join(ALGORITMOS)}"
        )
    return _ALIASES_ALGORITMO[chave]


def parse_algoritmos(texto: str) -> List[str]:
    """Converte "pstw,dijkstra" em lista canônica, sem repetições, na ordem dada."""
    nomes: List[str] = []
    for parte in str(texto).split(","):
        if not parte.strip():
            continue
        nome = normalizar_algoritmo(parte)
        if nome not in nomes:
            nomes.append(nome)
    return nomes
