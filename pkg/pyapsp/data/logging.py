#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de logging de execuções.

Registra uma linha por execução de algoritmo (um ResultRecord) em arquivo.
"""
import sys
from datetime import datetime
from pathlib import Path
from typing import Any

from pyapsp.core.utils import fmt_sig


def formatar_registro(record: Any) -> str:
    """
    Formata um ResultRecord como pares chave=valor numa única linha.

    Args:
        record: ResultRecord (ou objeto com os mesmos atributos)

    Returns:
        Texto como "family=hypercube n=64 n_prime=0 seed=0 algorithm=pstw ..."
    """
    alpha = "-" if record.alpha is None else fmt_sig(record.alpha)
    return (
        f"family={record.family} n={record.n} n_prime={record.n_prime} seed={record.seed} "
        f"algorithm={record.algorithm} access_count={record.access_count} alpha={alpha} "
        f"waits={record.waits} wall_seconds={fmt_sig(record.wall_seconds)} "
        f"verified={str(record.verified).lower()}"
    )


def log_execucao(record: Any, log_file: str = "logs/execucoes.log") -> None:
    """
    Registra uma execução em arquivo de log.

    Args:
        record: ResultRecord a ser logado
        log_file: Caminho do arquivo de log (padrão: logs/execucoes.log)
    """
    # Cria diretório se não existir
    log_path = Path(log_file)

    # Gera timestamp com milissegundos
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S.%f")[:-3]
    linha_log = f"[{timestamp}] {formatar_registro(record)}\n"

    # Escreve no arquivo (modo append)
    try:
        log_path.parent.mkdir(parents=True, exist_ok=True)
        with open(log_path, "a", encoding="utf-8") as f:
            f.write(linha_log)
    except Exception as e:
        # Não interrompe a execução se houver erro ao escrever log
        print(f"[WARNING] Erro ao escrever log de execução: {e}", file=sys.stderr)
