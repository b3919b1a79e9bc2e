#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Verificação cruzada: roda PSTw, Dijkstra e Peng sobre um grafo e confere
distâncias contra o oráculo Floyd-Warshall e as árvores codificadas em S.

Uso:
  python -m pyapsp.export.verify_pipeline --grafo grafo.txt
  python -m pyapsp.export.verify_pipeline --family hypercube --n 32 --seed 7

Código de saída 0 somente se todas as verificações passarem.
"""
import argparse
import sys
from typing import Optional, Sequence

from pyapsp.algorithms.baselines import apsp_floyd_warshall, obter_limite_oraculo
from pyapsp.core.graph import WeightRange, graph_stats
from pyapsp.core.metrics import TOLERANCIA_PADRAO, verify_distances, verify_tree
from pyapsp.data.client import GraphSource
from pyapsp.data.clients.file import EdgeListFileClient
from pyapsp.data.clients.generator import GeneratorClient
from pyapsp.export.exporters import salvar_matrizes
from pyapsp.export.experiment_pipeline import EXECUTORES


def criar_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description="Verifica os algoritmos APSP contra o oráculo Floyd-Warshall.")
    ap.add_argument("--grafo", default=None, help="Arquivo edge-list (alternativa ao gerador)")
    ap.add_argument("--family", choices=["hypercube", "scalefree"], default="hypercube", help="Família do gerador (default: hypercube)")
    ap.add_argument("--n", type=int, default=32, help="Número de vértices do gerador (default: 32)")
    ap.add_argument("--nprime", default="2", help="n' para scalefree: inteiro ou sqrt (default: 2)")
    ap.add_argument("--weights", default="0.1,1.0", help="Intervalo de pesos lo,hi (default: 0.1,1.0)")
    ap.add_argument("--seed", type=int, default=0, help="Semente do gerador (default: 0)")
    ap.add_argument("--tol", type=float, default=TOLERANCIA_PADRAO, help="Tolerância absoluta (default: 1e-9)")
    ap.add_argument("--debug", action="store_true", help="Verifica invariantes das árvores do PSTw a cada passo")
    ap.add_argument("--dump-matrices", default=None, help="Diretório para gravar D e S de cada algoritmo em CSV")
    return ap


def _criar_fonte(args: argparse.Namespace) -> GraphSource:
    if args.grafo:
        return EdgeListFileClient(args.grafo)
    return GeneratorClient(
        args.family, args.n, args.nprime, WeightRange.parse(args.weights), args.seed
    )


def cmd_verify(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa a verificação e imprime um relatório por algoritmo.

    Returns:
        0 se todos passarem; 1 em qualquer divergência ou erro de entrada
    """
    args = criar_parser().parse_args(argv)
    try:
        fonte = _criar_fonte(args)
        g = fonte.carregar_grafo()
        if not graph_stats(g).connected:
            raise ValueError(f"{fonte.descrever()}: grafo desconexo.")
        cap = obter_limite_oraculo()
        oraculo = apsp_floyd_warshall(g, cap)
    except Exception as e:
        print(f"ERRO: {e}", file=sys.stderr)
        return 1

    stats = graph_stats(g)
    print(
        f"{fonte.descrever()}: n={stats.n} m={stats.m} "
        f"grau médio={stats.average_degree:.3f} grau máximo={g.max_degree()}"
    )

    todos_ok = True
    for algoritmo, executar in EXECUTORES.items():
        try:
            if algoritmo == "pstw":
                D, S, metrics = executar(g, verificar_consistencia=args.debug)
            else:
                D, S, metrics = executar(g)
        except (AssertionError, RuntimeError) as e:
            print(f"{algoritmo:<9} FALHOU {e}")
            todos_ok = False
            continue
        relatorio = verify_distances(D, oraculo, args.tol).combinar(verify_tree(S, D, g, args.tol))
        print(f"{algoritmo:<9} {relatorio.resumo()} alpha={metrics.alpha:.4f}")
        todos_ok = todos_ok and relatorio.passed
        if args.dump_matrices:
            salvar_matrizes(D, S, args.dump_matrices, algoritmo)
    return 0 if todos_ok else 1


def main() -> None:
    """Função principal para interface CLI."""
    sys.exit(cmd_verify())


if __name__ == "__main__":
    main()
