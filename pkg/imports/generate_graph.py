#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Gera um grafo sementeado (hypercube ou scalefree) e grava em edge-list.

Uso:
  python imports/generate_graph.py --family scalefree --n 256 --nprime sqrt --seed 3 --out ./out/sf256.txt
"""
import argparse
import os
import sys

# Permite rodar o script a partir da raiz do projeto sem instalar o pacote
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from pyapsp.core.graph import WeightRange, graph_stats
from pyapsp.data.clients.file import save_graph
from pyapsp.data.clients.generator import GeneratorClient


def main(argv=None) -> int:
    """Função principal para interface CLI."""
    ap = argparse.ArgumentParser(description="Gera um grafo e grava no formato edge-list.")
    ap.add_argument("--family", choices=["hypercube", "scalefree"], required=True, help="Família do grafo")
    ap.add_argument("--n", type=int, required=True, help="Número de vértices")
    ap.add_argument("--nprime", default="2", help="n' para scalefree: inteiro ou sqrt (default: 2)")
    ap.add_argument("--weights", default="0.1,1.0", help="Intervalo de pesos lo,hi (default: 0.1,1.0)")
    ap.add_argument("--seed", type=int, default=0, help="Semente (default: 0)")
    ap.add_argument("--out", required=True, help="Arquivo de saída")
    args = ap.parse_args(argv)

    try:
        fonte = GeneratorClient(args.family, args.n, args.nprime, WeightRange.parse(args.weights), args.seed)
        g = fonte.carregar_grafo()
        save_graph(g, args.out)
    except Exception as e:
        print(f"ERRO: {e}", file=sys.stderr)
        return 1
    stats = graph_stats(g)
    print(f"OK: gerado {os.path.abspath(args.out)} ({fonte.descrever()}, m={stats.m})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
