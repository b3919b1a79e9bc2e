#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pipeline de experimento: gera grafos -> executa algoritmos -> verifica -> exporta.

Para cada (n, semente) o grafo é gerado uma única vez e todos os algoritmos
selecionados rodam sobre a mesma instância. Com verificação, o oráculo
Floyd-Warshall é calculado quando n não excede o limite; acima dele a
verificação é ignorada com aviso.

Uso:
  python -m pyapsp.export.experiment_pipeline \
      --family scalefree --n 64,256 --nprime 2 --seeds 5 \
      --algos pstw,dijkstra,peng --verify --out ./out/sf.csv

Requisitos: numpy, pandas, openpyxl (apenas para --format xlsx)
"""
import argparse
import configparser
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from pyapsp.algorithms.baselines import apsp_dijkstra, apsp_floyd_warshall, apsp_peng, obter_limite_oraculo
from pyapsp.algorithms.pstw import run_pstw
from pyapsp.core.graph import Graph, WeightRange
from pyapsp.core.metrics import RunMetrics, timed, verify_distances, verify_tree
from pyapsp.core.utils import ALGORITMOS, parse_algoritmos, parse_lista_inteiros, parse_sementes
from pyapsp.data.clients.generator import GeneratorClient
from pyapsp.data.logging import log_execucao
from pyapsp.export.exporters import EXPORTADORES
from pyapsp.export.records import N_ESTENDIDO, N_PADRAO, ExperimentConfig, ResultRecord

EXECUTORES = {
    "pstw": run_pstw,
    "dijkstra": apsp_dijkstra,
    "peng": apsp_peng,
}


@dataclass(frozen=True)
class Tarefa:
    """Uma instância de grafo (n, semente) com os algoritmos a executar sobre ela."""
    family: str
    n: int
    n_prime: Union[int, str]
    weights: WeightRange
    seed: int
    algorithms: Tuple[str, ...]
    verify: bool
    no_timing: bool
    oracle_cap: int


def _verificar(D: np.ndarray, S: np.ndarray, oraculo: np.ndarray, g: Graph) -> bool:
    relatorio = verify_distances(D, oraculo).combinar(verify_tree(S, D, g))
    return relatorio.passed


def executar_tarefa(tarefa: Tarefa) -> Tuple[List[ResultRecord], List[str]]:
    """
    Executa todos os algoritmos de uma tarefa.

    Função de módulo para poder ser enviada a processos do pool.

    Returns:
        Tupla (registros na ordem dos algoritmos, avisos)
    """
    fonte = GeneratorClient(tarefa.family, tarefa.n, tarefa.n_prime, tarefa.weights, tarefa.seed)
    g = fonte.carregar_grafo()
    avisos: List[str] = []
    registros: List[ResultRecord] = []

    oraculo: Optional[np.ndarray] = None
    tempo_oraculo = 0.0
    if tarefa.verify or "floyd" in tarefa.algorithms:
        if g.n <= tarefa.oracle_cap:
            oraculo, tempo_oraculo = timed(apsp_floyd_warshall, g, tarefa.oracle_cap)
        else:
            avisos.append(
                f"[aviso] {fonte.descrever()}: n={g.n} acima do limite do oráculo "
                f"({tarefa.oracle_cap}); Floyd-Warshall e verificação ignorados."
            )

    def _registro(algoritmo: str, metrics: Optional[RunMetrics], segundos: float, verificado: bool) -> ResultRecord:
        return ResultRecord(
            family=tarefa.family,
            n=g.n,
            n_prime=fonte.n_prime,
            seed=tarefa.seed,
            algorithm=algoritmo,
            wall_seconds=0.0 if tarefa.no_timing else segundos,
            access_count=metrics.access_count if metrics else 0,
            alpha=metrics.alpha if metrics else None,
            waits=metrics.wait_count if metrics else 0,
            verified=verificado,
        )

    for algoritmo in tarefa.algorithms:
        if algoritmo == "floyd":
            if oraculo is not None:
                registros.append(_registro("floyd", None, tempo_oraculo, tarefa.verify))
            continue
        D, S, metrics = EXECUTORES[algoritmo](g)
        verificado = False
        if tarefa.verify and oraculo is not None:
            verificado = _verificar(D, S, oraculo, g)
            if not verificado:
                avisos.append(f"[aviso] {fonte.descrever()}: verificação de {algoritmo} falhou.")
        registros.append(_registro(algoritmo, metrics, metrics.wall_seconds, verificado))
    return registros, avisos


class ExperimentPipeline:
    """
    Pipeline de medição.

    Esta classe encapsula:
    - Validação da configuração
    - Montagem das tarefas (uma por instância de grafo)
    - Execução sequencial ou em pool de processos
    - Log de execuções e exportação dos registros
    """

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.registros: List[ResultRecord] = []

    def montar_tarefas(self) -> List[Tarefa]:
        """Uma tarefa por (n, semente), na ordem da configuração."""
        cap = self.cfg.oracle_cap if self.cfg.oracle_cap is not None else obter_limite_oraculo()
        return [
            Tarefa(
                family=self.cfg.family,
                n=n,
                n_prime=self.cfg.n_prime,
                weights=self.cfg.weights,
                seed=seed,
                algorithms=tuple(self.cfg.algorithms),
                verify=self.cfg.verify,
                no_timing=self.cfg.no_timing,
                oracle_cap=cap,
            )
            for n in self.cfg.ns
            for seed in self.cfg.seeds
        ]

    def execute(self) -> List[ResultRecord]:
        """
        Executa o experimento.

        Returns:
            Registros em ordem determinística: n, semente, algoritmo (ordem da configuração)
        """
        self.cfg.validar()
        tarefas = self.montar_tarefas()
        if self.cfg.jobs > 1 and len(tarefas) > 1:
            with ProcessPoolExecutor(max_workers=self.cfg.jobs) as pool:
                resultados = list(pool.map(executar_tarefa, tarefas))
        else:
            resultados = [executar_tarefa(t) for t in tarefas]

        self.registros = []
        for registros, avisos in resultados:
            for aviso in avisos:
                print(aviso, file=sys.stderr)
            for registro in registros:
                if self.cfg.run_log:
                    log_execucao(registro, self.cfg.run_log)
                self.registros.append(registro)
        return self.registros

    def exportar(self) -> Optional[Path]:
        """Exporta os registros no formato configurado; None quando a saída é stdout."""
        exportador = EXPORTADORES[self.cfg.format](self.registros)
        return exportador.exportar(self.cfg.out)


def run_experiment(cfg: ExperimentConfig) -> List[ResultRecord]:
    """Executa o experimento descrito por cfg e retorna os registros."""
    return ExperimentPipeline(cfg).execute()


def carregar_config(config_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Lê os padrões do experimento de um arquivo INI.

    Seções: [defaults] (family, n, nprime, weights, seeds, algos, saida, format, jobs),
    [oracle] (cap) e [logging] (enable_run_log, run_log_file).

    Raises:
        FileNotFoundError: Se o arquivo não existir
    """
    config_path = Path(config_path)
    if not config_path.exists():
        raise FileNotFoundError(f"Arquivo de configuração não encontrado: {config_path}")
    cfg = configparser.ConfigParser()
    cfg.read(config_path, encoding="utf-8")

    enable_run_log = cfg.getboolean("logging", "enable_run_log", fallback=False)
    return {
        "family": cfg.get("defaults", "family", fallback=None),
        "n": cfg.get("defaults", "n", fallback=None),
        "nprime": cfg.get("defaults", "nprime", fallback=None),
        "weights": cfg.get("defaults", "weights", fallback=None),
        "seeds": cfg.get("defaults", "seeds", fallback=None),
        "algos": cfg.get("defaults", "algos", fallback=None),
        "saida": cfg.get("defaults", "saida", fallback=None),
        "format": cfg.get("defaults", "format", fallback=None),
        "jobs": cfg.getint("defaults", "jobs", fallback=None),
        "oracle_cap": cfg.getint("oracle", "cap", fallback=None),
        "run_log": cfg.get("logging", "run_log_file", fallback="logs/execucoes.log") if enable_run_log else None,
    }


def _parse_nprime(texto: str) -> Union[int, str]:
    texto = str(texto).strip().lower()
    if texto == "sqrt":
        return "sqrt"
    try:
        return int(texto)
    except ValueError:
        raise ValueError(f"--nprime deve ser inteiro ou 'sqrt'. Recebido: {texto!r}")


def criar_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description="Executa a campanha de medição de algoritmos APSP.")
    ap.add_argument("--family", choices=["hypercube", "scalefree"], default=None, help="Família de grafos (default: hypercube)")
    ap.add_argument("--n", default=None, help="Lista de n, ex: 64,256,1024 (default: 64,256,1024)")
    ap.add_argument("--nprime", default=None, help="n' para scalefree: inteiro ou sqrt (default: 2)")
    ap.add_argument("--weights", default=None, help="Intervalo de pesos lo,hi (default: 0.1,1.0)")
    ap.add_argument("--seeds", default=None, help="Contagem k (sementes 0..k-1) ou lista com vírgula (default: 5)")
    ap.add_argument("--algos", default=None, help="Algoritmos: pstw,dijkstra,peng,floyd (default: todos)")
    ap.add_argument("--verify", action="store_true", help="Verifica contra o oráculo Floyd-Warshall")
    ap.add_argument("--out", default=None, help="Arquivo de saída (default: saída padrão)")
    ap.add_argument("--format", choices=["csv", "markdown", "xlsx"], default=None, help="Formato de saída (default: csv)")
    ap.add_argument("--extended", action="store_true", help="Inclui n=4096")
    ap.add_argument("--no-timing", action="store_true", help="Zera os tempos para saída reprodutível")
    ap.add_argument("--jobs", type=int, default=None, help="Processos em paralelo (default: 1)")
    ap.add_argument("--config", default=None, help="Arquivo INI com [defaults], [oracle] e [logging] (opcional)")
    ap.add_argument("--run-log", default=None, help="Arquivo de log de execuções (opcional)")
    return ap


def montar_config(args: argparse.Namespace) -> ExperimentConfig:
    """
    Combina argumentos, config.ini (se --config) e padrões embutidos.

    Precedência: argumento > PST_ORACLE_CAP (no limite do oráculo) > INI > padrão.
    """
    ini: Dict[str, Any] = carregar_config(args.config) if args.config else {}

    def escolher(valor_cli, chave_ini):
        return valor_cli if valor_cli is not None else ini.get(chave_ini)

    family = escolher(args.family, "family") or "hypercube"
    texto_n = escolher(args.n, "n")
    ns = parse_lista_inteiros(texto_n) if texto_n else list(N_PADRAO)
    if args.extended and N_ESTENDIDO not in ns:
        ns.append(N_ESTENDIDO)
    texto_nprime = escolher(args.nprime, "nprime")
    texto_weights = escolher(args.weights, "weights")
    texto_seeds = escolher(args.seeds, "seeds")
    texto_algos = escolher(args.algos, "algos")
    out = escolher(args.out, "saida")
    jobs = escolher(args.jobs, "jobs")

    oracle_cap = obter_limite_oraculo(ini["oracle_cap"]) if ini.get("oracle_cap") else None

    return ExperimentConfig(
        family=family.strip().lower(),
        ns=ns,
        n_prime=_parse_nprime(texto_nprime) if texto_nprime else 2,
        weights=WeightRange.parse(texto_weights) if texto_weights else WeightRange(),
        seeds=parse_sementes(texto_seeds) if texto_seeds else parse_sementes("5"),
        algorithms=parse_algoritmos(texto_algos) if texto_algos else list(ALGORITMOS),
        verify=args.verify,
        out=Path(out) if out else None,
        format=escolher(args.format, "format") or "csv",
        no_timing=args.no_timing,
        jobs=int(jobs) if jobs else 1,
        oracle_cap=oracle_cap,
        run_log=escolher(args.run_log, "run_log"),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Função principal para interface CLI."""
    args = criar_parser().parse_args(argv)
    try:
        cfg = montar_config(args)
        pipeline = ExperimentPipeline(cfg)
        pipeline.execute()
        caminho = pipeline.exportar()
    except Exception as e:
        print(f"ERRO: {e}", file=sys.stderr)
        return 1
    if caminho is not None:
        print(f"OK: gerado {caminho.resolve()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
