#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exportadores de resultados de experimento: CSV, Markdown e Excel.

Também grava as matrizes D e S em CSV para depuração.
"""
import math
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO, Union

import numpy as np
import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from pyapsp.core.matrices import parent_matrix_one_based
from pyapsp.core.utils import ALGORITMOS, fmt_sig
from pyapsp.export.records import COLUNAS_CSV, ResultRecord

Destino = Union[str, Path, TextIO]

NOMES_ALGORITMO = {
    "pstw": "PSTw",
    "dijkstra": "Dijkstra",
    "peng": "Peng",
    "floyd": "Floyd",
}


def _registros_para_df(records: Sequence[ResultRecord]) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in records], columns=list(COLUNAS_CSV))


def _abrir_destino(dest: Destino):
    if isinstance(dest, (str, Path)):
        caminho = Path(dest)
        caminho.parent.mkdir(parents=True, exist_ok=True)
        return open(caminho, "w", encoding="utf-8", newline="")
    return None


def emit_csv(records: Sequence[ResultRecord], dest: Destino) -> None:
    """
    Grava os registros em CSV, na ordem recebida.

    Floats com 6 algarismos significativos; alpha vazio quando indefinido;
    verified como true/false.
    """
    df = _registros_para_df(records)
    df["wall_seconds"] = df["wall_seconds"].map(fmt_sig)
    df["alpha"] = df["alpha"].map(fmt_sig)
    df["verified"] = df["verified"].map(lambda v: "true" if v else "false")
    arquivo = _abrir_destino(dest)
    try:
        df.to_csv(arquivo if arquivo is not None else dest, index=False, lineterminator="\n")
    finally:
        if arquivo is not None:
            arquivo.close()


def carregar_csv(src: Union[str, Path, TextIO]) -> List[ResultRecord]:
    """
    Lê de volta os registros gravados por emit_csv.

    Raises:
        FileNotFoundError: Se o arquivo não existir
        ValueError: Se faltar alguma coluna
    """
    if isinstance(src, (str, Path)) and not Path(src).exists():
        raise FileNotFoundError(f"Arquivo não encontrado: {src}")
    df = pd.read_csv(src, dtype=str, keep_default_na=False)
    faltando = [c for c in COLUNAS_CSV if c not in df.columns]
    if faltando:
        raise ValueError(f"CSV de resultados sem as colunas: {', '.join(faltando)}")
    return [
        ResultRecord(
            family=row["family"],
            n=int(row["n"]),
            n_prime=int(row["n_prime"]),
            seed=int(row["seed"]),
            algorithm=row["algorithm"],
            wall_seconds=float(row["wall_seconds"]),
            access_count=int(row["access_count"]),
            alpha=float(row["alpha"]) if row["alpha"] != "" else None,
            waits=int(row["waits"]),
            verified=row["verified"].strip().lower() == "true",
        )
        for _, row in df.iterrows()
    ]


def _fmt_num(v: Optional[float], casas: int) -> str:
    if v is None or not math.isfinite(v):
        return "-"
    return f"{v:.{casas}f}"


def _fmt_media(serie: pd.Series, casas: int) -> str:
    valores = serie.dropna()
    valores = valores[np.isfinite(valores)]
    if valores.empty:
        return "-"
    media = valores.mean()
    if len(valores) < 2:
        return f"{media:.{casas}f}"
    return f"{media:.{casas}f} ± {valores.std(ddof=1):.{casas}f}"


def _razao(num: pd.Series, den: pd.Series) -> pd.Series:
    with np.errstate(divide="ignore", invalid="ignore"):
        return num.astype(float) / den.astype(float)


def _tabela_grupo(grupo: pd.DataFrame) -> List[str]:
    """Monta a tabela markdown de um grupo (family, n, n')."""
    presentes = set(grupo["algorithm"])
    algs = [a for a in ALGORITMOS if a in presentes]
    alphas = grupo.pivot(index="seed", columns="algorithm", values="alpha").reindex(columns=algs)
    tempos = grupo.pivot(index="seed", columns="algorithm", values="wall_seconds").reindex(columns=algs)
    alphas = alphas.apply(pd.to_numeric, errors="coerce")
    tempos = tempos.apply(pd.to_numeric, errors="coerce")

    # (cabeçalho, série por semente, casas decimais)
    colunas = []
    for a in algs:
        colunas.append((f"α {NOMES_ALGORITMO[a]}", alphas[a], 2))
        colunas.append((f"tempo {NOMES_ALGORITMO[a]} (s)", tempos[a], 4))
    if "pstw" in algs and len(algs) > 1:
        for a in algs:
            if a == "pstw":
                continue
            if a != "floyd":
                colunas.append((f"α {NOMES_ALGORITMO[a]}/PSTw", _razao(alphas[a], alphas["pstw"]), 2))
            colunas.append((f"tempo {NOMES_ALGORITMO[a]}/PSTw", _razao(tempos[a], tempos["pstw"]), 2))

    cabecalho = ["seed"] + [c[0] for c in colunas]
    linhas = [
        "| " + " | ".join(cabecalho) + " |",
        "|" + "|".join(["---"] + ["---:"] * len(colunas)) + "|",
    ]
    for seed in alphas.index:
        celulas = [str(seed)] + [_fmt_num(serie.loc[seed], casas) for _, serie, casas in colunas]
        linhas.append("| " + " | ".join(celulas) + " |")
    media = ["média"] + [_fmt_media(serie, casas) for _, serie, casas in colunas]
    linhas.append("| " + " | ".join(media) + " |")
    return linhas


def formatar_markdown(records: Sequence[ResultRecord]) -> str:
    """
    Monta o relatório markdown: uma seção por (family, n, n'), uma linha por
    semente, α e tempo de cada algoritmo, colunas X/PSTw quando o PSTw está
    presente junto de outros algoritmos, e uma linha de média ± desvio.
    """
    saida = ["# Resultados", ""]
    df = _registros_para_df(records)
    if df.empty:
        saida.append("Nenhum registro.")
        return "\n".join(saida) + "\n"
    for (family, n, n_prime), grupo in df.groupby(["family", "n", "n_prime"], sort=False):
        titulo = f"## {family} n={n}" if family == "hypercube" else f"## {family} n={n} n'={n_prime}"
        saida.append(titulo)
        saida.append("")
        saida.extend(_tabela_grupo(grupo))
        saida.append("")
    return "\n".join(saida)


def emit_markdown(records: Sequence[ResultRecord], dest: Destino) -> None:
    """Grava o relatório markdown em dest (caminho ou stream)."""
    texto = formatar_markdown(records)
    arquivo = _abrir_destino(dest)
    if arquivo is None:
        dest.write(texto)
        return
    with arquivo:
        arquivo.write(texto)


class CsvExporter:
    """Exportador de registros para CSV."""

    def __init__(self, records: Sequence[ResultRecord]):
        self.records = list(records)

    def exportar(self, caminho: Optional[Path] = None) -> Optional[Path]:
        """Grava em caminho, ou na saída padrão quando caminho é None."""
        if caminho is None:
            emit_csv(self.records, sys.stdout)
            return None
        emit_csv(self.records, caminho)
        return Path(caminho)


class MarkdownExporter(CsvExporter):
    """Exportador de registros para tabelas markdown."""

    def exportar(self, caminho: Optional[Path] = None) -> Optional[Path]:
        if caminho is None:
            emit_markdown(self.records, sys.stdout)
            return None
        emit_markdown(self.records, caminho)
        return Path(caminho)


class ExcelExporter:
    """
    Exportador de registros para Excel.

    Gera as abas:
    - Resultados: um registro por linha, mesmas colunas do CSV
    - Resumo: média de α, tempo e esperas por (family, n, n', algorithm)
    """

    def __init__(self, records: Sequence[ResultRecord]):
        self.records = list(records)

    def gerar_resumo(self) -> pd.DataFrame:
        """Agrega os registros por (family, n, n_prime, algorithm), na ordem de chegada."""
        df = _registros_para_df(self.records)
        if df.empty:
            return pd.DataFrame(columns=["family", "n", "n_prime", "algorithm", "seeds", "alpha", "wall_seconds", "waits"])
        df["alpha"] = pd.to_numeric(df["alpha"], errors="coerce")
        resumo = df.groupby(["family", "n", "n_prime", "algorithm"], sort=False).agg(
            seeds=("seed", "count"),
            alpha=("alpha", "mean"),
            wall_seconds=("wall_seconds", "mean"),
            waits=("waits", "mean"),
        )
        return resumo.reset_index()

    def _aplicar_formatacao(self, ws, num_cols: int, num_rows: int, colunas_texto: Optional[List[int]] = None):
        """
        Aplica formatação básica à planilha.

        Args:
            ws: Worksheet do openpyxl
            num_cols: Número de colunas
            num_rows: Número de linhas (incluindo cabeçalho)
            colunas_texto: Colunas (1-indexed) mantidas como texto
        """
        colunas_texto = colunas_texto or []
        thin_border = Border(
            left=Side(style="thin"),
            right=Side(style="thin"),
            top=Side(style="thin"),
            bottom=Side(style="thin"),
        )
        for row in range(1, num_rows + 1):
            for col in range(1, num_cols + 1):
                cell = ws.cell(row=row, column=col)
                if row == 1:  # Cabeçalho
                    cell.fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
                    cell.font = Font(bold=True, size=11, color="FFFFFF")
                    cell.alignment = Alignment(horizontal="center", vertical="center")
                elif col in colunas_texto:
                    cell.font = Font(size=10)
                    cell.alignment = Alignment(horizontal="left")
                elif isinstance(cell.value, float):
                    cell.number_format = "0.000000"
                    cell.alignment = Alignment(horizontal="right")
                cell.border = thin_border

        # Autoajusta largura das colunas
        for col in range(1, num_cols + 1):
            column = get_column_letter(col)
            max_length = max((len(str(c.value)) for c in ws[column] if c.value is not None), default=0)
            ws.column_dimensions[column].width = min(max_length + 2, 50)

    def exportar(self, caminho: Path) -> Path:
        """
        Grava o arquivo Excel.

        Returns:
            Caminho do arquivo gerado
        """
        caminho = Path(caminho)
        caminho.parent.mkdir(parents=True, exist_ok=True)

        wb = Workbook()
        wb.remove(wb.active)  # Remove planilha padrão

        ws = wb.create_sheet("Resultados")
        ws.append(list(COLUNAS_CSV))
        for r in self.records:
            ws.append([
                r.family, r.n, r.n_prime, r.seed, r.algorithm,
                float(r.wall_seconds), r.access_count,
                None if r.alpha is None else float(r.alpha),
                r.waits, "true" if r.verified else "false",
            ])
        self._aplicar_formatacao(ws, len(COLUNAS_CSV), len(self.records) + 1, colunas_texto=[1, 5, 10])

        resumo = self.gerar_resumo()
        ws_resumo = wb.create_sheet("Resumo")
        ws_resumo.append(list(resumo.columns))
        for linha in resumo.itertuples(index=False):
            ws_resumo.append([None if isinstance(v, float) and math.isnan(v) else _nativo(v) for v in linha])
        self._aplicar_formatacao(ws_resumo, len(resumo.columns), len(resumo) + 1, colunas_texto=[1, 4])

        wb.save(caminho)
        return caminho


def _nativo(v):
    """Converte escalares numpy em tipos Python aceitos pelo openpyxl."""
    return v.item() if isinstance(v, np.generic) else v


EXPORTADORES: Dict[str, type] = {
    "csv": CsvExporter,
    "markdown": MarkdownExporter,
    "xlsx": ExcelExporter,
}


def salvar_matrizes(D: np.ndarray, S: np.ndarray, outdir: Union[str, Path], prefixo: str) -> List[Path]:
    """
    Grava D e S em CSV (S em ids 1-based, NO_PARENT = -1, NOT_SEARCHED = 0).

    Returns:
        Caminhos dos dois arquivos gravados
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    caminho_d = outdir / f"{prefixo}_D.csv"
    caminho_s = outdir / f"{prefixo}_S.csv"
    pd.DataFrame(D).to_csv(caminho_d, index=False, header=False, float_format="%.17g", lineterminator="\n")
    pd.DataFrame(parent_matrix_one_based(S)).to_csv(caminho_s, index=False, header=False, lineterminator="\n")
    return [caminho_d, caminho_s]
