import io
import os
import shutil
import sys
import tempfile
import unittest
from pathlib import Path

import numpy as np
from openpyxl import load_workbook

# Necessário para que o arquivo de testes encontre
test_file_dir = os.path.dirname(os.path.abspath(__file__))
test_dir = os.path.dirname(test_file_dir)  # test/
project_root = os.path.dirname(test_dir)  # raiz do projeto
os.chdir(test_dir)  # muda para test/ para que caminhos relativos funcionem
sys.path.insert(0, project_root)

from pyapsp.core.matrices import NO_PARENT, NOT_SEARCHED
from pyapsp.export.exporters import (
    CsvExporter,
    ExcelExporter,
    MarkdownExporter,
    carregar_csv,
    emit_csv,
    formatar_markdown,
    salvar_matrizes,
)
from pyapsp.export.records import COLUNAS_CSV, ResultRecord


def _registro(algorithm, alpha, seed=0, wall_seconds=0.5, family="hypercube", n=64, n_prime=0):
    return ResultRecord(
        family=family, n=n, n_prime=n_prime, seed=seed, algorithm=algorithm,
        wall_seconds=wall_seconds, access_count=0 if alpha is None else int(alpha * n * n),
        alpha=alpha, waits=0, verified=True,
    )


class TestEmitCsv(unittest.TestCase):
    """Testes para a saída CSV."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_sem_registros_apenas_cabecalho(self):
        """Testa que a lista vazia gera só o cabeçalho."""
        buffer = io.StringIO()
        emit_csv([], buffer)
        self.assertEqual(buffer.getvalue(), ",".join(COLUNAS_CSV) + "\n")

    def test_formato_das_colunas(self):
        """Testa a formatação das colunas, com α vazio para Floyd-Warshall."""
        buffer = io.StringIO()
        emit_csv([_registro("dijkstra", 6.0), _registro("floyd", None)], buffer)
        linhas = buffer.getvalue().splitlines()
        self.assertEqual(len(linhas), 3)
        self.assertEqual(linhas[1], "hypercube,64,0,0,dijkstra,0.500000,24576,6.00000,0,true")
        self.assertEqual(linhas[2], "hypercube,64,0,0,floyd,0.500000,0,,0,true")

    def test_ida_e_volta(self):
        """Testa gravar e reler os registros em CSV."""
        registros = [_registro("pstw", 2.5, seed=1), _registro("floyd", None, seed=1)]
        caminho = Path(self.temp_dir) / "out" / "r.csv"
        emit_csv(registros, caminho)
        self.assertEqual(carregar_csv(caminho), registros)

    def test_arquivo_inexistente(self):
        """Testa FileNotFoundError ao carregar CSV inexistente."""
        with self.assertRaises(FileNotFoundError):
            carregar_csv(Path(self.temp_dir) / "nao_existe.csv")

    def test_csv_exporter(self):
        """Testa o exportador CSV gravando no caminho indicado."""
        caminho = Path(self.temp_dir) / "r.csv"
        retorno = CsvExporter([_registro("pstw", 2.0)]).exportar(caminho)
        self.assertEqual(retorno, caminho)
        self.assertTrue(caminho.exists())


class TestMarkdown(unittest.TestCase):
    """Testes para o relatório markdown."""

    def test_razao_dijkstra_sobre_pstw(self):
        """Testa as razões α e tempo em relação ao PSTw."""
        texto = formatar_markdown([
            _registro("pstw", 2.0, wall_seconds=1.0),
            _registro("dijkstra", 6.0, wall_seconds=2.0),
            _registro("peng", 4.0, wall_seconds=1.5),
            _registro("floyd", None, wall_seconds=4.0),
        ])
        self.assertIn("## hypercube n=64", texto)
        self.assertIn("α Dijkstra/PSTw", texto)
        self.assertIn("tempo Floyd/PSTw", texto)
        self.assertNotIn("α Floyd/PSTw", texto)
        linha_seed = next(l for l in texto.splitlines() if l.startswith("| 0 |"))
        self.assertIn("| 3.00 |", linha_seed)

    def test_algoritmo_unico_sem_razoes(self):
        """Testa a tabela sem razões quando só há um algoritmo."""
        texto = formatar_markdown([_registro("dijkstra", 6.0)])
        self.assertNotIn("/PSTw", texto)
        self.assertIn("α Dijkstra", texto)

    def test_duas_sementes_com_linha_de_media(self):
        """Testa a linha de média e desvio padrão com duas sementes."""
        texto = formatar_markdown([
            _registro("pstw", 2.0, seed=0),
            _registro("pstw", 4.0, seed=1),
        ])
        linha_media = next(l for l in texto.splitlines() if l.startswith("| média"))
        self.assertIn("3.00 ± 1.41", linha_media)

    def test_secao_por_n_prime(self):
        """Testa uma seção por valor de n'."""
        texto = formatar_markdown([
            _registro("pstw", 1.4, family="scalefree", n_prime=2),
            _registro("pstw", 1.2, family="scalefree", n_prime=8),
        ])
        self.assertIn("## scalefree n=64 n'=2", texto)
        self.assertIn("## scalefree n=64 n'=8", texto)

    def test_sem_registros(self):
        """Testa o relatório sem registros."""
        self.assertIn("Nenhum registro.", formatar_markdown([]))

    def test_markdown_exporter(self):
        """Testa o exportador markdown gravando o título."""
        temp_dir = tempfile.mkdtemp()
        try:
            caminho = Path(temp_dir) / "r.md"
            MarkdownExporter([_registro("pstw", 2.0)]).exportar(caminho)
            self.assertTrue(caminho.read_text(encoding="utf-8").startswith("# Resultados"))
        finally:
            shutil.rmtree(temp_dir, ignore_errors=True)


class TestExcelExporter(unittest.TestCase):
    """Testes para ExcelExporter."""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.registros = [
            _registro("pstw", 2.0, seed=0),
            _registro("pstw", 4.0, seed=1),
            _registro("floyd", None, seed=0),
        ]

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_gerar_resumo(self):
        """Testa a aba de resumo com médias por algoritmo."""
        resumo = ExcelExporter(self.registros).gerar_resumo()
        pstw = resumo[resumo["algorithm"] == "pstw"].iloc[0]
        self.assertEqual(pstw["seeds"], 2)
        self.assertAlmostEqual(pstw["alpha"], 3.0)

    def test_exportar(self):
        """Testa as abas, o cabeçalho e o número de linhas da planilha."""
        caminho = Path(self.temp_dir) / "r.xlsx"
        ExcelExporter(self.registros).exportar(caminho)
        self.assertTrue(caminho.exists())
        wb = load_workbook(caminho)
        self.assertEqual(wb.sheetnames, ["Resultados", "Resumo"])
        ws = wb["Resultados"]
        self.assertEqual(ws.max_row, len(self.registros) + 1)
        self.assertEqual(ws.cell(row=1, column=1).value, "family")
        self.assertEqual(wb["Resumo"].max_row, 3)


class TestSalvarMatrizes(unittest.TestCase):
    """Testes para a gravação de D e S."""

    def test_grava_d_e_s_um_baseado(self):
        """Testa a gravação de D e de S com ids 1-based."""
        temp_dir = tempfile.mkdtemp()
        try:
            D = np.array([[0.0, 0.7], [0.7, 0.0]])
            S = np.array([[NO_PARENT, 1], [0, NOT_SEARCHED]])
            caminho_d, caminho_s = salvar_matrizes(D, S, temp_dir, "pstw")
            self.assertEqual(caminho_d.name, "pstw_D.csv")
            self.assertEqual(caminho_s.read_text(encoding="utf-8"), "-1,2\n1,0\n")
        finally:
            shutil.rmtree(temp_dir, ignore_errors=True)


if __name__ == "__main__":
    unittest.main()
