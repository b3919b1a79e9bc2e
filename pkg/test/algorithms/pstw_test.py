import os
import random
import sys
import unittest
from statistics import mean

import numpy as np

# Necessário para que o arquivo de testes encontre
test_file_dir = os.path.dirname(os.path.abspath(__file__))
test_dir = os.path.dirname(test_file_dir)  # test/
project_root = os.path.dirname(test_dir)  # raiz do projeto
os.chdir(test_dir)  # muda para test/ para que caminhos relativos funcionem
sys.path.insert(0, project_root)

from pyapsp.algorithms.baselines import apsp_dijkstra, apsp_floyd_warshall
from pyapsp.algorithms.pstw import TreeVertex, _verificar_consistencia, extend, init_sources, run_pstw
from pyapsp.core.graph import Graph, gen_hypercube, gen_scale_free
from pyapsp.core.matrices import NO_PARENT, NOT_SEARCHED
from pyapsp.core.metrics import RunMetrics, verify_distances, verify_tree


class TestInitSources(unittest.TestCase):
    """Testes para a inicialização dos estados por fonte."""

    def test_k2(self):
        """Testa a inicialização no grafo de dois vértices."""
        g = Graph.from_edges(2, [(0, 1, 0.7)])
        estados, D, S = init_sources(g)
        self.assertEqual(len(estados), 2)
        self.assertTrue(all(len(v.queue) == 0 and not v.tv_map for v in estados))
        self.assertTrue(np.array_equal(D, np.zeros((2, 2))))

    def test_diagonal_sem_pai(self):
        """Testa S[i, i] sem pai e as demais entradas como não buscadas."""
        _, _, S = init_sources(gen_hypercube(3, seed=0))
        self.assertTrue(all(S[i, i] == NO_PARENT for i in range(8)))
        self.assertEqual(S[0, 1], NOT_SEARCHED)

    def test_hypercube_d2(self):
        """Testa que as listas de adjacência apontam para os estados das fontes."""
        estados, _, _ = init_sources(gen_hypercube(2, seed=0))
        self.assertEqual(len(estados), 4)
        for v in estados:
            self.assertEqual(len(v.adj), 2)
            self.assertTrue(all(w is estados[w.id] for w, _ in v.adj))

    def test_grafo_desconexo_rejeitado(self):
        """Testa ValueError para grafo desconexo."""
        g = Graph.from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with self.assertRaises(ValueError):
            init_sources(g)


class TestExtend(unittest.TestCase):
    """Testes para os ramos de extend."""

    def test_primeira_chamada_cria_raiz(self):
        """Testa que a primeira chamada cria a raiz determinada."""
        estados, D, S = init_sources(gen_hypercube(2, seed=0))
        self.assertTrue(extend(estados[0], D, S))
        self.assertEqual(len(estados[0].tv_map), 1)
        self.assertTrue(estados[0].root.is_determined)
        self.assertIs(estados[0].tv_map[0], estados[0].root)

    def test_segunda_chamada_cria_vizinhos(self):
        """Testa que a segunda chamada insere os vizinhos da raiz com D, S e cor."""
        g = Graph.from_edges(3, [(0, 1, 0.5), (0, 2, 0.25)])
        estados, D, S = init_sources(g)
        for v in estados:
            extend(v, D, S)
        metrics = RunMetrics("pstw", n=3)
        self.assertTrue(extend(estados[0], D, S, metrics))
        self.assertEqual(metrics.access_count, 2)
        self.assertEqual((D[1, 0], D[2, 0]), (0.5, 0.25))
        self.assertEqual((S[1, 0], S[2, 0]), (0, 0))
        tv = estados[0].tv_map[1]
        self.assertIs(tv.cor, estados[1].root)
        self.assertIs(tv.parent, estados[0].root)
        self.assertEqual(tv.parent_edge_len, 0.5)
        self.assertEqual(len(estados[0].queue), 2)

    def test_espera_quando_cor_nao_determinado(self):
        """Testa o ramo de espera: reenfileira na mesma prioridade sem contar acessos."""
        g = Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
        estados, D, S = init_sources(g)
        for v in estados:
            extend(v, D, S)
        for v in estados:
            extend(v, D, S)
        # Força um cor não determinado para o vizinho 1 em T(0)
        tv = estados[0].tv_map[1]
        tv.cor = TreeVertex(1)
        metrics = RunMetrics("pstw", n=3)
        self.assertTrue(extend(estados[0], D, S, metrics))
        self.assertEqual(metrics.wait_count, 1)
        self.assertEqual(metrics.access_count, 0)
        self.assertIn(1, estados[0].queue)
        self.assertEqual(estados[0].queue.priority(1), 1.0)
        self.assertFalse(tv.is_determined)


class TestTreeVertex(unittest.TestCase):
    """Testes para a relação pai/filhos de TreeVertex."""

    def test_reparent(self):
        """Testa a troca de pai e a atualização dos filhos."""
        raiz = TreeVertex(0)
        a = TreeVertex(1, parent=raiz, parent_edge_len=1.0)
        b = TreeVertex(2, parent=raiz, parent_edge_len=2.0)
        b.reparent(a, 0.5)
        self.assertIs(b.parent, a)
        self.assertNotIn(2, raiz.children)
        self.assertIs(a.children[2], b)
        self.assertEqual(b.parent_edge_len, 0.5)


class TestVerificarConsistencia(unittest.TestCase):
    """Testes para as checagens do modo de depuração."""

    def test_prioridade_da_fila_diferente_de_d(self):
        """Testa AssertionError quando a prioridade na fila diverge da matriz D."""
        g = Graph.from_edges(3, [(0, 1, 0.5), (0, 2, 0.25)])
        estados, D, S = init_sources(g)
        for v in estados:
            extend(v, D, S)
        extend(estados[0], D, S)
        _verificar_consistencia(estados[0], D, {})
        D[1, 0] = 9.0
        with self.assertRaises(AssertionError):
            _verificar_consistencia(estados[0], D, {})


class TestRunPstw(unittest.TestCase):
    """Testes para a execução completa do PSTw."""

    def assertIgualOraculo(self, g):
        D, S, metrics = run_pstw(g)
        self.assertTrue(verify_distances(D, apsp_floyd_warshall(g)).passed)
        self.assertEqual(verify_tree(S, D, g).tree_violations, 0)
        return metrics

    def test_k2(self):
        """Testa D e S no grafo de dois vértices."""
        g = Graph.from_edges(2, [(0, 1, 0.7)])
        D, S, _ = run_pstw(g)
        self.assertEqual(D.tolist(), [[0.0, 0.7], [0.7, 0.0]])
        self.assertEqual(S[:, 0].tolist(), [NO_PARENT, 0])
        self.assertEqual(S[:, 1].tolist(), [1, NO_PARENT])

    def test_vertice_unico(self):
        """Testa o grafo de um vértice."""
        g = Graph(1, ((),))
        D, S, metrics = run_pstw(g)
        self.assertEqual(D.tolist(), [[0.0]])
        self.assertEqual(S.tolist(), [[NO_PARENT]])
        self.assertEqual(metrics.sweeps, 2)

    def test_triangulo(self):
        """Testa que o caminho de dois passos vence a aresta direta mais pesada."""
        a, b, c = 0, 1, 2
        g = Graph.from_edges(3, [(a, b, 1.0), (b, c, 1.0), (a, c, 3.0)])
        D, S, _ = run_pstw(g)
        self.assertEqual(D[c, a], 2.0)
        self.assertEqual(S[c, a], b)

    def test_caminho(self):
        """Testa o predecessor no caminho de três vértices."""
        g = Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
        D, S, metrics = run_pstw(g)
        self.assertEqual(D[2, 0], 2.0)
        self.assertEqual(S[2, 0], 1)
        self.assertGreaterEqual(metrics.wait_count, 0)

    def test_hypercube_d6_igual_ao_oraculo(self):
        """Testa hipercubos de dimensão 6 contra Floyd-Warshall."""
        for seed in (0, 1, 2):
            self.assertIgualOraculo(gen_hypercube(6, seed=seed))

    def test_scale_free_igual_ao_oraculo(self):
        """Testa grafos livres de escala contra Floyd-Warshall."""
        for seed in (0, 1, 2):
            self.assertIgualOraculo(gen_scale_free(64, 2, seed=seed))
            self.assertIgualOraculo(gen_scale_free(64, 8, seed=seed))

    def test_distancias_simetricas(self):
        """Testa a simetria da matriz de distâncias."""
        D, _, _ = run_pstw(gen_scale_free(50, 3, seed=11))
        self.assertTrue(np.allclose(D, D.T, atol=1e-9))

    def test_modo_depuracao(self):
        """Testa que o modo de depuração não acusa falhas em grafos válidos."""
        for seed in range(5):
            run_pstw(gen_hypercube(4, seed=seed), verificar_consistencia=True)
            run_pstw(gen_scale_free(30, 2, seed=seed), verificar_consistencia=True)

    def test_termina_em_grafos_aleatorios(self):
        """Testa término e correção em grafos aleatórios dentro do limite de varreduras."""
        rnd = random.Random(7)
        for _ in range(40):
            seed = rnd.randrange(2 ** 32)
            if rnd.random() < 0.5:
                g = gen_hypercube(rnd.randint(1, 5), seed=seed)
            else:
                n = rnd.randint(5, 48)
                g = gen_scale_free(n, rnd.randint(2, min(6, n - 1)), seed=seed)
            metrics = self.assertIgualOraculo(g)
            self.assertLessEqual(metrics.sweeps, 10 * g.n * g.n)

    def test_alpha_menor_que_dijkstra(self):
        """Testa α do PSTw menor que o de Dijkstra."""
        for g in (gen_hypercube(6, seed=0), gen_scale_free(64, 2, seed=0), gen_scale_free(64, 2, seed=1)):
            _, _, m_pstw = run_pstw(g)
            _, _, m_dij = apsp_dijkstra(g)
            self.assertLess(m_pstw.alpha, m_dij.alpha)

    def test_alpha_hypercube_proximo_de_dois(self):
        """Testa α do PSTw no hipercubo dentro de ±20% de 2.00 em n=64 e n=256."""
        for d in (6, 8):
            _, _, metrics = run_pstw(gen_hypercube(d, seed=0))
            self.assertAlmostEqual(metrics.alpha, 2.00, delta=0.4)

    def test_alpha_escala_livre_esparso(self):
        """Testa α médio do PSTw em n'=2 dentro de ±0.3 de 1.43 (n=64) e 1.39 (n=256)."""
        for n, referencia in ((64, 1.43), (256, 1.39)):
            media = mean(run_pstw(gen_scale_free(n, 2, seed=s))[2].alpha for s in range(5))
            self.assertAlmostEqual(media, referencia, delta=0.3)

    def test_metricas(self):
        """Testa os campos de RunMetrics após a execução."""
        g = gen_hypercube(3, seed=0)
        _, _, metrics = run_pstw(g)
        self.assertEqual(metrics.algorithm, "pstw")
        self.assertEqual(metrics.n, 8)
        self.assertGreater(metrics.sweeps, 0)
        self.assertGreaterEqual(metrics.wall_seconds, 0.0)
        # ramo 2 sozinho já acessa 2m vizinhos
        self.assertGreaterEqual(metrics.access_count, 2 * g.m)


if __name__ == "__main__":
    unittest.main()
