#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Fila de prioridade mínima indexada por chave (id de vértice).

Oferece o contrato de quatro métodos usado pelos algoritmos de caminhos mínimos:
enqueue, dequeue_min, update (decrease-key) e len. Implementada como heap binário
com índice chave -> posição no heap.

Empates de prioridade são resolvidos pela menor chave, o que torna as execuções
reprodutíveis.
"""
from typing import Dict, List, Optional, Tuple


class IndexedMinQueue:
    """
    Fila de prioridade mínima com no máximo uma entrada por chave.

    As entradas são pares (prioridade, chave) mantidos num heap binário; a ordem
    lexicográfica do par implementa o desempate pela menor chave.
    """

    __slots__ = ("_heap", "_pos")

    def __init__(self):
        self._heap: List[Tuple[float, int]] = []
        self._pos: Dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._heap)

    def __contains__(self, chave: int) -> bool:
        return chave in self._pos

    def priority(self, chave: int) -> float:
        """Retorna a prioridade atual de uma chave enfileirada."""
        return self._heap[self._pos[chave]][0]

    def enqueue(self, chave: int, d: float) -> None:
        """
        Enfileira a chave com distância d.

        Raises:
            AssertionError: Se a chave já estiver na fila
        """
        if chave in self._pos:
            raise AssertionError(f"Chave {chave} já está na fila.")
        self._heap.append((d, chave))
        self._subir(len(self._heap) - 1)

    def dequeue_min(self) -> Optional[Tuple[int, float]]:
        """
        Remove e retorna o par (chave, d) de menor prioridade.

        Returns:
            Tupla (chave, d), ou None quando a fila está vazia
        """
        heap = self._heap
        if not heap:
            return None
        d, chave = heap[0]
        ultimo = heap.pop()
        del self._pos[chave]
        if heap:
            heap[0] = ultimo
            self._descer(0)
        return chave, d

    def update(self, chave: int, d_novo: float) -> None:
        """
        Reduz a prioridade de uma chave já enfileirada (decrease-key).

        Raises:
            AssertionError: Se a chave não estiver na fila ou se d_novo não for
                            estritamente menor que a prioridade atual
        """
        idx = self._pos.get(chave)
        if idx is None:
            raise AssertionError(f"Chave {chave} não está na fila.")
        d_atual = self._heap[idx][0]
        if not d_novo < d_atual:
            raise AssertionError(
                f"update só reduz prioridades: chave {chave}, atual={d_atual}, nova={d_novo}"
            )
        self._heap[idx] = (d_novo, chave)
        self._subir(idx)

    def _subir(self, idx: int) -> None:
        heap, pos = self._heap, self._pos
        item = heap[idx]
        while idx > 0:
            pai = (idx - 1) >> 1
            if heap[pai] < item:
                break
            heap[idx] = heap[pai]
            pos[heap[idx][1]] = idx
            idx = pai
        heap[idx] = item
        pos[item[1]] = idx

    def _descer(self, idx: int) -> None:
        heap, pos = self._heap, self._pos
        fim = len(heap)
        item = heap[idx]
        filho = 2 * idx + 1
        while filho < fim:
            direito = filho + 1
            if direito < fim and heap[direito] < heap[filho]:
                filho = direito
            if item < heap[filho]:
                break
            heap[idx] = heap[filho]
            pos[heap[idx][1]] = idx
            idx = filho
            filho = 2 * idx + 1
        heap[idx] = item
        pos[item[1]] = idx
