"""
Testes para o pacote pyapsp.
"""

