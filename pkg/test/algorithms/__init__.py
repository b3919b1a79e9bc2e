"""
Testes para módulo algorithms (PSTw e algoritmos de referência).
"""
