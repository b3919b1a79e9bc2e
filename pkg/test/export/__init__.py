"""
Testes para módulo export (exportadores).
"""

