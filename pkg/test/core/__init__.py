"""
Testes para módulo core (funções base compartilhadas).
"""

