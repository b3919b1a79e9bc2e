"""
Testes para módulo data (acesso a dados).
"""

