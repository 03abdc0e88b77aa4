"""
Tests de la línea de comandos de lglab.
"""
