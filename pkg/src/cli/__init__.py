"""
Línea de comandos, modelos de informe y ejecución del corpus.
"""
