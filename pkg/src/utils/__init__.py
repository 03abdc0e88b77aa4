"""
Módulo de utilidades de lglab.

Contiene la configuración de logging compartida,
siguiendo el principio de responsabilidad única (SRP).
"""
