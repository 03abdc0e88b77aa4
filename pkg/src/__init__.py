"""
lglab: álgebra computacional exacta para la cohomología de de Rham torcida,
retículos de Brieskorn y emparejamientos residuo de polinomios.

Este paquete sigue principios SOLID y patrones GRASP: motores algebraicos
puros (polyalg, groebner, cu_linalg, twisted_derham, brieskorn, oracles) y
una capa de orquestación (domain, infrastructure, application, cli).
"""

__version__ = "0.4.0"
__description__ = "Cohomología de de Rham torcida y retículos de Brieskorn en aritmética exacta"
