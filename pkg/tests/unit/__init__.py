"""
Tests unitarios de lglab.

Validación de componentes individuales siguiendo
principios de testing aislado.
""" 