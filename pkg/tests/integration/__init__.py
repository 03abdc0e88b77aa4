"""
Tests de integración de lglab.

Validación de flujos completos siguiendo
principios de testing end-to-end.
""" 