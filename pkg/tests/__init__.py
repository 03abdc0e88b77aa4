"""
Tests de lglab.

Contiene tests unitarios, de integración y del CLI siguiendo
principios de testing estructurado.
""" 