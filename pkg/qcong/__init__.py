"""Exact verification engine for q-analogue congruences"""
__version__ = "0.1.0"
