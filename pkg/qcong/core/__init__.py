"""Core modules: settings and exceptions"""
