"""Construction and verification services"""
