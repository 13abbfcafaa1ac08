"""Domain objects: polynomials, rational functions, moduli, statements"""
