"""
Rikitake symmetry engine.
"""
