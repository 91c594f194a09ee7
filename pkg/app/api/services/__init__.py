"""
Verification, calculus and integration services.
"""
