"""
HTTP surface, exact algebra, models and services.
"""
