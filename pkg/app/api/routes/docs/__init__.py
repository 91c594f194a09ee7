"""
OpenAPI response examples for the verify and simulation endpoints.
"""
