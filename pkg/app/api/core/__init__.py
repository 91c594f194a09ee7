"""
Core configuration and domain error modules.
"""
