"""
Request and report schemas for verification and simulation.
"""
