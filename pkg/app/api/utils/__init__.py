"""
Response envelopes, exception handlers and report writers.
"""
