"""
Simulation endpoint documentation.

Contains OpenAPI response examples for the simulate and analyze routes.
"""

_parameter_domain_error = {
    "description": "Bad Request - Parameter Outside Its Domain",
    "content": {
        "application/json": {
            "examples": {
                "beta_zero": {
                    "summary": "r4 requested with beta = 0",
                    "value": {
                        "error": "PARAMETER_DOMAIN",
                        "message": "The symplectic realization is defined only for beta != 0",
                        "status_code": 400,
                        "errors": {
                            "beta": ["The symplectic realization is defined only for beta != 0"]
                        },
                    },
                },
                "arity": {
                    "summary": "Initial state of the wrong length",
                    "value": {
                        "error": "ARITY_MISMATCH",
                        "message": "r3 needs 3 initial coordinates, got 4",
                        "status_code": 400,
                        "errors": {"x0": ["r3 needs 3 initial coordinates, got 4"]},
                    },
                },
            }
        }
    },
}

# SIMULATE ENDPOINT DOCS
simulate_responses = {
    200: {
        "description": "Trajectory Computed",
        "content": {
            "application/json": {
                "examples": {
                    "r3": {
                        "summary": "Two rk4 steps of the beta = 0 system",
                        "value": {
                            "status": "SUCCESS",
                            "status_code": 200,
                            "message": "Trajectory computed",
                            "data": {
                                "header": ["t", "x", "y", "z", "H1", "H2"],
                                "rows": [
                                    [0.0, 1.0, 2.0, 3.0, -0.75, 11.5],
                                    [0.001, 1.006, 2.003, 2.998, -0.75, 11.5],
                                ],
                            },
                        },
                    }
                }
            }
        },
    },
    400: _parameter_domain_error,
}

# ANALYZE ENDPOINT DOCS
analyze_responses = {
    200: {
        "description": "Analysis Complete",
        "content": {
            "application/json": {
                "examples": {
                    "drift": {
                        "summary": "Invariant drift within tolerance",
                        "value": {
                            "status": "SUCCESS",
                            "status_code": 200,
                            "message": "Analysis complete",
                            "data": {
                                "mode": "drift",
                                "params": {
                                    "system": "r3",
                                    "beta": "0",
                                    "x0": [1.0, 2.0, 3.0],
                                    "dt": 0.001,
                                    "steps": 10000,
                                    "method": "rk4",
                                    "tol": 1e-08,
                                    "invariants": {"H1": 1.2e-13, "H2": 3.4e-13},
                                },
                                "max_abs": 3.4e-13,
                                "pass": True,
                            },
                        },
                    }
                }
            }
        },
    },
    400: _parameter_domain_error,
}
