"""
Verification endpoint documentation.

Contains OpenAPI response examples for the verification routes.
"""

# RUN VERIFICATION ENDPOINT DOCS
run_verification_responses = {
    200: {
        "description": "Suite Completed",
        "content": {
            "application/json": {
                "examples": {
                    "all_pass": {
                        "summary": "Every check passes for beta = 1",
                        "value": {
                            "status": "SUCCESS",
                            "status_code": 200,
                            "message": "Verification complete",
                            "data": {
                                "beta": "1",
                                "seed": 0,
                                "checks": [
                                    {"name": "bihamiltonian", "status": "pass", "residual": "0"},
                                    {"name": "jacobi-pibeta", "status": "pass", "residual": "0"},
                                    {
                                        "name": "newton-pointsym-falsify",
                                        "status": "pass",
                                        "residual": "4*qd1",
                                    },
                                ],
                                "passed": True,
                            },
                        },
                    },
                    "beta_zero": {
                        "summary": "beta = 0 skips the beta-family checks",
                        "value": {
                            "status": "SUCCESS",
                            "status_code": 200,
                            "message": "Verification complete",
                            "data": {
                                "beta": "0",
                                "seed": 0,
                                "checks": [
                                    {"name": "jacobi-pi1", "status": "pass", "residual": "0"},
                                    {"name": "jacobi-pibeta", "status": "skipped", "residual": None},
                                ],
                                "passed": True,
                            },
                        },
                    },
                }
            }
        },
    },
    400: {
        "description": "Bad Request - beta is not a rational literal",
        "content": {
            "application/json": {
                "examples": {
                    "bad_beta": {
                        "summary": "Unparseable beta",
                        "value": {
                            "error": "VALIDATION_ERROR",
                            "message": "Validation failed",
                            "status_code": 400,
                            "errors": {"beta": ["Value error, 'abc' is not a rational number"]},
                        },
                    }
                }
            }
        },
    },
}

# LIST CHECKS ENDPOINT DOCS
list_checks_responses = {
    200: {
        "description": "Check Names",
        "content": {
            "application/json": {
                "examples": {
                    "catalog": {
                        "summary": "Catalog order",
                        "value": {
                            "status": "SUCCESS",
                            "status_code": 200,
                            "message": "Check catalog",
                            "data": {"checks": ["bihamiltonian", "jacobi-pi1", "jacobi-pi2"]},
                        },
                    }
                }
            }
        },
    },
}
