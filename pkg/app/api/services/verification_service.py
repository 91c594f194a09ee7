"""
Verification service: the named certificate suite.

Runs every identity of the system as an exact symbolic check and reports one row
per check in a fixed catalog order. Checks that need beta != 0 are reported as
skipped for beta = 0. Falsification checks pass when the residual equals its
expected nonzero value, which shows that the checker can fail.
"""

import logging
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.api.algebra.parser import parse_rational
from app.api.algebra.polynomial import MultiPoly
from app.api.algebra.rational_function import RationalFn
from app.api.core.config import get_settings
from app.api.core.errors import RikitakeError
from app.api.models import (
    CANONICAL_RING,
    EXTENDED_STATE_RING,
    JET_RING,
    STATE_RING,
    NewtonCandidate,
    PointSymmetryCandidate,
    canonical_system,
    invariant_functions,
    lagrangian_system,
    named_fields,
    phi_map,
    phi_section,
    poisson_tensors,
    rikitake_field,
)
from app.api.schemas.verify import CheckResult, VerifyReport
from app.api.services.poisson_service import PoissonService
from app.api.services.symmetry_service import SymmetryService

settings = get_settings()
logger = logging.getLogger(__name__)

Residual = Union[MultiPoly, RationalFn]
Outcome = Tuple[bool, str]

MASTER_PARAMETERS = [
    (Fraction(1), Fraction(0)),
    (Fraction(2), Fraction(3)),
    (Fraction(-1), Fraction(1, 2)),
]
NEWTON_GENERAL_SOLUTION = [(1, 0), (0, 1), (2, 3)]
PENCIL_FACTORS = [Fraction(1), Fraction(2), Fraction(-1, 2)]


def _zero(residuals: Iterable[Residual]) -> Outcome:
    """Pass when every residual is identically zero; summarize the others."""
    nonzero = [str(r) for r in residuals if not r.is_zero]
    return not nonzero, "; ".join(nonzero) if nonzero else "0"


def _matches_nonzero(actual: Residual, expected: Residual) -> Outcome:
    """Pass when ``actual`` equals the expected nonzero value."""
    return (not actual.is_zero) and actual == expected, str(actual)


class VerificationContext:
    """Objects shared by the checks of one run, built on first use."""

    def __init__(self, beta: Fraction, seed: int):
        self.beta = beta
        self.rng = np.random.default_rng(seed)

    @cached_property
    def tensors(self):
        return poisson_tensors(self.beta)

    @cached_property
    def functions(self):
        return invariant_functions(self.beta)

    @cached_property
    def fields(self):
        return named_fields(self.beta, 1, 0)

    @cached_property
    def canonical(self):
        return canonical_system(self.beta)

    @cached_property
    def phi(self):
        return phi_map(self.beta)

    @cached_property
    def jets(self):
        return lagrangian_system(self.beta)

    @cached_property
    def point_symmetry(self) -> PointSymmetryCandidate:
        return PointSymmetryCandidate.from_text("-t", ["x", "y", "z"])

    def witness(self, residual: Residual, names: Sequence[str]) -> None:
        """Log the residual at a seeded sample point with positive integer coordinates."""
        point = self.rng.integers(1, 10, size=len(names))
        value = residual.evaluate([int(v) for v in point])
        logger.debug(f"witness {dict(zip(names, point.tolist()))}: {value}")


# Checks valid for every beta


def check_bihamiltonian(ctx: VerificationContext) -> Outcome:
    V0 = ctx.fields["V0"]
    first = PoissonService.ham_field(ctx.tensors.pi1, ctx.functions.H2) - V0
    second = PoissonService.ham_field(ctx.tensors.pi2, ctx.functions.H1) - V0
    return _zero(list(first) + list(second))


def _jacobi(tensor) -> Outcome:
    return _zero(PoissonService.jacobi_residual(tensor).values())


def check_jacobi_pi1(ctx: VerificationContext) -> Outcome:
    return _jacobi(ctx.tensors.pi1)


def check_jacobi_pi2(ctx: VerificationContext) -> Outcome:
    return _jacobi(ctx.tensors.pi2)


def check_casimir_pi1(ctx: VerificationContext) -> Outcome:
    return _zero(PoissonService.casimir_residual(ctx.tensors.pi1, ctx.functions.H1))


def check_casimir_pi2(ctx: VerificationContext) -> Outcome:
    # The Hamiltonian of the pi2 bracket is H1 (pi2 grad H1 is the field); H2 is its Casimir.
    return _zero(PoissonService.casimir_residual(ctx.tensors.pi2, ctx.functions.H2))


def _conformal(ctx: VerificationContext, tensor, H: MultiPoly) -> Outcome:
    bivector, scalar = PoissonService.conformal_residual(ctx.fields["euler"], tensor, -1, H, 2)
    return _zero([entry for _, _, entry in bivector.upper()] + [scalar])


def check_conformal_pi1(ctx: VerificationContext) -> Outcome:
    return _conformal(ctx, ctx.tensors.pi1, ctx.functions.H1)


def check_conformal_pi2(ctx: VerificationContext) -> Outcome:
    return _conformal(ctx, ctx.tensors.pi2, ctx.functions.H2)


def check_master_symmetry(ctx: VerificationContext) -> Outcome:
    V0 = ctx.fields["V0"]
    residuals: List[MultiPoly] = []
    for k1, k2 in MASTER_PARAMETERS:
        X = named_fields(ctx.beta, k1, k2)["master"]
        bracket = PoissonService.lie_bracket(X, V0)
        if bracket.is_zero:
            return False, f"[X, V0] vanishes for k1={k1}, k2={k2}"
        residuals.extend(bracket - V0.scale(k1))
        residuals.extend(PoissonService.lie_bracket(bracket, V0))
    return _zero(residuals)


def check_pointsym_ode1(ctx: VerificationContext) -> Outcome:
    return _zero(SymmetryService.ode1_symmetry_residual(ctx.fields["V0"], ctx.point_symmetry))


# Checks of the beta family


def check_jacobi_pibeta(ctx: VerificationContext) -> Outcome:
    return _jacobi(ctx.tensors.pibeta)


def check_casimir_pibeta(ctx: VerificationContext) -> Outcome:
    return _zero(PoissonService.casimir_residual(ctx.tensors.pibeta, ctx.functions.Cbeta))


def check_pointsym_beta_falsify(ctx: VerificationContext) -> Outcome:
    residuals = SymmetryService.ode1_symmetry_residual(rikitake_field(ctx.beta), ctx.point_symmetry)
    ring = EXTENDED_STATE_RING
    expected = [ring.var("y").scale(ctx.beta), ring.var("x").scale(-ctx.beta), ring.zero()]
    ctx.witness(residuals[0], ring.names)
    passed = any(not r.is_zero for r in residuals) and residuals == expected
    return passed, "; ".join(str(r) for r in residuals)


def check_pushforward_phi(ctx: VerificationContext) -> Outcome:
    return _zero(
        PoissonService.pushforward_residual(ctx.phi, ctx.canonical.F, rikitake_field(ctx.beta))
    )


def check_poissonmap_phi(ctx: VerificationContext) -> Outcome:
    matrix = PoissonService.poisson_map_residual(ctx.phi, ctx.tensors.pibeta)
    return _zero(entry for row in matrix for entry in row)


def check_H_pullback(ctx: VerificationContext) -> Outcome:
    return _zero([ctx.phi.pullback(ctx.functions.Hbeta) - ctx.canonical.H])


def check_casimir_pullback(ctx: VerificationContext) -> Outcome:
    return _zero([ctx.phi.pullback(ctx.functions.Cbeta) - CANONICAL_RING.var("p2")])


def check_newton_onshell(ctx: VerificationContext) -> Outcome:
    return _zero(SymmetryService.newton_onshell_from_canonical(ctx.jets, ctx.canonical))


def check_euler_lagrange(ctx: VerificationContext) -> Outcome:
    return _zero(SymmetryService.euler_lagrange_residuals(ctx.jets))


def check_newton_v1(ctx: VerificationContext) -> Outcome:
    return _zero(SymmetryService.prolong2_residual(ctx.jets, NewtonCandidate.constant(1, 0, 0)))


def check_newton_v2(ctx: VerificationContext) -> Outcome:
    residuals = list(SymmetryService.prolong2_residual(ctx.jets, NewtonCandidate.constant(0, 0, 1)))
    for c1, c2 in NEWTON_GENERAL_SOLUTION:
        residuals.extend(
            SymmetryService.prolong2_residual(ctx.jets, NewtonCandidate.constant(c1, 0, c2))
        )
    return _zero(residuals)


def check_newton_falsify(ctx: VerificationContext) -> Outcome:
    first, _ = SymmetryService.prolong2_residual(ctx.jets, NewtonCandidate.constant(0, 1, 0))
    expected = JET_RING.var("qd1").scale(4 * ctx.beta**2)
    ctx.witness(first, JET_RING.names)
    return _matches_nonzero(first, expected)


def check_noether_v1(ctx: VerificationContext) -> Outcome:
    return _zero([SymmetryService.noether_residual(ctx.jets, NewtonCandidate.constant(1, 0, 0))])


def check_noether_v2(ctx: VerificationContext) -> Outcome:
    return _zero([SymmetryService.noether_residual(ctx.jets, NewtonCandidate.constant(0, 0, 1))])


def check_noether_falsify(ctx: VerificationContext) -> Outcome:
    residual = SymmetryService.noether_residual(ctx.jets, NewtonCandidate.constant(0, 1, 0))
    q1, qd2 = JET_RING.var("q1"), JET_RING.var("qd2")
    expected = q1.scale(-ctx.beta) + (q1 * qd2).scale(1 / (2 * ctx.beta))
    ctx.witness(residual, JET_RING.names)
    return _matches_nonzero(residual, expected)


def check_conserved_energy(ctx: VerificationContext) -> Outcome:
    return _zero([SymmetryService.conservation_residuals(ctx.jets)["energy"]])


def check_conserved_momentum(ctx: VerificationContext) -> Outcome:
    return _zero([SymmetryService.conservation_residuals(ctx.jets)["momentum2"]])


# Extended checks


def check_phi_submersion(ctx: VerificationContext) -> Outcome:
    certificate = PoissonService.submersion_certificate(ctx.phi)
    if certificate is None:
        return False, "no constant nonzero maximal minor"
    cols, minor = certificate
    names = ", ".join(CANONICAL_RING.names[c] for c in cols)
    return True, f"minor({names}) = {minor}"


def check_phi_section(ctx: VerificationContext) -> Outcome:
    identity = ctx.phi.compose(phi_section(ctx.beta))
    return _zero([c - g for c, g in zip(identity.components, STATE_RING.gens())])


def check_pencil(ctx: VerificationContext) -> Outcome:
    residuals: List[MultiPoly] = []
    for c in PENCIL_FACTORS:
        residuals.extend(PoissonService.jacobi_residual(ctx.tensors.pencil(c)).values())
    return _zero(residuals)


def check_energy_equals_H(ctx: VerificationContext) -> Outcome:
    return _zero([SymmetryService.legendre_residuals(ctx.jets, ctx.canonical)["energy"]])


def check_momentum_equals_p2(ctx: VerificationContext) -> Outcome:
    residuals = SymmetryService.legendre_residuals(ctx.jets, ctx.canonical)
    return _zero([residuals["momentum1"], residuals["momentum2"]])


Check = Tuple[str, bool, Callable[[VerificationContext], Outcome]]

# (name, needs beta != 0, check)
CATALOG: List[Check] = [
    ("bihamiltonian", False, check_bihamiltonian),
    ("jacobi-pi1", False, check_jacobi_pi1),
    ("jacobi-pi2", False, check_jacobi_pi2),
    ("jacobi-pibeta", True, check_jacobi_pibeta),
    ("casimir-pi1-H1", False, check_casimir_pi1),
    ("casimir-pi2-H2", False, check_casimir_pi2),
    ("casimir-pibeta-Cbeta", True, check_casimir_pibeta),
    ("conformal-pi1", False, check_conformal_pi1),
    ("conformal-pi2", False, check_conformal_pi2),
    ("master-symmetry", False, check_master_symmetry),
    ("pointsym-ode1", False, check_pointsym_ode1),
    ("pointsym-ode1-beta-falsify", True, check_pointsym_beta_falsify),
    ("pushforward-phi", True, check_pushforward_phi),
    ("poissonmap-phi", True, check_poissonmap_phi),
    ("H-pullback", True, check_H_pullback),
    ("Casimir-pullback", True, check_casimir_pullback),
    ("newton-onshell", True, check_newton_onshell),
    ("euler-lagrange", True, check_euler_lagrange),
    ("newton-pointsym-v1", True, check_newton_v1),
    ("newton-pointsym-v2", True, check_newton_v2),
    ("newton-pointsym-falsify", True, check_newton_falsify),
    ("noether-v1", True, check_noether_v1),
    ("noether-v2", True, check_noether_v2),
    ("noether-falsify", True, check_noether_falsify),
    ("conserved-energy", True, check_conserved_energy),
    ("conserved-momentum", True, check_conserved_momentum),
]

EXTENDED_CATALOG: List[Check] = [
    ("phi-submersion", True, check_phi_submersion),
    ("phi-section", True, check_phi_section),
    ("pencil-compatibility", False, check_pencil),
    ("energy-equals-H", True, check_energy_equals_H),
    ("momentum-equals-p2", True, check_momentum_equals_p2),
]


class VerificationService:
    """Runs the certificate suite."""

    @staticmethod
    def check_names(extended: bool = False) -> List[str]:
        checks = CATALOG + (EXTENDED_CATALOG if extended else [])
        return [name for name, _, _ in checks]

    @staticmethod
    def run_check(ctx: VerificationContext, check: Check) -> CheckResult:
        name, needs_beta, fn = check
        if needs_beta and ctx.beta == 0:
            logger.debug(f"{name}: skipped for beta = 0")
            return CheckResult(name=name, status="skipped", residual=None)
        try:
            passed, summary = fn(ctx)
        except RikitakeError as exc:
            logger.error(f"{name}: {exc.error_code}: {exc.message}")
            passed, summary = False, f"{exc.error_code}: {exc.message}"
        status = "pass" if passed else "fail"
        if passed:
            logger.info(f"{name}: pass")
        else:
            logger.warning(f"{name}: fail, residual {summary}")
        return CheckResult(name=name, status=status, residual=summary)

    @staticmethod
    def verify(beta: str, seed: Optional[int] = None, extended: bool = False) -> VerifyReport:
        """
        Run the suite for one beta.

        Args:
            beta (str): Rational literal.
            seed (int): Seed for witness points; the configured default when None.
            extended (bool): Append the extended checks.

        Returns:
            VerifyReport: Rows in catalog order.

        Raises:
            ValueError: If ``beta`` is not a rational literal.

        Examples:
            >>> report = VerificationService.verify("1")
            >>> report.passed, len(report.checks)
            (True, 26)
        """
        value = parse_rational(beta)
        seed = settings.DEFAULT_SEED if seed is None else seed
        ctx = VerificationContext(value, seed)
        checks = CATALOG + (EXTENDED_CATALOG if extended else [])
        results = [VerificationService.run_check(ctx, check) for check in checks]
        return VerifyReport(beta=beta.strip(), seed=seed, checks=results)
