from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.api.algebra.polynomial import MultiPoly
from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import RingMismatchError
from app.api.models import (
    CANONICAL_RING,
    STATE_RING,
    PoissonTensor,
    PolyMap,
    VectorField,
    canonical_system,
    invariant_functions,
    named_fields,
    phi_map,
    poisson_tensors,
    rikitake_field,
)
from app.api.services.poisson_service import PoissonService
from tests.conftest import fractions, polys

x, y, z = STATE_RING.gens()
q1, q2, p1, p2 = CANONICAL_RING.gens()

canonical_polys = polys(CANONICAL_RING, max_terms=3, max_exp=2)

QUADRATIC_MONOMIALS = [e for e in product(range(3), repeat=3) if sum(e) <= 2]


@st.composite
def quadratic_fields(draw) -> VectorField:
    """Vector fields on (x, y, z) with components of total degree at most 2."""
    monomials = st.sampled_from(QUADRATIC_MONOMIALS)
    components = [
        MultiPoly(STATE_RING, draw(st.dictionaries(monomials, fractions, max_size=3))) for _ in range(3)
    ]
    return VectorField(STATE_RING, components)


def test_bihamiltonian_identity():
    tensors, functions = poisson_tensors(0), invariant_functions(0)
    V0 = rikitake_field(0)
    assert PoissonService.ham_field(tensors.pi1, functions.H2) == V0
    assert PoissonService.ham_field(tensors.pi2, functions.H1) == V0


def test_beta_field_is_hamiltonian_for_pibeta(beta):
    tensors, functions = poisson_tensors(beta), invariant_functions(beta)
    assert PoissonService.ham_field(tensors.pibeta, functions.Hbeta) == rikitake_field(beta)


@pytest.mark.parametrize("name", ["pi1", "pi2"])
def test_jacobi_of_lie_poisson_tensors(name):
    residual = PoissonService.jacobi_residual(getattr(poisson_tensors(0), name))
    assert list(residual) == [(1, 2, 3)]
    assert residual[(1, 2, 3)].is_zero


def test_jacobi_of_pibeta(beta):
    assert all(r.is_zero for r in PoissonService.jacobi_residual(poisson_tensors(beta).pibeta).values())


def test_jacobi_fails_for_non_poisson_bivector():
    bad = PoissonTensor.from_upper(STATE_RING, {(0, 1): y, (0, 2): -x, (1, 2): z})
    residual = PoissonService.jacobi_residual(bad)[(1, 2, 3)]
    assert residual == x + y + z or residual == -(x + y + z)


def test_jacobi_pencil():
    tensors = poisson_tensors(0)
    for c in (Fraction(1), Fraction(-3, 2)):
        assert all(r.is_zero for r in PoissonService.jacobi_residual(tensors.pencil(c)).values())


def test_casimirs(beta):
    tensors = poisson_tensors(beta)
    functions = invariant_functions(beta)
    assert PoissonService.casimir_residual(tensors.pi1, functions.H1).is_zero
    assert PoissonService.casimir_residual(tensors.pi2, functions.H2).is_zero
    assert PoissonService.casimir_residual(tensors.pibeta, functions.Cbeta).is_zero


def test_euler_field_is_conformal():
    tensors, functions = poisson_tensors(0), invariant_functions(0)
    euler = named_fields(0, 1, 0)["euler"]
    for pi, H in ((tensors.pi1, functions.H1), (tensors.pi2, functions.H2)):
        bivector, scalar = PoissonService.conformal_residual(euler, pi, -1, H, 2)
        assert bivector.is_zero
        assert scalar.is_zero


@pytest.mark.parametrize("k1,k2", [(1, 0), (2, 3), (-1, Fraction(1, 2))])
def test_master_symmetry(k1, k2):
    fields = named_fields(0, k1, k2)
    V0 = fields["V0"]
    bracket = PoissonService.lie_bracket(fields["master"], V0)
    assert (bracket - V0.scale(k1)).is_zero
    assert PoissonService.lie_bracket(bracket, V0).is_zero


def test_lie_bracket_is_antisymmetric():
    fields = named_fields(1, 2, 3)
    X, Y = fields["master"], fields["V"]
    assert PoissonService.lie_bracket(X, Y) == PoissonService.lie_bracket(Y, X).scale(-1)


def test_invariants_are_constant_along_the_flow():
    functions = invariant_functions(0)
    V0 = rikitake_field(0)
    assert PoissonService.lie_derivative_scalar(V0, functions.H1).is_zero
    assert PoissonService.lie_derivative_scalar(V0, functions.H2).is_zero


@given(polys(max_terms=3, max_exp=2))
def test_lie_derivative_scalar_is_a_derivation(f):
    euler = VectorField(STATE_RING, STATE_RING.gens())
    derivative = PoissonService.lie_derivative_scalar(euler, f)
    assert PoissonService.lie_derivative_scalar(euler, f * f) == derivative * f * 2


def test_canonical_bracket():
    assert PoissonService.canonical_bracket(q1, p1) == 1
    assert PoissonService.canonical_bracket(p1, q1) == -1
    assert PoissonService.canonical_bracket(q1, q2).is_zero
    mixed = PoissonService.canonical_bracket(RationalFn(q1, p2 + 1), p1)
    assert mixed == RationalFn(CANONICAL_RING.one(), p2 + 1)


@given(canonical_polys, canonical_polys)
def test_canonical_bracket_antisymmetry(F, G):
    assert PoissonService.canonical_bracket(F, G) == -PoissonService.canonical_bracket(G, F)


@settings(max_examples=50, deadline=None)
@given(canonical_polys, canonical_polys, canonical_polys)
def test_canonical_bracket_leibniz_rule(F, G, H):
    bracket = PoissonService.canonical_bracket
    assert bracket(F, G * H) == bracket(F, G) * H + G * bracket(F, H)


@settings(max_examples=25, deadline=None)
@given(quadratic_fields(), quadratic_fields(), quadratic_fields())
def test_lie_bracket_jacobi_identity(X, Y, Z):
    lie = PoissonService.lie_bracket
    assert lie(X, Y) == lie(Y, X).scale(-1)
    assert (lie(X, lie(Y, Z)) + lie(Y, lie(Z, X)) + lie(Z, lie(X, Y))).is_zero


def test_canonical_bracket_reproduces_hamilton_equations(beta):
    system = canonical_system(beta)
    for u, component in zip(CANONICAL_RING.gens(), system.F):
        assert PoissonService.canonical_bracket(u, system.H) == component


def test_poisson_bracket_of_pi1():
    pi1 = poisson_tensors(0).pi1
    assert PoissonService.poisson_bracket(pi1, x, z) == y * Fraction(1, 2)


def test_pushforward_of_phi(beta):
    residual = PoissonService.pushforward_residual(
        phi_map(beta), canonical_system(beta).F, rikitake_field(beta)
    )
    assert len(residual) == 3
    assert all(r.is_zero for r in residual)


def test_pushforward_detects_missing_term():
    beta = Fraction(1)
    system = canonical_system(beta)
    broken = VectorField(
        CANONICAL_RING,
        [system.F[0] - p1 * p2, system.F[1], system.F[2] - q1 * p2, system.F[3]],
    )
    residual = PoissonService.pushforward_residual(phi_map(beta), broken, rikitake_field(beta))
    assert residual[0] == -(p1 * p2)
    assert residual[1] == -(q1 * p2)
    assert residual[2].is_zero


def test_poisson_map(beta):
    matrix = PoissonService.poisson_map_residual(phi_map(beta), poisson_tensors(beta).pibeta)
    assert all(entry.is_zero for row in matrix for entry in row)


def test_pullbacks(beta):
    phi = phi_map(beta)
    functions = invariant_functions(beta)
    assert phi.pullback(functions.Hbeta) == canonical_system(beta).H
    assert phi.pullback(functions.Cbeta) == p2


def test_submersion_certificate(beta):
    cols, minor = PoissonService.submersion_certificate(phi_map(beta))
    assert minor != 0
    assert len(cols) == 3


def test_submersion_certificate_absent_for_degenerate_map():
    degenerate = PolyMap(CANONICAL_RING, STATE_RING, [q1, q1, q1 * q1])
    assert PoissonService.submersion_certificate(degenerate) is None


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        PoissonService.ham_field(poisson_tensors(0).pi1, q1)
