from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.api.algebra.rational_function import RationalFn
from app.api.core.errors import RingMismatchError
from app.api.models import (
    EXTENDED_CANONICAL_RING,
    EXTENDED_STATE_RING,
    JET_RING,
    NEWTON_RING,
    NewtonCandidate,
    PointSymmetryCandidate,
    canonical_system,
    lagrangian_system,
    rikitake_field,
)
from app.api.services.symmetry_service import SymmetryService
from tests.conftest import fractions, polys

t, q1, q2, qd1, qd2, qdd1, qdd2 = JET_RING.gens()


def test_total_derivative_along_flow():
    x = EXTENDED_STATE_RING.var("x")
    y, z = EXTENDED_STATE_RING.var("y"), EXTENDED_STATE_RING.var("z")
    assert SymmetryService.total_derivative(x, rikitake_field(0)) == y * z


def test_total_derivative_ring_check():
    with pytest.raises(RingMismatchError):
        SymmetryService.total_derivative(JET_RING.var("t"), rikitake_field(0))


def test_scaling_symmetry_of_reduced_system():
    cand = PointSymmetryCandidate.from_text("-t", ["x", "y", "z"])
    residuals = SymmetryService.ode1_symmetry_residual(rikitake_field(0), cand)
    assert all(r.is_zero for r in residuals)


def test_scaling_symmetry_breaks_for_beta(beta):
    cand = PointSymmetryCandidate.from_text("-t", ["x", "y", "z"])
    residuals = SymmetryService.ode1_symmetry_residual(rikitake_field(beta), cand)
    x, y = EXTENDED_STATE_RING.var("x"), EXTENDED_STATE_RING.var("y")
    assert residuals[0] == y.scale(beta)
    assert residuals[1] == x.scale(-beta)
    assert residuals[2].is_zero


def test_time_translation_is_a_symmetry():
    cand = PointSymmetryCandidate.from_text("1", ["0", "0", "0"])
    assert all(r.is_zero for r in SymmetryService.ode1_symmetry_residual(rikitake_field(3), cand))


def test_jet_total_derivative():
    f = q1 * qd2 + t
    assert SymmetryService.jet_total_derivative(f) == qd1 * qd2 + q1 * qdd2 + 1
    r = RationalFn(q1, qd2 + 1)
    expected = RationalFn(qd1 * (qd2 + 1) - q1 * qdd2, (qd2 + 1) * (qd2 + 1))
    assert SymmetryService.jet_total_derivative(r) == expected
    with pytest.raises(ValueError):
        SymmetryService.jet_total_derivative(qdd1)


def test_prolongation_of_time_dependent_candidate():
    js = lagrangian_system(1)
    cand = NewtonCandidate.from_text("t", "0", "q2")
    xi, eta, eta1, eta2 = SymmetryService.prolongation(js, cand)
    assert xi == t
    assert eta1 == (-qd1, JET_RING.zero())
    assert eta2[0] == qdd1.scale(-2)
    assert eta2[1] == -qdd2


@pytest.mark.parametrize("c1,c2", [(1, 0), (0, 1), (2, 3), (Fraction(-1, 2), 5)])
def test_general_solution_annihilates_newton_equations(beta, c1, c2):
    js = lagrangian_system(beta)
    first, second = SymmetryService.prolong2_residual(js, NewtonCandidate.constant(c1, 0, c2))
    assert first.is_zero
    assert second.is_zero


def test_q1_translation_is_not_a_symmetry(beta):
    js = lagrangian_system(beta)
    first, _ = SymmetryService.prolong2_residual(js, NewtonCandidate.constant(0, 1, 0))
    assert first == qd1.scale(4 * beta**2)


def test_noether(beta):
    js = lagrangian_system(beta)
    assert SymmetryService.noether_residual(js, NewtonCandidate.constant(1, 0, 0)).is_zero
    assert SymmetryService.noether_residual(js, NewtonCandidate.constant(0, 0, 1)).is_zero
    residual = SymmetryService.noether_residual(js, NewtonCandidate.constant(0, 1, 0))
    assert residual == q1.scale(-beta) + (q1 * qd2).scale(1 / (2 * beta))


def test_euler_lagrange_vanishes_on_shell(beta):
    js = lagrangian_system(beta)
    assert all(r.is_zero for r in SymmetryService.euler_lagrange_residuals(js))


def test_conserved_quantities(beta):
    js = lagrangian_system(beta)
    residuals = SymmetryService.conservation_residuals(js)
    assert residuals["energy"].is_zero
    assert residuals["momentum2"].is_zero
    assert not residuals["momentum1"].is_zero


def test_momentum_along_q2():
    js = lagrangian_system(2)
    momentum = SymmetryService.conserved_quantities(js)["momenta"][1]
    assert momentum == RationalFn(qd2.scale(Fraction(1, 4)) + q1 * q1 * Fraction(1, 8)) - RationalFn(
        qd1 * qd1 * 2, (qd2 + 8) * (qd2 + 8)
    )


def test_newton_follows_from_hamilton(beta):
    js, canonical = lagrangian_system(beta), canonical_system(beta)
    first, second = SymmetryService.newton_onshell_from_canonical(js, canonical)
    assert first.ring == EXTENDED_CANONICAL_RING
    assert first.is_zero
    assert second.is_zero


def test_legendre_consistency(beta):
    residuals = SymmetryService.legendre_residuals(lagrangian_system(beta), canonical_system(beta))
    assert all(r.is_zero for r in residuals.values())


def test_lagrangian_and_energy_values():
    js = lagrangian_system(1)
    # (t, q1, q2, qd1, qd2, qdd1, qdd2)
    point = [0, 0, 0, 0, 1, 0, 0]
    assert js.lagrangian.evaluate(point) == Fraction(1, 4)
    assert SymmetryService.conserved_quantities(js)["energy"].evaluate(point) == Fraction(1, 4)


extended_polys = polys(EXTENDED_STATE_RING, max_terms=2, max_exp=1)
newton_polys = polys(NEWTON_RING, max_terms=2, max_exp=1)


@st.composite
def point_candidates(draw) -> PointSymmetryCandidate:
    A = [draw(extended_polys) for _ in range(3)]
    return PointSymmetryCandidate(EXTENDED_STATE_RING, draw(extended_polys), A)


@st.composite
def newton_candidates(draw) -> NewtonCandidate:
    return NewtonCandidate(draw(newton_polys), [draw(newton_polys), draw(newton_polys)])


def _ode1(cand):
    return SymmetryService.ode1_symmetry_residual(rikitake_field(Fraction(3, 2)), cand)


JETS_BETA_2 = lagrangian_system(2)


def _prolong2(cand):
    return SymmetryService.prolong2_residual(JETS_BETA_2, cand)


@settings(max_examples=40, deadline=None)
@given(point_candidates(), point_candidates(), fractions)
def test_ode1_residual_is_linear_in_the_candidate(a, b, c):
    assert _ode1(a + b) == [r + s for r, s in zip(_ode1(a), _ode1(b))]
    assert _ode1(a.scale(c)) == [r.scale(c) for r in _ode1(a)]


@settings(max_examples=15, deadline=None)
@given(newton_candidates(), newton_candidates(), fractions)
def test_prolong2_residual_is_linear_in_the_candidate(a, b, c):
    first, second = _prolong2(a), _prolong2(b)
    assert all(s == u + v for s, u, v in zip(_prolong2(a + b), first, second))
    assert all(s == u * c for s, u in zip(_prolong2(a.scale(c)), first))
