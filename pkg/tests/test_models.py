from fractions import Fraction

import pytest

from app.api.algebra.rational_function import RationalFn, substitute_rational
from app.api.core.errors import ArityMismatchError, ParameterDomainError, RingMismatchError
from app.api.models import (
    CANONICAL_RING,
    JET_RING,
    STATE_RING,
    NewtonCandidate,
    PoissonTensor,
    PointSymmetryCandidate,
    VectorField,
    canonical_system,
    catalog,
    invariant_functions,
    lagrangian_system,
    named_fields,
    phi_map,
    phi_section,
    poisson_tensors,
    rikitake_field,
)

x, y, z = STATE_RING.gens()


def test_rikitake_field_components():
    field = rikitake_field(1)
    assert field == VectorField(STATE_RING, [y * z + y, x * z - x, -x * y])
    assert rikitake_field(0).evaluate((1, 2, 3)) == (6, 3, -2)


def test_tensor_entries():
    tensors = poisson_tensors(2)
    assert tensors.pi1.entry(0, 2) == y * Fraction(1, 2)
    assert tensors.pi1.entry(2, 0) == -y * Fraction(1, 2)
    assert tensors.pi2.entry(0, 1) == z * -2
    assert tensors.pibeta.entry(0, 1) == 1
    assert tensors.pibeta.entry(1, 2) == x * Fraction(1, 4)


def test_pibeta_needs_nonzero_beta():
    with pytest.raises(ParameterDomainError) as info:
        poisson_tensors(0).pibeta
    assert info.value.field == "beta"


def test_invariants_for_beta():
    functions = invariant_functions(Fraction(1, 2))
    assert functions.Hbeta == (x * x + y * y) * Fraction(1, 4) + z * z * Fraction(1, 2)
    assert functions.Cbeta == (x * x - y * y) * Fraction(1, 2) + z
    with pytest.raises(ParameterDomainError):
        invariant_functions(0).Cbeta


def test_bivector_must_be_antisymmetric():
    with pytest.raises(ValueError):
        PoissonTensor(STATE_RING, [[x, y, z], [-y, STATE_RING.zero(), x], [-z, -x, STATE_RING.zero()]])
    with pytest.raises(ValueError):
        PoissonTensor.from_upper(STATE_RING, {(1, 0): x})


def test_vector_field_arity_and_ring():
    with pytest.raises(ArityMismatchError):
        VectorField(STATE_RING, [x, y])
    with pytest.raises(RingMismatchError):
        VectorField(STATE_RING, [x, y, CANONICAL_RING.var("q1")])


def test_canonical_system_is_certified(beta):
    system = canonical_system(beta)
    H = system.H
    assert system.F[0] == H.diff("p1")
    assert system.F[3].is_zero


def test_canonical_system_rejects_beta_zero():
    with pytest.raises(ParameterDomainError):
        canonical_system(0)


def test_phi_and_section(beta):
    phi = phi_map(beta)
    assert phi.evaluate((Fraction(2), Fraction(7), Fraction(0), Fraction(0))) == (
        2,
        0,
        Fraction(-1) / beta,
    )
    identity = phi.compose(phi_section(beta))
    assert identity.components == STATE_RING.gens()


def test_accelerations_solve_newton_equations(beta):
    js = lagrangian_system(beta)
    for delta in js.equations:
        assert substitute_rational(delta, js.on_shell_images()).is_zero


def test_second_acceleration_closed_form(beta):
    js = lagrangian_system(beta)
    q1, qd1, qd2 = JET_RING.var("q1"), JET_RING.var("qd1"), JET_RING.var("qd2")
    expected = RationalFn(q1 * qd1 * (-4 * beta**2), qd2 + 2 * beta**2)
    assert js.accelerations[1] == expected


def test_accelerations_are_free_of_time_and_accelerations(beta):
    js = lagrangian_system(beta)
    for r in js.accelerations:
        for name in ("t", "qdd1", "qdd2"):
            assert not r.num.depends_on(name)
            assert not r.den.depends_on(name)


def test_named_fields_master_for_zero_k1_logs_warning(caplog):
    fields = named_fields(1, 0, 1)
    assert fields["master"][0] == y * z
    assert "k1 = 0" in caplog.text


def test_catalog_contents():
    assert sorted(catalog(0)) == ["H1", "H2", "V", "V0", "euler", "master", "pi1", "pi2"]
    assert {"pibeta", "Hbeta", "Cbeta", "phi", "canonical"} <= set(catalog(1))


def test_point_symmetry_candidate_from_text():
    cand = PointSymmetryCandidate.from_text("-t", ["x", "y", "z"])
    assert str(cand.tau) == "-1*t"
    doubled = cand + cand
    assert doubled.A[0] == cand.A[0].scale(2)
    with pytest.raises(ArityMismatchError):
        PointSymmetryCandidate(cand.ring, cand.tau, cand.A[:2])


def test_newton_candidate_constant():
    cand = NewtonCandidate.constant(2, 0, 3)
    assert cand.xi == 2
    assert cand.eta[1] == 3
    assert str(cand.scale(Fraction(1, 2))) == "(xi=1, eta1=0, eta2=3/2)"
