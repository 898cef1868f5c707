import cmath
import math

import pytest

from algebra.elements import AlgElement
from algebra.exceptions import (ContextMismatchError, NonUnitaryError,
                                SelfAdjointnessError)
from algebra.trig import SEC, TrigCoeff
from chern_simons.actions import (cs_action_closed, cs_action_engine,
                                  cs_action_parts, cs_action_theorem,
                                  evaluate_action, theorem_phase_gap)
from chern_simons.connections import (is_self_adjoint, make_connection,
                                      self_adjointness_violation)
from chern_simons.gauge import gauge_transform
from dirac.operators import D1, D2, D3

DIRACS = [D1, D2, D3]

A10 = 0.5 + 0.5j
B10 = 1.0 + 1.0j


@pytest.fixture
def mode_pair(ctx):
    """a = a₁₀α + ā₁₀α⁻¹, b = b₁₀α."""
    a = AlgElement.from_coefficients(
        ctx, {(1, 0): A10, (-1, 0): A10.conjugate()}
    )
    b = AlgElement.from_coefficients(ctx, {(1, 0): B10})
    return a, b


def test_self_adjointness_condition(ctx, mode_pair):
    a, b = mode_pair

    assert is_self_adjoint(a)
    assert not is_self_adjoint(b)
    assert '≠' in self_adjointness_violation(b)
    assert is_self_adjoint(AlgElement.scalar(ctx, 2.0))


def test_trivial_connection_is_zero(ctx):
    unit = AlgElement.scalar(ctx)

    conn = make_connection([(unit, unit)], D1)

    assert conn.is_zero()
    assert conn.self_adjoint


def test_empty_connection_needs_context(ctx):
    with pytest.raises(ValueError):
        make_connection([], D1)
    assert make_connection([], D1, ctx).is_zero()


def test_connection_components_are_additive(ctx, random_pair):
    first, second = random_pair(ctx), random_pair(ctx)

    joined = make_connection([first, second], D2)
    parts = (make_connection([first], D2), make_connection([second], D2))

    for total, left, right in zip(
        joined.components, parts[0].components, parts[1].components
    ):
        assert total.equals(left + right)
    assert (parts[0] + parts[1]).matrix().equals(joined.matrix())


def test_connection_rejects_mixed_contexts(ctx, mode_pair):
    a, _ = mode_pair
    other = AlgElement.scalar(ctx.with_theta(0.3))

    with pytest.raises(ContextMismatchError):
        make_connection([(a, other)], D1)


def test_d1_component_formula(ctx, mode_pair, gens):
    a, b = mode_pair

    conn = make_connection([(a, b)], D1)

    assert conn.components[2].equals(-(a * b))
    assert conn.components[0].equals(a * gens['beta*'].scale(B10))


def test_dirac_dependence(ctx, mode_pair):
    a, b = mode_pair
    expected_d1 = -2 * (A10.conjugate() * B10) ** 2

    assert cs_action_closed(D1, a, b).constant_value(ctx) == pytest.approx(
        expected_d1
    )
    assert cs_action_closed(D2, a, b).is_zero(ctx)
    assert cs_action_closed(D3, a, b).equals(SEC * SEC * -1.0, ctx)


@pytest.mark.parametrize('dirac', DIRACS)
def test_closed_form_matches_engine(ctx, random_pair, dirac):
    checked = ctx.with_tol(1e-9)
    for _ in range(50):
        a, b = random_pair(ctx)
        conn = make_connection([(a, b)], dirac)
        closed = cs_action_closed(dirac, a, b)
        engine = cs_action_engine(dirac, conn)
        assert closed.equals(engine, checked), (a, b)
        assert cs_action_parts(conn).cubic.is_zero(checked)


@pytest.mark.parametrize('dirac', DIRACS)
def test_action_is_quadratic_in_b(ctx, random_pair, dirac):
    a, b = random_pair(ctx)
    t = 1.7

    closed = cs_action_closed(dirac, a, b)
    scaled = cs_action_closed(dirac, a, b.scale(t))
    engine = cs_action_engine(
        dirac, make_connection([(a, b.scale(t))], dirac)
    )

    assert scaled.equals(closed * t ** 2, ctx)
    assert engine.equals(closed * t ** 2, ctx.with_tol(1e-9))


def test_closed_form_rejects_non_self_adjoint(ctx, mode_pair):
    _, b = mode_pair

    with pytest.raises(SelfAdjointnessError):
        cs_action_closed(D1, b, b)


def _single_mode_pair(ctx, p, q):
    a = AlgElement.from_coefficients(
        ctx, {(p, q): A10, (-p, -q): A10.conjugate()}
    )
    return a, AlgElement.from_coefficients(ctx, {(p, q): B10})


@pytest.mark.parametrize('mode', [(1, 0), (0, 1), (-2, 0), (0, -1)])
def test_theorem_sum_on_single_mode(ctx, mode):
    a, b = _single_mode_pair(ctx, *mode)

    closed = cs_action_closed(D1, a, b)
    assert not closed.is_zero(ctx)
    assert cs_action_theorem(D1, a, b).equals(closed, ctx)
    for dirac in (D2, D3):
        assert cs_action_theorem(dirac, a, b).equals(
            cs_action_closed(dirac, a, b) * 2, ctx
        )


def test_theorem_sum_misses_reorder_phase(ctx):
    a, b = _single_mode_pair(ctx, 1, 1)

    closed = cs_action_closed(D1, a, b)
    theorem = cs_action_theorem(D1, a, b)

    assert closed.equals(theorem * ctx.phase(2), ctx)
    assert theorem_phase_gap(closed, theorem, ctx) == pytest.approx(
        cmath.phase(ctx.phase(2))
    )


def test_theorem_phase_gap(ctx, mode_pair):
    a, b = mode_pair

    assert theorem_phase_gap(
        cs_action_closed(D1, a, b), cs_action_theorem(D1, a, b), ctx
    ) == pytest.approx(0.0, abs=1e-12)
    assert theorem_phase_gap(
        cs_action_closed(D2, a, b), cs_action_theorem(D2, a, b), ctx
    ) is None
    with pytest.raises(SelfAdjointnessError):
        cs_action_theorem(D1, b, b)


def test_engine_on_multi_pair_connection(ctx, mode_pair, random_pair):
    conn = make_connection([mode_pair, random_pair(ctx)], D1)

    value = cs_action_engine(D1, conn)

    assert isinstance(value, TrigCoeff)
    assert cs_action_engine(D1, make_connection([], D1, ctx)).is_zero(ctx)


@pytest.mark.parametrize('dirac', DIRACS)
def test_scalar_gauge_leaves_action_unchanged(ctx, random_pair, dirac):
    conn = make_connection([random_pair(ctx)], dirac)
    u = AlgElement.scalar(ctx, cmath.exp(0.3j))

    transformed = gauge_transform(conn, u)

    for old, new in zip(conn.components, transformed.components):
        assert old.equals(new)
    assert cs_action_engine(dirac, transformed).equals(
        cs_action_engine(dirac, conn), ctx.with_tol(1e-9)
    )


def test_identity_gauge(ctx, mode_pair):
    conn = make_connection([mode_pair], D1)

    transformed = gauge_transform(conn, AlgElement.scalar(ctx))

    assert len(transformed.pairs) == 3
    assert transformed.matrix().equals(conn.matrix())


def test_gauge_rejects_non_unitary(ctx, mode_pair, gens):
    conn = make_connection([mode_pair], D1)

    with pytest.raises(NonUnitaryError):
        gauge_transform(conn, gens['alpha'])


def test_evaluate_action(ctx):
    assert evaluate_action(TrigCoeff.constant(-2.0), ctx) == -2.0
    assert evaluate_action(SEC * SEC, ctx, psi=math.pi / 3) == (
        pytest.approx(4.0)
    )
    assert evaluate_action(SEC * SEC, ctx) is None
    assert evaluate_action(SEC, ctx) == pytest.approx(2.0, abs=1e-6)
