import cmath
import math

import pytest

from algebra.context import DeformationContext
from algebra.elements import AlgElement
from algebra.exceptions import DegenerateLevelError, ResonanceError
from chern_simons.connections import make_connection
from dirac.operators import D1, D2
from partition.brst import (check_level, effective_quadratic,
                            gauge_divergence, gauge_divergence_closed,
                            gauge_fixing_term, ghost_bilinear,
                            quadratic_weight)
from partition.constants import CLOSED_PHASE, STABILITY_CUTOFFS
from partition.phases import PhaseSum
from partition.products import (classical_partition, compare_forms,
                                identity_chain, modewise_stability,
                                partition_closed_truncated,
                                partition_modewise, partition_rewritten,
                                prefactor_ratio, regularized_integer_product,
                                zeta_sqrt_constant)

GOLDEN = (math.sqrt(5) - 1) / 2
A = 0.8 - 0.3j
B = 1.2 + 0.5j


def _single_mode(ctx, p, q):
    a = AlgElement.from_coefficients(ctx, {(-p, -q): A})
    b = AlgElement.from_coefficients(ctx, {(p, q): B})
    return a, b


def test_phase_sum_merges_exponents():
    total = PhaseSum({2: 1.0, -1: 3.0}) + PhaseSum({2: -1.0})

    assert total == PhaseSum({-1: 3.0})
    assert not PhaseSum({0: 1.0}) + PhaseSum({0: -1.0})
    assert (total * 2).terms == {-1: 6.0}


def test_quadratic_weight_in_auto_gauge():
    base = 8 * math.pi

    assert quadratic_weight(1, 'auto', 0, 1) == PhaseSum(
        {-2: base, -1: -base}
    )
    assert quadratic_weight(2, 'auto', 2, 1) == PhaseSum(
        {-2: 2 * base * 9, -1: -2 * base * 9}
    )
    assert not quadratic_weight(1, 'auto', 1, 0)


def test_quadratic_weight_for_general_xi():
    base = 8 * math.pi
    xi = 0.25

    weight = quadratic_weight(1, xi, 0, 1)

    assert weight.terms[-2] == pytest.approx(base / (xi * math.pi))
    assert weight.terms[-1] == pytest.approx(-base)
    assert quadratic_weight(1, xi, 1, 0).terms[0] == pytest.approx(
        base * (1 / (xi * math.pi) - 1)
    )


def test_effective_quadratic_flags_degenerate_modes():
    weights = effective_quadratic(1, cutoff=1)

    assert (1, 0) in weights.degenerate
    assert (-1, 0) in weights.degenerate
    assert set(weights.gauge_modes) == {(0, 1), (0, -1), (1, 1), (-1, -1)}


def test_effective_quadratic_needs_modes():
    with pytest.raises(ValueError):
        effective_quadratic(1)


def test_effective_action_of_single_mode(ctx):
    a, b = _single_mode(ctx, 0, 1)

    weights = effective_quadratic(1, a=a, b=b)
    weight = 8 * math.pi * (ctx.phase(-2) - ctx.phase(-1))

    assert weights.amplitudes[(0, 1)] == pytest.approx(A * B)
    assert weights.action(ctx) == pytest.approx(0.5j * weight * (A * B) ** 2)


def test_level_checks():
    check_level(3)
    with pytest.raises(DegenerateLevelError):
        check_level(0)
    with pytest.raises(ValueError):
        check_level(-1)
    with pytest.raises(ValueError):
        check_level(1.5)


def test_gauge_divergence_of_generators(ctx, gens):
    unit = AlgElement.scalar(ctx)

    for name in ('alpha', 'beta'):
        conn = make_connection([(unit, gens[name])], D1)
        divergence = gauge_divergence(conn)
        assert divergence.equals(gens[name].scale(3))
        assert divergence.equals(gauge_divergence_closed(unit, gens[name]))


def test_gauge_divergence_recomputes_for_d1(ctx, gens):
    unit = AlgElement.scalar(ctx)
    conn = make_connection([(unit, gens['alpha'])], D2)

    assert gauge_divergence(conn).equals(gens['alpha'].scale(3))
    assert not gauge_divergence(make_connection([], D1, ctx))


@pytest.mark.parametrize('mode', [(1, 0), (0, 1)])
def test_gauge_fixing_term(ctx, mode):
    a, b = _single_mode(ctx, *mode)
    q = mode[1]
    conn = make_connection([(a, b)], D1)
    xi = 0.5

    divergence = gauge_divergence(conn)
    term = gauge_fixing_term(conn, xi)

    assert divergence.equals(
        AlgElement.scalar(ctx, 2 * A * B * ctx.phase(-q))
    )
    assert divergence.equals(gauge_divergence_closed(a, b))
    assert term.constant_value(ctx) == pytest.approx(
        4 * (A * B) ** 2 * ctx.phase(-2 * q) / xi
    )
    with pytest.raises(ValueError):
        gauge_fixing_term(conn, 0)


def test_ghost_bilinear(ctx):
    a, b = _single_mode(ctx, 1, 0)

    ghosts = ghost_bilinear(2, a, b)

    assert len(ghosts.ghost_modes) == 20
    assert ghosts.ghost_modes[(1, 1)] == -8.0
    assert (1, -1) not in ghosts.ghost_modes
    assert ghosts.ghost_interaction[(1, 0, 1, 0)] == pytest.approx(
        2 * A * B
    )
    assert not ghost_bilinear(1).ghost_interaction
    with pytest.raises(ValueError):
        ghost_bilinear(0)


def test_regularized_constants():
    assert zeta_sqrt_constant() == pytest.approx(math.sqrt(2 * math.pi))
    assert regularized_integer_product() == pytest.approx(2 * math.pi)


def test_half_theta_single_factor():
    expected = CLOSED_PHASE * math.pi

    result = partition_modewise(1, 0.5, 1)

    assert result.value == pytest.approx(expected)
    assert partition_closed_truncated(1, 0.5, 1) == pytest.approx(expected)
    assert partition_rewritten(1, 0.5, 1) == pytest.approx(expected)
    assert result.ghost_factor == pytest.approx(2 * math.pi)
    assert len(result.regularized_constants) == 3
    assert len(result.degenerate) == 2


def test_modewise_matches_closed_product():
    stability = modewise_stability(1, GOLDEN)

    assert set(stability) == set(STABILITY_CUTOFFS)
    for ratio in stability.values():
        assert ratio == pytest.approx(1.0, abs=1e-9)


def test_modewise_line_factors():
    ctx = DeformationContext.from_settings(theta=GOLDEN)

    result = partition_modewise(3, GOLDEN, 4)

    assert sorted(result.line_factors) == [-4, -3, -2, -1, 1, 2, 3, 4]
    for q, factor in result.line_factors.items():
        lam = ctx.phase(q)
        assert factor == pytest.approx(lam / cmath.sqrt(1 - lam))


def test_general_gauge_changes_line_factors():
    auto = partition_modewise(1, GOLDEN, 2)
    other = partition_modewise(1, GOLDEN, 2, xi=0.1)

    assert not other.degenerate
    assert abs(other.value - auto.value) > 1e-6


def test_closed_form_prefactor():
    assert partition_closed_truncated(4, GOLDEN, 1) / (
        partition_closed_truncated(1, GOLDEN, 1)
    ) == pytest.approx(0.5)
    assert prefactor_ratio(1, 4, GOLDEN, 10) == pytest.approx(0.5)
    assert prefactor_ratio(2, 9, 0.3141, 7) == pytest.approx(
        math.sqrt(2 / 9)
    )


def test_rational_theta_resonance():
    with pytest.raises(ResonanceError):
        partition_closed_truncated(1, 0.5, 2)
    with pytest.raises(ResonanceError):
        identity_chain(0.25, 4)


def test_compare_forms_phase_discrepancy():
    for cutoff in (1, 5, 12):
        comparison = compare_forms(2, GOLDEN, cutoff)
        assert comparison.magnitude_gap < 1e-9 * abs(comparison.closed)
        assert min(
            abs(comparison.ratio - unit) for unit in (1, -1, 1j, -1j)
        ) < 1e-9


def test_identity_chain():
    rows = identity_chain(GOLDEN, 50)

    assert len(rows) == 50
    assert all(row.holds() for row in rows)


def test_identity_chain_at_half():
    row, = identity_chain(0.5, 1)

    assert row.sine_form == pytest.approx(0.5j)
    assert row.product_form == pytest.approx(0.5j)
    assert row.gamma_form == pytest.approx(0.5j)


def test_classical_partition():
    assert classical_partition(1) == pytest.approx(math.sqrt(2) / 2)
    assert classical_partition(0) == pytest.approx(1.0)
    assert classical_partition(100) == pytest.approx(
        math.pi * math.sqrt(2) * 102 ** -1.5, rel=1e-2
    )
    with pytest.raises(ValueError):
        classical_partition(-1)
