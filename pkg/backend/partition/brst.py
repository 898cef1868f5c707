"""
Калибровочно фиксированное действие: d^μA_μ, член фиксации калибровки,
эффективные квадратичные веса и билинейная форма духов для D1.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import product as cartesian

from algebra.elements import (AlgElement, monomial_coefficients, mul,
                              product, star)
from algebra.exceptions import DegenerateLevelError
from dirac.operators import D1
from spectral.residues import nc_integral

from .constants import DEGENERATE_WEIGHT
from .phases import PhaseSum

logger = logging.getLogger(__name__)

AUTO_GAUGE = 'auto'


def _on_d1(conn):
    if conn.dirac is not D1:
        logger.info('Связность пересчитана для D1 из %s', conn.dirac.label)
        return conn.with_dirac(D1)
    return conn


def gauge_divergence(conn):
    """d^μA_μ = Σ dₖ(Aₖ) для D1."""
    conn = _on_d1(conn)
    total = AlgElement.zero(conn.ctx)
    for k, component in enumerate(conn.components, start=1):
        total = total + D1.derive(k, component)
    return total


def gauge_divergence_closed(a, b):
    """Σ 2(p+q)b_pq·(u a u*)α^pβ^q
    + Σ (p+q)(m+n+p+q)a_mn b_pq·α^mβ^n·α^pβ^q.
    """
    ctx = a.ctx
    u = AlgElement.monomial(ctx, 1, 0)
    conjugated = product(u, a, star(u))
    a_modes = monomial_coefficients(a)
    b_modes = monomial_coefficients(b)
    total = AlgElement.zero(ctx)
    for (p, q), b_pq in b_modes.items():
        e_pq = AlgElement.realize(ctx, p, q)
        total = total + mul(conjugated, e_pq).scale(2 * (p + q) * b_pq)
        for (m, n), a_mn in a_modes.items():
            total = total + mul(AlgElement.realize(ctx, m, n), e_pq).scale(
                (p + q) * (m + n + p + q) * a_mn * b_pq
            )
    return total


def gauge_fixing_term(conn, xi):
    """(1/2ξ)∮ d^μA_μ d^νA_ν |D1|⁻³."""
    if xi <= 0:
        raise ValueError(
            f'Параметр калибровки ξ должен быть > 0, получено {xi}.'
        )
    divergence = gauge_divergence(conn)
    return nc_integral(D1, mul(divergence, divergence), 3) / (2 * xi)


def check_level(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValueError(f'Уровень k должен быть целым ≥ 0, получено {k!r}.')
    if k == 0:
        raise DegenerateLevelError(
            'При k = 0 квадратичное действие вырождено.'
        )


def gauge_ratio(k, xi):
    """r = 1/(ξπk); в калибровке auto ровно 1."""
    if xi == AUTO_GAUGE or xi is None:
        return 1.0
    xi = float(xi)
    if xi <= 0:
        raise ValueError(
            f'Параметр калибровки ξ должен быть > 0, получено {xi}.'
        )
    return 1.0 / (xi * math.pi * k)


@dataclass
class ModeWeights:
    """Веса мод калибровочного поля и духов."""

    gauge_modes: dict = field(default_factory=dict)
    ghost_modes: dict = field(default_factory=dict)
    ghost_interaction: dict = field(default_factory=dict)
    amplitudes: dict = field(default_factory=dict)
    degenerate: list = field(default_factory=list)

    def gauge_values(self, ctx):
        """{(p, q): w_pq(λ)} без вырожденных мод."""
        values = {}
        for mode, weight in self.gauge_modes.items():
            value = weight.evaluate(ctx)
            if abs(value) < DEGENERATE_WEIGHT:
                if mode not in self.degenerate:
                    self.degenerate.append(mode)
                continue
            values[mode] = value
        return values

    def action(self, ctx):
        """(i/2)Σ w_pq x_pq², x_pq = a_{−p,−q}b_pq."""
        total = 0j
        for mode, amplitude in self.amplitudes.items():
            weight = self.gauge_modes.get(mode)
            if weight is not None:
                total += 0.5j * weight.evaluate(ctx) * amplitude ** 2
        return total


def _box(cutoff):
    return (
        (p, q)
        for p in range(-cutoff, cutoff + 1)
        for q in range(-cutoff, cutoff + 1)
        if p + q
    )


def _amplitudes(a, b):
    if a is None or b is None:
        return {}
    a_modes = monomial_coefficients(a)
    return {
        (p, q): a_modes.get((-p, -q), 0j) * b_pq
        for (p, q), b_pq in monomial_coefficients(b).items()
        if p + q
    }


def quadratic_weight(k, xi, p, q):
    """w_pq = 8πk(p+q)²(r·λ^{−2q} − λ^{−q})."""
    base = 8 * math.pi * k * (p + q) ** 2
    return (
        PhaseSum({-2 * q: base * gauge_ratio(k, xi)})
        + PhaseSum({-q: -base})
    )


def effective_quadratic(k, xi=AUTO_GAUGE, a=None, b=None, cutoff=None):
    """Суммарные веса действия Черна–Саймонса и фиксации калибровки.

    Моды берутся из носителя b либо из квадрата |p|, |q| ≤ cutoff.
    Вырожденные моды (q = 0 при r = 1) собираются в degenerate.
    """
    check_level(k)
    amplitudes = _amplitudes(a, b)
    if amplitudes:
        modes = sorted(amplitudes)
    elif cutoff is not None:
        modes = list(_box(cutoff))
    else:
        raise ValueError('Нужны элементы a, b или обрезание мод.')
    weights = ModeWeights(amplitudes=amplitudes)
    for p, q in modes:
        weight = quadratic_weight(k, xi, p, q)
        if weight:
            weights.gauge_modes[(p, q)] = weight
        else:
            weights.degenerate.append((p, q))
    if weights.degenerate:
        logger.info(
            'Вырожденные моды (исключены): %d, например %s',
            len(weights.degenerate), weights.degenerate[0],
        )
    return weights


def ghost_bilinear(cutoff, a=None, b=None):
    """−2Σ(m+n)²c̄_mn c_{−m,−n} + 2Σ(m+n)(p+q)c̄_mn c_{−m,−n}ā_pq b_pq."""
    if cutoff < 1:
        raise ValueError(f'Обрезание мод должно быть ≥ 1, получено {cutoff}.')
    weights = ModeWeights(amplitudes=_amplitudes(a, b))
    for m, n in _box(cutoff):
        weights.ghost_modes[(m, n)] = -2.0 * (m + n) ** 2
    for (m, n), ((p, q), amplitude) in cartesian(
        weights.ghost_modes, weights.amplitudes.items()
    ):
        coupling = 2 * (m + n) * (p + q) * amplitude
        if coupling:
            weights.ghost_interaction[(m, n, p, q)] = coupling
    return weights
