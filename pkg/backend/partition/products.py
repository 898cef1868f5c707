"""
Статсумма Z′(k): помодовое вычисление, замкнутая формула,
цепочка тождеств для сомножителей и классический ответ на S³.
"""
import cmath
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field

import mpmath

from algebra.context import DeformationContext
from algebra.exceptions import ResonanceError

from .brst import (AUTO_GAUGE, check_level, effective_quadratic,
                   gauge_ratio, ghost_bilinear)
from .constants import (CLOSED_PHASE, GAMMA_PRECISION, IDENTITY_TOLERANCE,
                        RESONANCE_GUARD, REWRITTEN_PHASE,
                        STABILITY_CUTOFFS)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularizedConstant:
    label: str
    value: complex


@dataclass
class PartitionResult:
    """Z′(k) = prefactor · ghost_factor · gaussian_factor."""

    k: int
    theta: float
    cutoff: int
    value: complex
    prefactor: complex
    gaussian_factor: complex
    ghost_factor: complex
    line_factors: dict = field(default_factory=dict)
    regularized_constants: list = field(default_factory=list)
    degenerate: list = field(default_factory=list)


def _check_cutoff(cutoff):
    if cutoff < 1:
        raise ValueError(f'Обрезание мод должно быть ≥ 1, получено {cutoff}.')


def zeta_sqrt_constant():
    """exp(−ζ′(0)) = √(2π)."""
    return float(mpmath.exp(-mpmath.zeta(0, 1, 1)))


def regularized_integer_product():
    """Регуляризованное ∏′|m+n| = exp(−2ζ′(0)) = 2π."""
    return zeta_sqrt_constant() ** 2


def _resonance_check(ctx, n):
    if abs(1 - ctx.phase(n)) < RESONANCE_GUARD:
        raise ResonanceError(
            f'λ^{n} = 1 при θ = {ctx.theta}: сомножитель не определён.'
        )


def partition_modewise(k, theta, cutoff, xi=AUTO_GAUGE):
    """Гауссовы интегралы по модам |p|, |q| ≤ N и грассманов блок духов.

    Для моды с весом w = 8πk(p+q)²λ^{−2q}(r − λ^q) берётся ветвь
    √w = λ^{−q}|p+q|√(8πk)√(r − λ^q). Постоянные √(2πi)/√(8πk),
    множители 1/|p+q| и кратность вдоль линий q = const заменяются
    регуляризованными значениями и записываются в regularized_constants.
    """
    check_level(k)
    _check_cutoff(cutoff)
    ctx = DeformationContext.from_settings(theta=theta)
    ratio = gauge_ratio(k, xi)
    weights = effective_quadratic(k, xi, cutoff=cutoff)
    values = weights.gauge_values(ctx)
    scale = math.sqrt(8 * math.pi * k)
    gaussian_constant = cmath.sqrt(2j * math.pi)

    lines = defaultdict(list)
    for (p, q), weight in values.items():
        root = ctx.phase(-q) * abs(p + q) * scale * cmath.sqrt(
            ratio - ctx.phase(q)
        )
        if abs(root * root - weight) > 1e-9 * abs(weight):
            raise ArithmeticError(
                f'Ветвь √w для моды ({p}, {q}) не согласована с весом.'
            )
        gaussian = gaussian_constant / root
        lines[q].append(gaussian * abs(p + q) * scale / gaussian_constant)

    line_factors = {}
    for q, factors in sorted(lines.items()):
        spread = max(abs(factor - factors[0]) for factor in factors)
        if spread > 1e-9 * abs(factors[0]):
            raise ArithmeticError(
                f'Сомножители линии q = {q} различаются на {spread:.3g}.'
            )
        line_factors[q] = factors[0]

    gaussian_factor = complex(math.prod(line_factors.values()))
    ghosts = ghost_bilinear(cutoff)
    ghost_factor = regularized_integer_product()
    prefactor = CLOSED_PHASE / math.sqrt(k)
    constants = [
        RegularizedConstant('∏ √(2πi)/√(8πk) → e^{i3π/4}/√k', prefactor),
        RegularizedConstant('∏′ 1/|p+q| и кратность вдоль q = const → 1', 1.0),
        RegularizedConstant(
            f'∏′ (−2)(m+n)² по {len(ghosts.ghost_modes)} модам духов '
            f'→ ∏′|m+n| = exp(−2ζ′(0)) = 2π',
            ghost_factor,
        ),
    ]
    for constant in constants:
        logger.info('Регуляризация: %s = %s', constant.label, constant.value)
    if weights.degenerate:
        logger.warning(
            'Исключено вырожденных мод: %d (q = 0 или резонанс).',
            len(weights.degenerate),
        )
    return PartitionResult(
        k=k,
        theta=theta,
        cutoff=cutoff,
        value=prefactor * ghost_factor * gaussian_factor,
        prefactor=prefactor,
        gaussian_factor=gaussian_factor,
        ghost_factor=ghost_factor,
        line_factors=line_factors,
        regularized_constants=constants,
        degenerate=list(weights.degenerate),
    )


def partition_closed_truncated(k, theta, cutoff):
    """e^{i3π/4}(2π/√k)∏_{0<|n|≤N} λⁿ/√(1−λⁿ)."""
    check_level(k)
    _check_cutoff(cutoff)
    ctx = DeformationContext.from_settings(theta=theta)
    total = CLOSED_PHASE * 2 * math.pi / math.sqrt(k)
    for n in range(1, cutoff + 1):
        _resonance_check(ctx, n)
        for sign in (1, -1):
            lam = ctx.phase(sign * n)
            total *= lam / cmath.sqrt(1 - lam)
    return complex(total)


def partition_rewritten(k, theta, cutoff):
    """e^{iπ/4}(2π/√k)∏_{n=1}^{N} λ^{n/2}/(1−λⁿ)."""
    check_level(k)
    _check_cutoff(cutoff)
    ctx = DeformationContext.from_settings(theta=theta)
    total = REWRITTEN_PHASE * 2 * math.pi / math.sqrt(k)
    for n in range(1, cutoff + 1):
        _resonance_check(ctx, n)
        total *= cmath.exp(1j * math.pi * n * theta) / (1 - ctx.phase(n))
    return complex(total)


def modewise_stability(k, theta, xi=AUTO_GAUGE, cutoffs=STABILITY_CUTOFFS):
    """{N: Z′ помодово / Z′ замкнутая} по набору обрезаний."""
    return {
        cutoff: partition_modewise(k, theta, cutoff, xi).value
        / partition_closed_truncated(k, theta, cutoff)
        for cutoff in cutoffs
    }


@dataclass(frozen=True)
class FormComparison:
    closed: complex
    rewritten: complex

    @property
    def ratio(self):
        return self.closed / self.rewritten

    @property
    def phase_discrepancy(self):
        """arg(closed/rewritten); кратно π/2."""
        return cmath.phase(self.ratio)

    @property
    def magnitude_gap(self):
        return abs(abs(self.closed) - abs(self.rewritten))


def compare_forms(k, theta, cutoff):
    comparison = FormComparison(
        partition_closed_truncated(k, theta, cutoff),
        partition_rewritten(k, theta, cutoff),
    )
    if abs(comparison.ratio - 1) > IDENTITY_TOLERANCE:
        logger.warning(
            'Формы Z′ расходятся по фазе на %.6f рад при N = %d.',
            comparison.phase_discrepancy, cutoff,
        )
    return comparison


@dataclass(frozen=True)
class IdentityRow:
    n: int
    product_form: complex
    sine_form: complex
    gamma_form: complex

    @property
    def deviation(self):
        return max(
            abs(self.product_form - self.sine_form),
            abs(self.sine_form - self.gamma_form),
        )

    def holds(self, tol=IDENTITY_TOLERANCE):
        return self.deviation <= tol * max(1.0, abs(self.sine_form))


def identity_chain(theta, cutoff):
    """e^{iπnθ}/(1−λⁿ) = i/(2 sin πnθ) = iΓ(nθ)Γ(1−nθ)/(2π) для n ≤ N."""
    _check_cutoff(cutoff)
    rows = []
    with mpmath.workdps(GAMMA_PRECISION):
        for n in range(1, cutoff + 1):
            x = n * theta
            sine = math.sin(math.pi * x)
            if abs(sine) < RESONANCE_GUARD:
                raise ResonanceError(
                    f'sin(π·{n}·θ) = 0 при θ = {theta}.'
                )
            lam = cmath.exp(2j * math.pi * x)
            gamma = mpmath.gamma(x) * mpmath.gamma(1 - x) / (2 * mpmath.pi)
            rows.append(IdentityRow(
                n=n,
                product_form=cmath.exp(1j * math.pi * x) / (1 - lam),
                sine_form=1j / (2 * sine),
                gamma_form=1j * float(gamma),
            ))
    failed = [row.n for row in rows if not row.holds()]
    if failed:
        logger.warning('Тождества нарушены для n = %s', failed)
    return rows


def classical_partition(k):
    """Z_{S³}(k) = √(2/(k+2))·sin(π/(k+2))."""
    if k < 0:
        raise ValueError(f'Уровень k должен быть ≥ 0, получено {k}.')
    return math.sqrt(2 / (k + 2)) * math.sin(math.pi / (k + 2))


def prefactor_ratio(k1, k2, theta, cutoff):
    """|Z′(k₂)/Z′(k₁)|, ожидается √(k₁/k₂)."""
    return abs(
        partition_closed_truncated(k2, theta, cutoff)
        / partition_closed_truncated(k1, theta, cutoff)
    )
