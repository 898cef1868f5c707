"""
Некоммутативный интеграл, функционалы τ_k, поиск полюсов
спектральной дзета-функции и оракул усечённых спектральных сумм.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from algebra.elements import zero_mode
from algebra.exceptions import UnsupportedPowerError, ZetaPoleError
from dirac.operators import get_dirac
from dirac.spin import SpinMatrix

from .constants import (CONTOUR_POINTS, CONTOUR_RADIUS, RICHARDSON_CUTOFFS,
                        SCAN_MIN_MAGNITUDE, SCAN_OFFSET, SCAN_ORDER_STEPS,
                        SCAN_RESIDUE_STEP, SCAN_STEP, SCAN_WINDOW,
                        SUPPORTED_TAU_ORDERS)
from .zeta import spectral_zeta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Pole:
    position: float
    order: int
    residue: float


def residue_weight(dirac, power):
    """Вычет Tr(|D|^{−n−z}) при z = 0."""
    try:
        return dirac.residue_weights[power]
    except KeyError:
        raise UnsupportedPowerError(
            f'Для {dirac.label} нет веса вычета степени {power}; '
            f'доступны {sorted(dirac.residue_weights)}.'
        ) from None


def _integrand_zero_mode(x):
    if isinstance(x, SpinMatrix):
        return zero_mode(x.spin_trace())
    return zero_mode(x)


def nc_integral(dirac, x, power):
    """∮ x|D|^{−n} = Res_{z=0} Tr(x|D|^{−n−z})."""
    return _integrand_zero_mode(x) * residue_weight(dirac, power)


@lru_cache(maxsize=None)
def laurent_residue(dirac_name, power, k, psi=math.pi / 4, order=0):
    """Res_{z=0} z^k Tr(|D|^{−n−z}) контурным интегралом."""
    dirac = get_dirac(dirac_name)
    angles = 2 * math.pi * np.arange(CONTOUR_POINTS) / CONTOUR_POINTS
    points = CONTOUR_RADIUS * np.exp(1j * angles)
    values = [
        z ** (k + 1) * spectral_zeta(dirac, power + z, psi, order)
        for z in points
    ]
    return complex(np.mean(values))


def tau_k(dirac, x, k, power=3):
    """τ_k(x|D|^{−n}) = Res_{z=0} z^k Tr(x|D|^{−n−z})."""
    if k not in SUPPORTED_TAU_ORDERS:
        raise ValueError(
            f'τ_k определён для k ∈ {SUPPORTED_TAU_ORDERS}, получено {k}.'
        )
    return _integrand_zero_mode(x) * laurent_residue(dirac.name, power, k)


def _zeta_real(dirac, s, psi, order):
    return spectral_zeta(dirac, s, psi, order).real


def scan_dimension_spectrum(dirac, window=SCAN_WINDOW, psi=math.pi / 4,
                            order=0):
    """Полюсы Tr(|D|^{−s}) на вещественном отрезке window.

    Нули 1/F ищутся методом Брента; смена знака у нулей самой F
    отбрасывается по величине |F| рядом с корнем.
    """
    low, high = window
    if not 0 < low < high < 5:
        raise ValueError('Окно поиска должно лежать в (0, 5).')
    grid = np.arange(low + SCAN_OFFSET, high, SCAN_STEP)

    def reciprocal(s):
        try:
            return 1.0 / _zeta_real(dirac, s, psi, order)
        except ZetaPoleError:
            return 0.0

    inverse = np.array([reciprocal(s) for s in grid])
    poles = []
    for index in np.flatnonzero(inverse[:-1] * inverse[1:] < 0):
        position = brentq(reciprocal, grid[index], grid[index + 1],
                          xtol=1e-14, rtol=1e-14)
        near = abs(_zeta_real(dirac, position + SCAN_ORDER_STEPS[1],
                              psi, order))
        if near < SCAN_MIN_MAGNITUDE:
            continue
        far = abs(_zeta_real(dirac, position + SCAN_ORDER_STEPS[0],
                             psi, order))
        pole_order = round(
            math.log(near / far)
            / math.log(SCAN_ORDER_STEPS[0] / SCAN_ORDER_STEPS[1])
        )
        h = SCAN_RESIDUE_STEP
        residue = h * (
            _zeta_real(dirac, position + h, psi, order)
            - _zeta_real(dirac, position - h, psi, order)
        ) / 2
        logger.debug(
            '%s: полюс s=%.9f, порядок %d, вычет %.6g',
            dirac.label, position, pole_order, residue,
        )
        poles.append(Pole(float(position), int(pole_order), float(residue)))
    return poles


def dirac_spectral_terms(dirac, power):
    """Слагаемое уровня m в Tr(|D|^{−n}) как функция массива m."""
    if dirac.name == 'd1':
        def term(m):
            return 2 * (m + 1) * (m + 2) / (m + 1.5) ** power
    else:
        def term(m):
            return 2 * (m + 1) ** 2 / np.where(
                m > 0, (m * (m + 2.0)) ** (power / 2), np.inf
            )
    return term


def residue_by_truncated_sums(term, cutoffs=RICHARDSON_CUTOFFS, offset=2):
    """Коэффициент при log X в частичных суммах S(X) = Σ_{m ≤ X−offset}.

    Конечные разности по X, 2X, 4X, 8X убирают степенной рост до X²
    и константу; затем две ступени экстраполяции Ричардсона по 1/X.
    """
    top = 8 * max(cutoffs)
    partial = np.cumsum(term(np.arange(top + 1, dtype=float)))

    def total(scale):
        return partial[scale - offset]

    def first(scale):
        return total(2 * scale) - total(scale)

    def second(scale):
        return first(2 * scale) - 4 * first(scale)

    def estimate(scale):
        return (second(2 * scale) - 2 * second(scale)) / (3 * math.log(2))

    small, middle, large = (estimate(scale) for scale in sorted(cutoffs))
    once = (2 * middle - small, 2 * large - middle)
    return (4 * once[1] - once[0]) / 3
