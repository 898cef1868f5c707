"""
Дзета-функции Гурвица и Римана с аналитическим продолжением
и замкнутые формы спектральных дзета-функций Tr(|D|^{−s}).
"""
import math

import mpmath
import numpy as np
from scipy.special import bernoulli

from algebra.exceptions import ZetaPoleError

from .constants import (CONTINUATION_PRECISION, HURWITZ_BERNOULLI_ORDER,
                        HURWITZ_DIRECT_TERMS, POLE_GUARD)

_BERNOULLI = bernoulli(2 * HURWITZ_BERNOULLI_ORDER)
_EULER_COEFFICIENTS = [
    _BERNOULLI[2 * j] / math.factorial(2 * j)
    for j in range(1, HURWITZ_BERNOULLI_ORDER + 1)
]


def _euler_maclaurin(s, a, terms):
    """Σ_{k<N}(k+a)^{−s} + x^{1−s}/(s−1) + ½x^{−s}
    + Σ_j B_{2j}/(2j)!·s(s+1)…(s+2j−2)·x^{−s−2j+1}, x = N + a."""
    head = np.sum(np.power(np.arange(terms) + a, -s))
    x = terms + a
    tail = x ** (1 - s) / (s - 1) + 0.5 * x ** (-s)
    rising = s
    power = x ** (-s - 1)
    for j, coefficient in enumerate(_EULER_COEFFICIENTS, start=1):
        tail += coefficient * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= x * x
    return complex(head + tail)


def hurwitz_zeta(s, a, terms=HURWITZ_DIRECT_TERMS):
    """ζ_H(s, a) = Σ_{k≥0} (k + a)^{−s}, продолженная на s ≠ 1.

    При Re s ≥ 1 используется формула Эйлера–Маклорена; левее
    прямая сумма теряет точность на сокращениях, и значение
    берётся из mpmath с повышенной точностью.
    """
    if a <= 0:
        raise ValueError(f'Параметр a должен быть положителен, получено {a}.')
    s = complex(s)
    if abs(s - 1) < POLE_GUARD:
        raise ZetaPoleError('ζ_H(s, a) имеет полюс в s = 1.')
    if s.real >= 1:
        return _euler_maclaurin(s, a, terms)
    with mpmath.workdps(CONTINUATION_PRECISION):
        return complex(mpmath.zeta(mpmath.mpc(s), mpmath.mpf(a)))


def riemann_zeta(s):
    return hurwitz_zeta(s, 1.0)


def _rising_over_factorial(z, k):
    """Γ(z + k)/(Γ(z)·k!)."""
    return math.prod(z + i for i in range(k)) / math.factorial(k)


def spectral_zeta(dirac, s, psi=math.pi / 4, order=0):
    """Замкнутая форма Tr(|D|^{−s}).

    D1: 2[ζ_H(s−2, 3/2) − ¼ζ_H(s, 3/2)].
    D2, D3: 2Σ_{k≤order} csc^{2k}(2ψ)·Γ(s/2+k)/(Γ(s/2)k!)·ζ_R(s+2k−2).
    """
    if dirac.name == 'd1':
        return 2 * (hurwitz_zeta(s - 2, 1.5) - 0.25 * hurwitz_zeta(s, 1.5))
    weight = 1.0 / math.sin(2 * psi) ** 2
    return 2 * sum(
        weight ** k * _rising_over_factorial(s / 2, k)
        * riemann_zeta(s + 2 * k - 2)
        for k in range(order + 1)
    )
