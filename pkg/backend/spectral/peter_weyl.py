"""
Базис Питера–Вейля, лестничные соотношения и собственные спиноры D1.
"""
import math
from dataclasses import dataclass

import numpy as np

from algebra.elements import AlgElement, proportionality, ratio_and_residual
from algebra.exceptions import InvalidIndexError
from algebra.trig import TrigCoeff
from dirac.operators import (D1, apply_dirac, ladder_lower, ladder_raise,
                             ladder_z)
from dirac.spin import SpinorPair


@dataclass(frozen=True)
class PWIndex:
    m: int
    l: int  # noqa: E741
    j: int

    def __post_init__(self):
        m, ell, j = self.m, self.l, self.j
        if m < 0 or not 0 <= ell <= m or not 0 <= j <= m:
            raise InvalidIndexError(
                f'Индекс (m, l, j) = ({self.m}, {self.l}, {self.j}) '
                f'вне диапазона 0 ≤ l, j ≤ m.'
            )

    @property
    def mode(self):
        return (self.l + self.j - self.m, self.l - self.j)


def peter_weyl(idx, ctx):
    """φ̃^m_{l,j} = N·Σ_{s+t=l} C(m−j,s)C(j,t)(−1)^{j−t}
    u^{l+j−m} v^{l−j} c^{m−j−s+t} s^{j−t+s}.

    Нормировка N = √(C(m,j)/C(m,l)) даёт h(φ φ*) = 1/(m+1).
    """
    m, ell, j = idx.m, idx.l, idx.j
    norm = math.sqrt(math.comb(m, j) / math.comb(m, ell))
    terms = {}
    for s in range(max(0, ell - j), min(ell, m - j) + 1):
        t = ell - s
        key = (m - j - s + t, j - t + s)
        terms[key] = terms.get(key, 0) + (
            norm * math.comb(m - j, s) * math.comb(j, t) * (-1) ** (j - t)
        )
    return AlgElement.monomial(ctx, *idx.mode, TrigCoeff(terms))


def peter_weyl_or_zero(ctx, m, ell, j):
    """φ̃^m_{l,j} либо 0 вне диапазона индексов."""
    if m < 0 or not 0 <= ell <= m or not 0 <= j <= m:
        return AlgElement.zero(ctx)
    return peter_weyl(PWIndex(m, ell, j), ctx)


def peter_weyl_indices(max_level):
    for m in range(max_level + 1):
        for ell in range(m + 1):
            for j in range(m + 1):
                yield PWIndex(m, ell, j)


@dataclass(frozen=True)
class LadderReport:
    """Извлечённые коэффициенты Z, L₊, L₋ и лапласиана."""

    index: PWIndex
    z: complex
    raising: complex
    lowering: complex
    laplacian: complex
    residual: float

    @property
    def expected(self):
        m, ell = self.index.m, self.index.l
        return {
            'z': 1j * (2 * ell - m),
            'raising': 2j * math.sqrt(ell + 1) * math.sqrt(m - ell),
            'lowering': 2j * math.sqrt(ell) * math.sqrt(m - ell + 1),
            'laplacian': m * (m + 2),
        }

    def deviation(self):
        return max(
            abs(getattr(self, name) - value)
            for name, value in self.expected.items()
        )


def ladder_check(idx, ctx, dirac=D1):
    """Применяет Z, L±, лапласиан к φ̃^m_{l,j} и извлекает коэффициенты."""
    element = peter_weyl(idx, ctx)
    m, ell, j = idx.m, idx.l, idx.j
    checks = (
        (ladder_z(element), element),
        (ladder_raise(element), peter_weyl_or_zero(ctx, m, ell + 1, j)),
        (ladder_lower(element), peter_weyl_or_zero(ctx, m, ell - 1, j)),
        (dirac.laplacian(element), element),
    )
    ratios, residuals = zip(
        *(proportionality(image, target) for image, target in checks)
    )
    return LadderReport(idx, *ratios, residual=max(residuals))


def ladder_commutators(x):
    """Невязки [Z, L±] ∓ 2iL± и [L₊, L₋] − 4iZ на элементе x."""
    def bracket(first, second):
        return first(second(x)) - second(first(x))

    identities = (
        bracket(ladder_z, ladder_raise) - ladder_raise(x).scale(2j),
        bracket(ladder_z, ladder_lower) + ladder_lower(x).scale(2j),
        bracket(ladder_raise, ladder_lower) - ladder_z(x).scale(4j),
    )
    return [
        float(np.max(np.abs(value.sample()), initial=0.0))
        for value in identities
    ]


def eigenspinor(sign, m, k, ell, ctx):
    """Собственные спиноры D1′.

    +: Φ^m_{k,ℓ} = (−√k φ^m_{m−k+1,ℓ}; √(m−k+1) φ^m_{m−k,ℓ}),
       0 ≤ k ≤ m+1, 0 ≤ ℓ ≤ m, собственное значение m.
    −: Φ^{−m}_{k,ℓ} = (√(m−k+1) φ^{m+1}_{m−k+1,ℓ}; √(k+1) φ^{m+1}_{m−k,ℓ}),
       0 ≤ k ≤ m, 0 ≤ ℓ ≤ m+1, собственное значение −(m+3).
    """
    if sign == '+':
        if m < 0 or not 0 <= k <= m + 1 or not 0 <= ell <= m:
            raise InvalidIndexError(
                f'Φ^{m}_{{{k},{ell}}}: нужно 0 ≤ k ≤ m+1, 0 ≤ ℓ ≤ m.'
            )
        upper = peter_weyl_or_zero(ctx, m, m - k + 1, ell).scale(
            -math.sqrt(k)
        )
        lower = peter_weyl_or_zero(ctx, m, m - k, ell).scale(
            math.sqrt(m - k + 1)
        )
    elif sign == '-':
        if m < 0 or not 0 <= k <= m or not 0 <= ell <= m + 1:
            raise InvalidIndexError(
                f'Φ^-{m}_{{{k},{ell}}}: нужно 0 ≤ k ≤ m, 0 ≤ ℓ ≤ m+1.'
            )
        upper = peter_weyl(PWIndex(m + 1, m - k + 1, ell), ctx).scale(
            math.sqrt(m - k + 1)
        )
        lower = peter_weyl(PWIndex(m + 1, m - k, ell), ctx).scale(
            math.sqrt(k + 1)
        )
    else:
        raise InvalidIndexError(
            f'Знак семейства должен быть + или -, получено {sign!r}.'
        )
    return SpinorPair(upper, lower)


def spinor_proportionality(image, spinor):
    """Отношение image ≈ κ·spinor по обеим компонентам и невязка."""
    left, right = [], []
    for source, target in ((image.upper, spinor.upper),
                           (image.lower, spinor.lower)):
        keys = sorted(set(source.modes) | set(target.modes))
        left.append(source.sample(keys))
        right.append(target.sample(keys))
    return ratio_and_residual(np.concatenate(left), np.concatenate(right))


def eigen_relation(sign, m, k, ell, ctx, dirac=D1):
    """Собственное значение D′ на спиноре и невязка."""
    spinor = eigenspinor(sign, m, k, ell, ctx)
    return spinor_proportionality(apply_dirac(dirac, spinor), spinor)
