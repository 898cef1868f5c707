"""
Лорановы многочлены от центральных переменных c = cos ψ, s = sin ψ.
"""
from collections import defaultdict
from types import MappingProxyType

import numpy as np

from .constants import PRUNE_THRESHOLD, RENDER_DIGITS
from .exceptions import NotConstantError


def format_complex(value, digits=RENDER_DIGITS):
    """Короткая запись комплексного числа: 2, -i, 0.5+2i."""
    value = complex(value)
    real = round(value.real, digits) + 0.0
    imag = round(value.imag, digits) + 0.0

    def number(x):
        return f'{x:.{digits}g}'

    if imag == 0:
        return number(real)
    unit = {1.0: 'i', -1.0: '-i'}.get(imag, f'{number(imag)}i')
    if real == 0:
        return unit
    sign = '' if unit.startswith('-') else '+'
    return f'{number(real)}{sign}{unit}'


class TrigCoeff:
    """Σ coeff·c^a s^b с целыми (в том числе отрицательными) a, b.

    Значение неизменяемо; коэффициенты меньше PRUNE_THRESHOLD
    отбрасываются при создании.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for (a, b), coeff in (terms or {}).items():
            coeff = complex(coeff)
            if abs(coeff) >= PRUNE_THRESHOLD:
                cleaned[(int(a), int(b))] = coeff
        self._terms = cleaned

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, a, b, coeff=1.0):
        return cls({(a, b): coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.constant(value)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, float, complex)):
            other = TrigCoeff.constant(other)
        if not isinstance(other, TrigCoeff):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = TrigCoeff.constant(other)
        if not isinstance(other, TrigCoeff):
            return NotImplemented
        acc = defaultdict(complex, self._terms)
        for key, coeff in other._terms.items():
            acc[key] += coeff
        return TrigCoeff(acc)

    __radd__ = __add__

    def __neg__(self):
        return TrigCoeff({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, float, complex)):
            other = TrigCoeff.constant(other)
        if not isinstance(other, TrigCoeff):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return TrigCoeff(
                {key: coeff * other for key, coeff in self._terms.items()}
            )
        if not isinstance(other, TrigCoeff):
            return NotImplemented
        acc = defaultdict(complex)
        for (a, b), coeff in self._terms.items():
            for (a2, b2), coeff2 in other._terms.items():
                acc[(a + a2, b + b2)] += coeff * coeff2
        return TrigCoeff(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, float, complex)):
            return NotImplemented
        return self * (1.0 / other)

    def conjugate(self):
        return TrigCoeff(
            {key: coeff.conjugate() for key, coeff in self._terms.items()}
        )

    def shift(self, a, b):
        """Умножение на c^a s^b."""
        return TrigCoeff(
            {(a0 + a, b0 + b): coeff
             for (a0, b0), coeff in self._terms.items()}
        )

    def derivative(self):
        """d/dψ: d(c^a s^b) = −a c^{a−1}s^{b+1} + b c^{a+1}s^{b−1}."""
        acc = defaultdict(complex)
        for (a, b), coeff in self._terms.items():
            if a:
                acc[(a - 1, b + 1)] -= a * coeff
            if b:
                acc[(a + 1, b - 1)] += b * coeff
        return TrigCoeff(acc)

    def evaluate(self, psi):
        psi = np.asarray(psi, dtype=float)
        cos, sin = np.cos(psi), np.sin(psi)
        total = np.zeros(psi.shape, dtype=complex)
        for (a, b), coeff in self._terms.items():
            total = total + coeff * np.power(cos, a) * np.power(sin, b)
        return total

    def equals(self, other, ctx):
        """Равенство как функций от ψ в точках выборки контекста."""
        other = TrigCoeff.coerce(other)
        left = self.evaluate(ctx.samples)
        right = other.evaluate(ctx.samples)
        scale = np.maximum(1.0, np.maximum(np.abs(left), np.abs(right)))
        return bool(np.all(np.abs(left - right) <= ctx.tol * scale))

    def is_zero(self, ctx):
        return self.equals(TrigCoeff(), ctx)

    def constant_value(self, ctx):
        """Значение постоянной функции; NotConstantError иначе."""
        values = self.evaluate(ctx.samples)
        mean = complex(values.mean())
        spread = float(np.max(np.abs(values - mean)))
        if spread > ctx.tol * max(1.0, abs(mean)):
            raise NotConstantError(
                f'Коэффициент {self} зависит от ψ (разброс {spread:.3g}).'
            )
        return mean

    def haar_mean(self, ctx):
        """2∫₀^{π/2} f(ψ) cos ψ sin ψ dψ."""
        nodes, weights = ctx.quadrature
        values = self.evaluate(nodes) * np.cos(nodes) * np.sin(nodes)
        return complex(2.0 * np.dot(weights, values))

    def __repr__(self):
        return f'TrigCoeff({self})'

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for (a, b) in sorted(self._terms):
            coeff = format_complex(self._terms[(a, b)])
            letters = ''.join(
                name if power == 1 else f'{name}^{power}'
                for name, power in (('c', a), ('s', b)) if power
            )
            if not letters:
                parts.append(coeff)
            elif coeff == '1':
                parts.append(letters)
            elif coeff == '-1':
                parts.append(f'-{letters}')
            elif '+' in coeff[1:] or '-' in coeff[1:]:
                parts.append(f'({coeff}){letters}')
            else:
                parts.append(f'{coeff}{letters}')
        return ' + '.join(parts).replace('+ -', '- ')


ONE = TrigCoeff.constant(1.0)
ZERO = TrigCoeff()
COS = TrigCoeff.monomial(1, 0)
SIN = TrigCoeff.monomial(0, 1)
TAN = TrigCoeff.monomial(-1, 1)
COT = TrigCoeff.monomial(1, -1)
SEC = TrigCoeff.monomial(-1, 0)
CSC = TrigCoeff.monomial(0, -1)
