"""
Конечные суммы Σ c_e λ^e с точной арифметикой показателей.
"""
from types import MappingProxyType


class PhaseSum:
    """Σ c_e λ^e; одинаковые показатели складываются до вычисления λ."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        merged = {}
        for exponent, coeff in (terms or {}).items():
            merged[int(exponent)] = merged.get(int(exponent), 0) + coeff
        self._terms = {
            exponent: coeff for exponent, coeff in merged.items() if coeff
        }

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, PhaseSum):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        acc = dict(self._terms)
        for exponent, coeff in other._terms.items():
            acc[exponent] = acc.get(exponent, 0) + coeff
        return PhaseSum(acc)

    def __mul__(self, factor):
        return PhaseSum({
            exponent: coeff * factor
            for exponent, coeff in self._terms.items()
        })

    __rmul__ = __mul__

    def evaluate(self, ctx):
        return complex(sum(
            coeff * ctx.phase(exponent)
            for exponent, coeff in self._terms.items()
        ))

    def __repr__(self):
        return f'PhaseSum({self})'

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(
            f'{coeff:g}·λ^{exponent}' if exponent else f'{coeff:g}'
            for exponent, coeff in sorted(self._terms.items())
        )
