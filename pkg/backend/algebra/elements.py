"""
Элементы S³_θ в локализованном мономиальном исчислении.

Элемент хранится как Σ f_pq(ψ)·u^p v^q с нормальным порядком
(сначала u, затем v). Моном α^p β^q при любых целых p, q
реализуется как c^p s^q u^p v^q, отрицательные степени
означают обратные элементы: α⁻¹ = sec ψ·u*, β⁻¹ = csc ψ·v*.
"""
import logging
from collections import defaultdict
from types import MappingProxyType

import numpy as np

from .exceptions import (ClassicalLimitError, ContextMismatchError,
                         NotConstantError, NotMonomialError)
from .trig import ZERO, TrigCoeff

logger = logging.getLogger(__name__)

SCALARS = (int, float, complex)


def check_context(*elements):
    """Проверяет, что все элементы построены в одном контексте."""
    contexts = {element.ctx for element in elements}
    if len(contexts) > 1:
        raise ContextMismatchError(
            'Элементы построены в разных контекстах деформации: '
            + ', '.join(f'θ={ctx.theta}' for ctx in contexts)
        )
    return elements[0].ctx


class AlgElement:
    """Конечная сумма Σ f_pq(ψ)·u^p v^q."""

    __slots__ = ('_modes', 'ctx')

    def __init__(self, ctx, modes=None):
        cleaned = {}
        for (p, q), coeff in (modes or {}).items():
            coeff = TrigCoeff.coerce(coeff)
            if coeff:
                cleaned[(int(p), int(q))] = coeff
        self._modes = cleaned
        self.ctx = ctx

    @classmethod
    def scalar(cls, ctx, value=1.0):
        return cls(ctx, {(0, 0): value})

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def monomial(cls, ctx, p, q, coeff=1.0):
        """coeff·u^p v^q."""
        return cls(ctx, {(p, q): coeff})

    @classmethod
    def realize(cls, ctx, p, q, coeff=1.0):
        """coeff·α^p β^q = coeff·c^p s^q u^p v^q."""
        return cls(ctx, {(p, q): TrigCoeff.monomial(p, q, coeff)})

    @classmethod
    def from_coefficients(cls, ctx, coefficients):
        """Σ a_mn α^m β^n по словарю {(m, n): a_mn}."""
        return cls(ctx, {
            key: TrigCoeff.monomial(key[0], key[1], value)
            for key, value in coefficients.items()
        })

    @property
    def modes(self):
        return MappingProxyType(self._modes)

    def coefficient(self, p, q):
        return self._modes.get((p, q), ZERO)

    def __bool__(self):
        return bool(self._modes)

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.ctx == other.ctx and self._modes == other._modes

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, SCALARS + (TrigCoeff,)):
            other = AlgElement.scalar(self.ctx, other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        check_context(self, other)
        acc = dict(self._modes)
        for key, coeff in other._modes.items():
            acc[key] = acc.get(key, ZERO) + coeff
        return AlgElement(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1.0)

    def __sub__(self, other):
        if isinstance(other, SCALARS + (TrigCoeff,)):
            other = AlgElement.scalar(self.ctx, other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        if isinstance(other, SCALARS + (TrigCoeff,)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, SCALARS + (TrigCoeff,)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor):
        """Умножение на скаляр или центральный TrigCoeff."""
        return AlgElement(self.ctx, {
            key: coeff * factor for key, coeff in self._modes.items()
        })

    def map_modes(self, function):
        """Применяет function(p, q, coeff) к каждой моде."""
        return AlgElement(self.ctx, {
            (p, q): function(p, q, coeff)
            for (p, q), coeff in self._modes.items()
        })

    def equals(self, other, tol=None):
        """Равенство как функций от ψ по всем модам."""
        if isinstance(other, SCALARS + (TrigCoeff,)):
            other = AlgElement.scalar(self.ctx, other)
        check_context(self, other)
        ctx = self.ctx if tol is None else self.ctx.with_tol(tol)
        keys = set(self._modes) | set(other._modes)
        return all(
            self.coefficient(*key).equals(other.coefficient(*key), ctx)
            for key in keys
        )

    def sample(self, keys=None):
        """Значения коэффициентов в точках выборки, подряд по модам."""
        keys = sorted(self._modes) if keys is None else keys
        if not keys:
            return np.zeros(0, dtype=complex)
        return np.concatenate([
            self.coefficient(*key).evaluate(self.ctx.samples) for key in keys
        ])

    def __repr__(self):
        return f'AlgElement({self})'

    def __str__(self):
        if not self._modes:
            return '0'
        parts = []
        for (p, q) in sorted(self._modes):
            letters = ''.join(
                name if power == 1 else f'{name}^{power}'
                for name, power in (('u', p), ('v', q)) if power
            )
            coeff = str(self._modes[(p, q)])
            if not letters:
                parts.append(coeff)
            elif coeff == '1':
                parts.append(letters)
            else:
                parts.append(f'({coeff}){letters}')
        return ' + '.join(parts)


def mul(x, y):
    """Произведение: u^p v^q · u^{p'} v^{q'} = λ^{−qp'} u^{p+p'} v^{q+q'}."""
    ctx = check_context(x, y)
    acc = defaultdict(lambda: defaultdict(complex))
    for (p, q), f in x.modes.items():
        for (p2, q2), g in y.modes.items():
            phase = ctx.phase(-q * p2)
            bucket = acc[(p + p2, q + q2)]
            for (a, b), cf in f.terms.items():
                for (a2, b2), cg in g.terms.items():
                    bucket[(a + a2, b + b2)] += cf * cg * phase
    return AlgElement(ctx, {
        key: TrigCoeff(terms) for key, terms in acc.items()
    })


def product(*factors):
    result = factors[0]
    for factor in factors[1:]:
        result = mul(result, factor)
    return result


def paired_zero_mode(x, y):
    """zero_mode(mul(x, y)) без построения всего произведения."""
    ctx = check_context(x, y)
    total = ZERO
    for (p, q), f in x.modes.items():
        g = y.modes.get((-p, -q))
        if g is not None:
            total = total + (f * g) * ctx.phase(q * p)
    return total


def star(x):
    """(f u^p v^q)* = f̄ λ^{−pq} u^{−p} v^{−q}."""
    ctx = x.ctx
    return AlgElement(ctx, {
        (-p, -q): f.conjugate() * ctx.phase(-p * q)
        for (p, q), f in x.modes.items()
    })


def delta1(x):
    return x.map_modes(lambda p, q, f: f * p)


def delta2(x):
    return x.map_modes(lambda p, q, f: f * q)


def dpsi(x):
    return x.map_modes(lambda p, q, f: f.derivative())


def zero_mode(x):
    return x.coefficient(0, 0)


def haar_state(x):
    """Нормированное состояние Хаара h(x) = 2∫ f₀₀ cos ψ sin ψ dψ."""
    return zero_mode(x).haar_mean(x.ctx)


def evaluate_classical(x, psi, phi1, phi2):
    """Значение функции на S³ в координатах Хопфа при θ = 0."""
    if x.ctx.theta != 0:
        raise ClassicalLimitError(
            f'Классический предел требует θ = 0, получено {x.ctx.theta}.'
        )
    total = 0j
    for (p, q), f in x.modes.items():
        total += complex(f.evaluate(psi)) * np.exp(1j * (p * phi1 + q * phi2))
    return complex(total)


def inverse(x):
    """Обратный к одночлену f·c^a s^b u^p v^q."""
    if len(x.modes) != 1:
        raise NotMonomialError(f'Обращаются только одночлены, получено {x}.')
    ((p, q), f), = x.modes.items()
    if len(f) != 1:
        raise NotMonomialError(f'Коэффициент {f} не одночлен.')
    ((a, b), coeff), = f.terms.items()
    return AlgElement.monomial(
        x.ctx, -p, -q,
        TrigCoeff.monomial(-a, -b, x.ctx.phase(-p * q) / coeff),
    )


def power(x, n):
    if n < 0:
        return power(inverse(x), -n)
    result = AlgElement.scalar(x.ctx)
    for _ in range(n):
        result = mul(result, x)
    return result


def generators(ctx):
    """Образующие u, v, α, β и их сопряжённые."""
    u = AlgElement.monomial(ctx, 1, 0)
    v = AlgElement.monomial(ctx, 0, 1)
    alpha = AlgElement.realize(ctx, 1, 0)
    beta = AlgElement.realize(ctx, 0, 1)
    return {
        'u': u,
        'v': v,
        'u*': star(u),
        'v*': star(v),
        'alpha': alpha,
        'beta': beta,
        'alpha*': star(alpha),
        'beta*': star(beta),
    }


def monomial_coefficients(x):
    """Коэффициенты a_mn разложения x = Σ a_mn α^m β^n."""
    coefficients = {}
    for (m, n), f in x.modes.items():
        try:
            coefficients[(m, n)] = f.shift(-m, -n).constant_value(x.ctx)
        except NotConstantError as error:
            raise NotMonomialError(
                f'Мода ({m}, {n}) элемента не кратна α^{m}β^{n}: {f}.'
            ) from error
    return coefficients


def proportionality(x, y):
    """Коэффициент κ наименьших квадратов в x ≈ κ·y и невязка."""
    check_context(x, y)
    keys = sorted(set(x.modes) | set(y.modes))
    return ratio_and_residual(x.sample(keys), y.sample(keys))


def ratio_and_residual(left, right):
    """κ = ⟨right, left⟩/⟨right, right⟩ и max|left − κ·right|."""
    norm = float(np.vdot(right, right).real)
    if norm == 0.0:
        residual = float(np.max(np.abs(left))) if left.size else 0.0
        return 0j, residual
    ratio = complex(np.vdot(right, left) / norm)
    residual = float(np.max(np.abs(left - ratio * right)))
    logger.debug('Отношение %s, невязка %.3g', ratio, residual)
    return ratio, residual


def is_unitary(x):
    """u*u = uu* = 1 как функции от ψ."""
    return (mul(star(x), x).equals(1.0) and mul(x, star(x)).equals(1.0))
