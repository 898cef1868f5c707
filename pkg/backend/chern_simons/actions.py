"""
Действие Черна–Саймонса: замкнутые формулы и независимый движок.

Движок: S = (i/6)∮ ε^{ijk}(3Aᵢdⱼ(Aₖ) + 2AᵢAⱼAₖ)|D|⁻³, где
след по спину уже свёрнут в ε-контракцию (tr σᵢσⱼσₖ = 2iε^{ijk}).
"""
import cmath
import logging
from dataclasses import dataclass
from itertools import product as cartesian

from algebra.elements import AlgElement, monomial_coefficients
from algebra.exceptions import SelfAdjointnessError
from algebra.trig import ZERO, TrigCoeff
from dirac.operators import (derivative_table, epsilon_contract_zero_mode,
                            epsilon_cubic_zero_mode)
from spectral.residues import nc_integral

from .connections import self_adjointness_violation

logger = logging.getLogger(__name__)

# Общий множитель замкнутых формул
CLOSED_PREFACTORS = {'d1': -2.0, 'd2': -1.0, 'd3': -1.0}

# Множитель в исходной записи всех трёх теорем
THEOREM_PREFACTOR = -2.0


def _closed_weight(name, first, second):
    """Вес слагаемого по b-модам (p′, q′) и (p, q)."""
    (p1, q1), (p2, q2) = first, second
    if name == 'd1':
        return TrigCoeff.constant((p1 + q1) * (p2 + q2))
    if name == 'd2':
        return TrigCoeff({(0, -2): p1 * q2, (-2, 0): p2 * q1})
    return TrigCoeff({(-2, 0): (p1 + q1) * p2, (0, -2): (p1 + q1) * q2})


def cs_action_closed(dirac, a, b):
    """Замкнутая формула для A = a[D, b].

    Сумма по a-модам (m′,n′), (m,n) и b-модам (p′,q′), (p,q)
    с нулевой суммарной модой; фаза слова e_{m′n′}e_{p′q′}e_{mn}e_{pq}
    равна λ^{−n′p′ − (n′+q′)m − (n′+q′+n)p}, для D1 добавляется
    λⁿ от сопряжения u a u*.
    """
    violation = self_adjointness_violation(a)
    if violation is not None:
        raise SelfAdjointnessError(
            f'Элемент a не самосопряжён: {violation}.'
        )
    ctx = a.ctx
    a_modes = monomial_coefficients(a)
    b_modes = monomial_coefficients(b)
    total = ZERO
    for (m1, n1), (p1, q1), (m2, n2), (p2, q2) in cartesian(
        a_modes, b_modes, a_modes, b_modes
    ):
        if m1 + p1 + m2 + p2 or n1 + q1 + n2 + q2:
            continue
        exponent = -n1 * p1 - (n1 + q1) * m2 - (n1 + q1 + n2) * p2
        if dirac.name == 'd1':
            exponent += n2
        coefficient = (
            a_modes[(m1, n1)] * b_modes[(p1, q1)]
            * a_modes[(m2, n2)] * b_modes[(p2, q2)]
            * ctx.phase(exponent)
        )
        total = total + _closed_weight(
            dirac.name, (p1, q1), (p2, q2)
        ) * coefficient
    return total * CLOSED_PREFACTORS[dirac.name]


def cs_action_theorem(dirac, a, b):
    """Сумма −2Σ w·ā_{p′q′}b_{p′q′}ā_{pq}b_{pq} в исходной записи.

    ā_pq читается как a_{−p,−q}, для D1 вес содержит λ̄^q.
    Фаза перестановки λ^{pq + p′q′} и недиагональные слагаемые
    не учитываются: при pq = 0 на одной моде b для D1 сумма
    совпадает с cs_action_closed, для D2 и D3 вдвое больше.
    """
    violation = self_adjointness_violation(a)
    if violation is not None:
        raise SelfAdjointnessError(
            f'Элемент a не самосопряжён: {violation}.'
        )
    ctx = a.ctx
    a_modes = monomial_coefficients(a)
    paired = {
        (p, q): a_modes.get((-p, -q), 0.0) * coefficient
        for (p, q), coefficient in monomial_coefficients(b).items()
    }
    total = ZERO
    for (first, left), (second, right) in cartesian(
        paired.items(), paired.items()
    ):
        coefficient = left * right
        if dirac.name == 'd1':
            coefficient *= ctx.phase(-second[1])
        total = total + _closed_weight(
            dirac.name, first, second
        ) * coefficient
    return total * THEOREM_PREFACTOR


def theorem_phase_gap(closed, theorem, ctx, psi=None):
    """arg(closed/theorem) в точке ψ или для постоянных значений."""
    closed_value = evaluate_action(closed, ctx, psi)
    theorem_value = evaluate_action(theorem, ctx, psi)
    if closed_value is None or theorem_value is None:
        return None
    if abs(theorem_value) < ctx.tol or abs(closed_value) < ctx.tol:
        return None
    return cmath.phase(closed_value / theorem_value)


@dataclass(frozen=True)
class EngineParts:
    """Нулевые моды ε-контракций: квадратичная и кубическая."""

    quadratic: TrigCoeff
    cubic: TrigCoeff


def cs_action_parts(conn):
    components = conn.components
    quadratic = epsilon_contract_zero_mode(
        components, derivative_table(conn.dirac, components)
    )
    return EngineParts(quadratic, epsilon_cubic_zero_mode(components))


def cs_action_engine(dirac, conn):
    """Действие через ε-контракцию и вычет Tr(·|D|^{−3−z})."""
    if conn.dirac is not dirac:
        conn = conn.with_dirac(dirac)
    parts = cs_action_parts(conn)
    integrand = AlgElement.scalar(
        conn.ctx, parts.quadratic * 3 + parts.cubic * 2
    )
    value = nc_integral(dirac, integrand, 3) * (1j / 6)
    logger.debug(
        '%s: квадратичная часть %s, кубическая %s',
        dirac.label, parts.quadratic, parts.cubic,
    )
    return value


def evaluate_action(value, ctx, psi=None):
    """Число для вывода: значение при ψ, либо константа,
    либо среднее по Хаару (None, если оно расходится)."""
    if psi is not None:
        return complex(value.evaluate(psi))
    try:
        return value.constant_value(ctx)
    except ValueError:
        if all(a > -2 and b > -2 for a, b in value.terms):
            return value.haar_mean(ctx)
        logger.warning(
            'Среднее по Хаару для %s расходится на краях отрезка.', value
        )
        return None
