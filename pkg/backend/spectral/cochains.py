"""
Коцепи φ₁, φ₃ трёхмерной формулы локального индекса.

∇(X) = [D′², X] реализован как символ лапласиана D,
применённый к каждому элементу матрицы X.
"""
import logging

from algebra.elements import is_unitary, star
from algebra.exceptions import NonUnitaryError
from algebra.trig import TrigCoeff
from dirac.operators import commutator

from .residues import nc_integral, tau_k

logger = logging.getLogger(__name__)


def _nabla(dirac, matrix, times=1):
    for _ in range(times):
        matrix = matrix.map(dirac.laplacian)
    return matrix


def _one_form_words(dirac, a0, a1):
    """a⁰da¹, a⁰∇(da¹), a⁰∇²(da¹)."""
    differential = commutator(dirac, a1)
    return tuple(
        a0 * _nabla(dirac, differential, times) for times in range(3)
    )


def phi1(dirac, a0, a1):
    """∮a⁰da¹|D|⁻¹ − ¼∮a⁰∇(da¹)|D|⁻³ + ⅛∮a⁰∇²(da¹)|D|⁻⁵."""
    plain, once, twice = _one_form_words(dirac, a0, a1)
    total = (
        nc_integral(dirac, plain, 1)
        - nc_integral(dirac, once, 3) * 0.25
        + nc_integral(dirac, twice, 5) * 0.125
    )
    return TrigCoeff.coerce(total).constant_value(a0.ctx)


def phi1_full(dirac, a0, a1):
    """Шестичленная форма φ₁ через τ₀, τ₁, τ₂."""
    plain, once, twice = _one_form_words(dirac, a0, a1)
    total = (
        tau_k(dirac, plain, 0, power=1)
        - tau_k(dirac, once, 0, power=3) * 0.25
        - tau_k(dirac, once, 1, power=3) * 0.5
        + tau_k(dirac, twice, 0, power=5) * 0.125
        + tau_k(dirac, twice, 1, power=5) / 3
        + tau_k(dirac, twice, 2, power=5) / 12
    )
    return TrigCoeff.coerce(total).constant_value(a0.ctx)


def three_form_word(dirac, a0, a1, a2, a3):
    """a⁰·da¹·da²·da³."""
    return (
        a0 * commutator(dirac, a1)
        * commutator(dirac, a2)
        * commutator(dirac, a3)
    )


def phi3(dirac, a0, a1, a2, a3):
    """(1/12)∮ a⁰da¹da²da³|D|⁻³."""
    return nc_integral(dirac, three_form_word(dirac, a0, a1, a2, a3), 3) / 12


def phi3_full(dirac, a0, a1, a2, a3):
    """(1/12)τ₀ + (1/6)τ₁ того же слова."""
    word = three_form_word(dirac, a0, a1, a2, a3)
    return tau_k(dirac, word, 0) / 12 + tau_k(dirac, word, 1) / 6


def index_pairing(dirac, u):
    """φ₁(u*, u) − φ₃(u*, u, u*, u) для унитарного u."""
    if not is_unitary(u):
        raise NonUnitaryError(f'Элемент {u} не унитарен.')
    u_star = star(u)
    value = phi1(dirac, u_star, u) - phi3(
        dirac, u_star, u, u_star, u
    ).constant_value(u.ctx)
    logger.debug('Спаривание индекса для %s: %s', u, value)
    return value
