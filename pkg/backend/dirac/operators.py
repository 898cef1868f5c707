"""
Три оператора Дирака на S³_θ как отображения символов.

D1: ∂̸± = L(u)R(v)-скрученные символы, ∂̸₃ = −(δ₁+δ₂), константа 3/2.
D2: sec ψ δ₁σ₁ + csc ψ δ₂σ₂ + i[∂ψ + ½(cot ψ − tan ψ)]σ₃.
D3: i∂ψσ₁ − (tan ψ δ₁ − cot ψ δ₂)σ₂ − (δ₁+δ₂)σ₃.

Коммутатор [D, a] = Σ dₖ(a)σₖ: мультипликативные слагаемые
оператора с алгеброй коммутируют.
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Optional

from algebra.elements import (AlgElement, delta1, delta2, dpsi, mul,
                              paired_zero_mode, product)
from algebra.trig import COT, CSC, SEC, TAN, ZERO

from .constants import D1_SHIFT, LEVI_CIVITA, RESIDUE_WEIGHTS
from .spin import SpinMatrix, SpinorPair


def _u(ctx, power=1):
    return AlgElement.monomial(ctx, power, 0)


def _v(ctx, power=1):
    return AlgElement.monomial(ctx, 0, power)


def plus_inner(x):
    """∂ψ + tan ψ δ₁ − cot ψ δ₂."""
    return dpsi(x) + delta1(x).scale(TAN) - delta2(x).scale(COT)


def minus_inner(x):
    """∂ψ − tan ψ δ₁ + cot ψ δ₂."""
    return dpsi(x) - delta1(x).scale(TAN) + delta2(x).scale(COT)


def twisted_plus(x):
    """∂̸⁺(x) = u·(∂ψ + tan δ₁ − cot δ₂)(x)·v."""
    return product(_u(x.ctx), plus_inner(x), _v(x.ctx))


def twisted_minus(x):
    """∂̸⁻(x) = −u*·(∂ψ − tan δ₁ + cot δ₂)(x)·v*."""
    return -product(_u(x.ctx, -1), minus_inner(x), _v(x.ctx, -1))


def hopf_fibre(x):
    """−(δ₁ + δ₂)."""
    return -(delta1(x) + delta2(x))


def ladder_z(x):
    """Z = i(δ₁ + δ₂)."""
    return (delta1(x) + delta2(x)).scale(1j)


def ladder_raise(x):
    """L₊ = −i∂̸⁺."""
    return twisted_plus(x).scale(-1j)


def ladder_lower(x):
    """L₋ = −i∂̸⁻."""
    return twisted_minus(x).scale(-1j)


def _d1_first(x):
    return (twisted_plus(x) + twisted_minus(x)).scale(0.5)


def _d1_second(x):
    return (twisted_plus(x) - twisted_minus(x)).scale(0.5j)


def _d1_laplacian(x):
    fibre = delta1(x) + delta2(x)
    return (
        delta1(fibre) + delta2(fibre)
        + (twisted_plus(twisted_minus(x))
           + twisted_minus(twisted_plus(x))).scale(0.5)
    )


def _d2_first(x):
    return delta1(x).scale(SEC)


def _d2_second(x):
    return delta2(x).scale(CSC)


def _d2_third(x):
    return dpsi(x).scale(1j)


def _d2_diagonal(x):
    """i[∂ψ + ½(cot ψ − tan ψ)] с мультипликативным слагаемым."""
    return (dpsi(x) + x.scale((COT - TAN) * 0.5)).scale(1j)


def _angular(x):
    return delta1(delta1(x)).scale(SEC * SEC) + delta2(delta2(x)).scale(
        CSC * CSC
    )


def _d2_laplacian(x):
    return _angular(x) - dpsi(dpsi(x)) - dpsi(x).scale(COT - TAN)


def _d3_first(x):
    return dpsi(x).scale(1j)


def _d3_second(x):
    return -(delta1(x).scale(TAN) - delta2(x).scale(COT))


def _d3_laplacian(x):
    return _angular(x) - dpsi(dpsi(x))


@dataclass(frozen=True, eq=False)
class DiracChoice:
    """Оператор Дирака: символы дифференцирований, лапласиан,
    постоянный сдвиг и веса вычетов."""

    name: str
    derivations: tuple
    laplacian: Callable
    shift: float = 0.0
    residue_weights: MappingProxyType = field(default=None)
    diagonal: Optional[Callable] = None
    off_diagonal: Optional[Callable] = None

    def __post_init__(self):
        object.__setattr__(
            self, 'residue_weights',
            MappingProxyType(dict(RESIDUE_WEIGHTS[self.name])),
        )

    @property
    def label(self):
        return self.name.upper()

    def derive(self, k, x):
        """dₖ(x), k ∈ {1, 2, 3}."""
        return self.derivations[k - 1](x)

    def ladder(self, x):
        """(d₁ − i d₂, d₁ + i d₂)(x)."""
        if self.off_diagonal is not None:
            return self.off_diagonal(x)
        first, second = self.derive(1, x), self.derive(2, x)
        return first - second.scale(1j), first + second.scale(1j)

    def diagonal_term(self, x):
        if self.diagonal is not None:
            return self.diagonal(x)
        return self.derive(3, x)

    def __str__(self):
        return self.label


D1 = DiracChoice(
    name='d1',
    derivations=(_d1_first, _d1_second, hopf_fibre),
    laplacian=_d1_laplacian,
    shift=D1_SHIFT,
    off_diagonal=lambda x: (twisted_plus(x), twisted_minus(x)),
)

D2 = DiracChoice(
    name='d2',
    derivations=(_d2_first, _d2_second, _d2_third),
    laplacian=_d2_laplacian,
    diagonal=_d2_diagonal,
)

D3 = DiracChoice(
    name='d3',
    derivations=(_d3_first, _d3_second, hopf_fibre),
    laplacian=_d3_laplacian,
)

DIRAC_CHOICES = {choice.name: choice for choice in (D1, D2, D3)}


def get_dirac(name):
    try:
        return DIRAC_CHOICES[str(name).lower()]
    except KeyError:
        raise ValueError(
            f'Неизвестный оператор Дирака {name!r}; '
            f'доступны: {", ".join(DIRAC_CHOICES)}.'
        ) from None


def commutator(dirac, a):
    """[D, a] = [[d₃a, (d₁ − i d₂)a], [(d₁ + i d₂)a, −d₃a]]."""
    upper, lower = dirac.ladder(a)
    third = dirac.derive(3, a)
    return SpinMatrix([[third, upper], [lower, -third]])


def one_form(dirac, a, b):
    """a·[D, b]."""
    return a * commutator(dirac, b)


def component_symbols(dirac, a, b):
    """Скалярные компоненты Aₖ = a·dₖ(b) формы A = a[D, b]."""
    return tuple(mul(a, dirac.derive(k, b)) for k in (1, 2, 3))


def apply_dirac(dirac, spinor, with_shift=False):
    """Действие символа D на спинор (x; y)."""
    x, y = spinor.upper, spinor.lower
    _, lower_x = dirac.ladder(x)
    raise_y, _ = dirac.ladder(y)
    upper = dirac.diagonal_term(x) + raise_y
    lower = lower_x - dirac.diagonal_term(y)
    result = SpinorPair(upper, lower)
    if with_shift and dirac.shift:
        result = result + spinor.scale(dirac.shift)
    return result


def laplacian(dirac, x):
    return dirac.laplacian(x)


def derivative_table(dirac, components):
    """{(j, k): dⱼ(Aₖ)}."""
    return {
        (j, k): dirac.derive(j, components[k - 1])
        for j in (1, 2, 3) for k in (1, 2, 3)
    }


def epsilon_contract(components, table):
    """Σ ε^{ijk} Aᵢ·dⱼ(Aₖ)."""
    ctx = components[0].ctx
    total = AlgElement.zero(ctx)
    for (i, j, k), sign in LEVI_CIVITA.items():
        total = total + mul(components[i - 1], table[(j, k)]).scale(sign)
    return total


def epsilon_contract_zero_mode(components, table):
    """Нулевая мода Σ ε^{ijk} Aᵢ·dⱼ(Aₖ)."""
    total = ZERO
    for (i, j, k), sign in LEVI_CIVITA.items():
        total = total + paired_zero_mode(
            components[i - 1], table[(j, k)]
        ) * sign
    return total


def epsilon_cubic_zero_mode(components):
    """Нулевая мода Σ ε^{ijk} AᵢAⱼAₖ."""
    total = ZERO
    for (i, j, k), sign in LEVI_CIVITA.items():
        total = total + paired_zero_mode(
            mul(components[i - 1], components[j - 1]), components[k - 1]
        ) * sign
    return total
