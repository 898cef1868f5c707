"""
Связности A = Σ aᵢ[D, bᵢ].
"""
from algebra.elements import AlgElement, check_context, monomial_coefficients
from algebra.exceptions import ContextMismatchError, NotMonomialError
from dirac.operators import component_symbols, one_form
from dirac.spin import SpinMatrix


def self_adjointness_violation(a):
    """Первая мода (m, n), где a_{−m,−n} ≠ ā_mn, либо None.

    Элемент не в мономиальной форме тоже считается нарушением.
    """
    try:
        coefficients = monomial_coefficients(a)
    except NotMonomialError as error:
        return str(error)
    tol = a.ctx.tol
    for (m, n), value in sorted(coefficients.items()):
        mirror = coefficients.get((-m, -n), 0j)
        if abs(mirror - value.conjugate()) > tol * max(1.0, abs(value)):
            return (
                f'a_{{{-m},{-n}}} = {mirror:.6g} ≠ conj(a_{{{m},{n}}}) '
                f'= {value.conjugate():.6g}'
            )
    return None


def is_self_adjoint(a):
    return self_adjointness_violation(a) is None


class Connection:
    """Список пар (a, b) и компоненты (A₁, A₂, A₃) для оператора D."""

    def __init__(self, pairs, dirac, ctx=None):
        self.pairs = tuple((a, b) for a, b in pairs)
        flat = [element for pair in self.pairs for element in pair]
        if flat:
            self.ctx = check_context(*flat)
            if ctx is not None and ctx != self.ctx:
                raise ContextMismatchError(
                    f'Пары построены при θ={self.ctx.theta}, '
                    f'ожидался контекст θ={ctx.theta}.'
                )
        elif ctx is None:
            raise ValueError('Для пустой связности нужен контекст.')
        else:
            self.ctx = ctx
        self.dirac = dirac
        self.components = self._components()

    def _components(self):
        totals = [AlgElement.zero(self.ctx) for _ in range(3)]
        for a, b in self.pairs:
            for index, component in enumerate(
                component_symbols(self.dirac, a, b)
            ):
                totals[index] = totals[index] + component
        return tuple(totals)

    @property
    def self_adjoint(self):
        return all(is_self_adjoint(a) for a, _ in self.pairs)

    def is_zero(self):
        return all(not component for component in self.components)

    def matrix(self):
        """A = Σ aᵢ[D, bᵢ] как SpinMatrix."""
        forms = [one_form(self.dirac, a, b) for a, b in self.pairs]
        if not forms:
            return SpinMatrix.zero(self.ctx)
        total = forms[0]
        for form in forms[1:]:
            total = total + form
        return total

    def with_dirac(self, dirac):
        return Connection(self.pairs, dirac, self.ctx)

    def __add__(self, other):
        return Connection(self.pairs + other.pairs, self.dirac, self.ctx)

    def __repr__(self):
        return f'Connection({self.dirac.label}, pairs={len(self.pairs)})'


def make_connection(pairs, dirac, ctx=None):
    return Connection(pairs, dirac, ctx)
