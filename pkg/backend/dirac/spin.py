"""
Матрицы 2×2 над алгеброй и спиноры.
"""
from algebra.elements import SCALARS, AlgElement, check_context, mul
from algebra.trig import TrigCoeff

PAULI = {
    1: ((0, 1), (1, 0)),
    2: ((0, -1j), (1j, 0)),
    3: ((1, 0), (0, -1)),
}


class SpinMatrix:
    """Матрица 2×2 с элементами AlgElement."""

    __slots__ = ('entries', 'ctx')

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.ctx = check_context(*self.flat())

    @classmethod
    def constant(cls, ctx, matrix):
        return cls([
            [AlgElement.scalar(ctx, value) for value in row]
            for row in matrix
        ])

    @classmethod
    def identity(cls, ctx):
        return cls.constant(ctx, ((1, 0), (0, 1)))

    @classmethod
    def zero(cls, ctx):
        return cls.constant(ctx, ((0, 0), (0, 0)))

    @classmethod
    def pauli(cls, ctx, k):
        return cls.constant(ctx, PAULI[k])

    @classmethod
    def from_pauli(cls, c1, c2, c3, c0=None):
        """c0·I + c1σ₁ + c2σ₂ + c3σ₃."""
        c0 = AlgElement.zero(c1.ctx) if c0 is None else c0
        return cls([
            [c0 + c3, c1 - c2.scale(1j)],
            [c1 + c2.scale(1j), c0 - c3],
        ])

    def flat(self):
        return [entry for row in self.entries for entry in row]

    def entry(self, i, j):
        return self.entries[i][j]

    def map(self, function):
        return SpinMatrix([
            [function(entry) for entry in row] for row in self.entries
        ])

    def __add__(self, other):
        if not isinstance(other, SpinMatrix):
            return NotImplemented
        return SpinMatrix([
            [self.entries[i][j] + other.entries[i][j] for j in range(2)]
            for i in range(2)
        ])

    def __neg__(self):
        return self.map(lambda entry: -entry)

    def __sub__(self, other):
        if not isinstance(other, SpinMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SpinMatrix):
            return SpinMatrix([
                [mul(self.entries[i][0], other.entries[0][j])
                 + mul(self.entries[i][1], other.entries[1][j])
                 for j in range(2)]
                for i in range(2)
            ])
        if isinstance(other, AlgElement):
            return self.map(lambda entry: mul(entry, other))
        if isinstance(other, SCALARS + (TrigCoeff,)):
            return self.map(lambda entry: entry.scale(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, AlgElement):
            return self.map(lambda entry: mul(other, entry))
        if isinstance(other, SCALARS + (TrigCoeff,)):
            return self.map(lambda entry: entry.scale(other))
        return NotImplemented

    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    def spin_trace(self):
        """Нормированный след ½ tr."""
        return self.trace().scale(0.5)

    def pauli_components(self):
        """(c0, c1, c2, c3) в разложении c0·I + Σ cₖσₖ."""
        (a, b), (c, d) = self.entries
        return (
            (a + d).scale(0.5),
            (b + c).scale(0.5),
            (b - c).scale(0.5j),
            (a - d).scale(0.5),
        )

    def equals(self, other, tol=None):
        return all(
            mine.equals(theirs, tol)
            for mine, theirs in zip(self.flat(), other.flat())
        )

    def has_bounded_symbols(self):
        """Нет отрицательных степеней c и s ни в одном элементе."""
        return all(
            a >= 0 and b >= 0
            for entry in self.flat()
            for coeff in entry.modes.values()
            for (a, b) in coeff.terms
        )

    def __repr__(self):
        return 'SpinMatrix([[{}, {}], [{}, {}]])'.format(*self.flat())


class SpinorPair:
    """Столбец (upper; lower) в тривиализованном расслоении."""

    __slots__ = ('upper', 'lower', 'ctx')

    def __init__(self, upper, lower):
        self.ctx = check_context(upper, lower)
        self.upper = upper
        self.lower = lower

    def __add__(self, other):
        return SpinorPair(self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other):
        return SpinorPair(self.upper - other.upper, self.lower - other.lower)

    def scale(self, factor):
        return SpinorPair(self.upper.scale(factor), self.lower.scale(factor))

    def __bool__(self):
        return bool(self.upper) or bool(self.lower)

    def equals(self, other, tol=None):
        return (self.upper.equals(other.upper, tol)
                and self.lower.equals(other.lower, tol))

    def __repr__(self):
        return f'SpinorPair({self.upper}; {self.lower})'
