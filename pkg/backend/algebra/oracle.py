"""
Конечномерное представление при θ = 1/N: u, v заменяются
матрицами часов и сдвига, c и s становятся числами при фиксированном ψ.
"""
import math

import numpy as np


class ClockShiftRepresentation:
    """Представление π(x) = Σ f_pq(ψ) U^p V^q с UV = λVU."""

    def __init__(self, size, psi):
        self.size = size
        self.psi = psi
        omega = np.exp(2j * math.pi / size)
        self.clock = np.diag(omega ** np.arange(size))
        self.shift = np.roll(np.eye(size, dtype=complex), 1, axis=0)

    @classmethod
    def for_context(cls, ctx, psi):
        size = round(1 / ctx.theta)
        if not math.isclose(ctx.theta * size, 1.0, abs_tol=1e-12):
            raise ValueError(
                f'Матричное представление требует θ = 1/N, '
                f'получено {ctx.theta}.'
            )
        return cls(size, psi)

    def word(self, p, q):
        return (
            np.linalg.matrix_power(self.clock, p)
            @ np.linalg.matrix_power(self.shift, q)
        )

    def __call__(self, x):
        matrix = np.zeros((self.size, self.size), dtype=complex)
        for (p, q), f in x.modes.items():
            matrix += complex(f.evaluate(self.psi)) * self.word(p, q)
        return matrix
