import cmath
import math
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np
from django.conf import settings

from .constants import (DEFAULT_SAMPLE_COUNT, DEFAULT_SEED,
                        DEFAULT_TOLERANCE, MAX_TOLERANCE, MIN_SAMPLE_COUNT,
                        QUADRATURE_NODES, SAMPLE_MARGIN)


@dataclass(frozen=True)
class DeformationContext:
    """Параметры деформации и численного сравнения.

    Два контекста совместимы, если совпадают все поля.
    """

    theta: float
    tol: float = DEFAULT_TOLERANCE
    sample_count: int = DEFAULT_SAMPLE_COUNT
    rng_seed: int = DEFAULT_SEED
    quadrature_nodes: int = QUADRATURE_NODES

    def __post_init__(self):
        if not 0 < self.tol <= MAX_TOLERANCE:
            raise ValueError(
                f'Допуск должен лежать в (0, {MAX_TOLERANCE}], '
                f'получено {self.tol}.'
            )
        if self.sample_count < MIN_SAMPLE_COUNT:
            raise ValueError(
                f'Нужно не меньше {MIN_SAMPLE_COUNT} точек выборки.'
            )

    @classmethod
    def from_settings(cls, theta=None, **overrides):
        """Строит контекст из словаря SPHERE в настройках."""
        sphere = settings.SPHERE
        params = {
            'theta': sphere['DEFAULT_THETA'] if theta is None else theta,
            'tol': sphere['TOLERANCE'],
            'sample_count': sphere['SAMPLE_COUNT'],
            'rng_seed': sphere['SEED'],
            'quadrature_nodes': sphere['QUADRATURE_NODES'],
        }
        params.update(
            {key: value for key, value in overrides.items()
             if value is not None}
        )
        return cls(**params)

    def with_theta(self, theta):
        return replace(self, theta=theta)

    def with_tol(self, tol):
        return replace(self, tol=tol)

    @property
    def lam(self):
        return self.phase(1)

    def phase(self, k):
        """λ^k = exp(2πiθk) для целого k."""
        if k == 0:
            return 1.0 + 0j
        return cmath.exp(2j * math.pi * self.theta * k)

    @cached_property
    def samples(self):
        """Точки ψ для сравнения функций."""
        rng = np.random.default_rng(self.rng_seed)
        return np.sort(
            rng.uniform(SAMPLE_MARGIN, math.pi / 2 - SAMPLE_MARGIN,
                        self.sample_count)
        )

    @cached_property
    def quadrature(self):
        """Узлы и веса Гаусса–Лежандра на [0, π/2]."""
        nodes, weights = np.polynomial.legendre.leggauss(
            self.quadrature_nodes
        )
        half = math.pi / 4
        return half * (nodes + 1.0), half * weights
