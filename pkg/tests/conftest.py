import json
import math
from pathlib import Path

import numpy as np
import pytest

from algebra.context import DeformationContext
from algebra.elements import AlgElement, generators
from algebra.trig import TrigCoeff

FIXTURES = Path(__file__).resolve().parent / 'fixtures'

GOLDEN = (math.sqrt(5) - 1) / 2

SMALL_MODES = [(m, n) for m in (-1, 0, 1) for n in (-1, 0, 1)]


@pytest.fixture
def golden_ctx():
    return DeformationContext.from_settings(theta=GOLDEN)


@pytest.fixture
def ctx(golden_ctx):
    return golden_ctx


@pytest.fixture
def gens(ctx):
    return generators(ctx)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def _complex(rng):
    return complex(rng.normal(), rng.normal())


@pytest.fixture
def random_element(rng):
    """Фабрика случайных элементов Σ f_pq(ψ)u^p v^q."""
    def make(ctx, modes=3, terms=2):
        element = {}
        for _ in range(modes):
            p, q = rng.integers(-2, 3, size=2)
            coeff = {}
            for _ in range(terms):
                a, b = rng.integers(0, 3, size=2)
                coeff[(int(a), int(b))] = _complex(rng)
            element[(int(p), int(q))] = TrigCoeff(coeff)
        return AlgElement(ctx, element)
    return make


@pytest.fixture
def random_pair(rng):
    """Фабрика пар (a, b): a с условием a_{−m,−n} = ā_mn, носители ≤ 3."""
    def make(ctx):
        indices = rng.choice(len(SMALL_MODES), size=2, replace=False)
        a_coefficients = {}
        for index in indices[:1]:
            m, n = SMALL_MODES[index]
            value = _complex(rng)
            if (m, n) == (0, 0):
                value = complex(value.real, 0.0)
            a_coefficients[(m, n)] = value
            a_coefficients[(-m, -n)] = value.conjugate()
        b_indices = rng.choice(len(SMALL_MODES), size=3, replace=False)
        b_coefficients = {
            SMALL_MODES[index]: _complex(rng) for index in b_indices
        }
        return (
            AlgElement.from_coefficients(ctx, a_coefficients),
            AlgElement.from_coefficients(ctx, b_coefficients),
        )
    return make


@pytest.fixture
def connection_payload():
    with open(FIXTURES / 'dirac_dependence.json', encoding='utf-8') as file:
        return json.load(file)
