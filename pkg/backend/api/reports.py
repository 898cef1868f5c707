"""
Построение отчётов, общих для команд управления и HTTP-эндпоинтов.

Каждый отчёт содержит JSON-данные и плоские строки для CSV/Markdown.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from algebra.elements import generators
from chern_simons.actions import (cs_action_closed, cs_action_engine,
                                  cs_action_theorem, evaluate_action,
                                  theorem_phase_gap)
from chern_simons.connections import Connection
from dirac.operators import commutator, get_dirac
from partition.products import (classical_partition, compare_forms,
                                identity_chain, partition_modewise)
from spectral.spectrum import spectrum, spectrum_frame

from .constants import AVERAGE_PSI, GENERATOR_ORDER
from .serializers import (AlgElementSerializer, ConnectionSerializer,
                          TrigCoeffField, complex_pair)

logger = logging.getLogger(__name__)

POSITIONS = ('11', '12', '21', '22')


@dataclass
class Report:
    data: dict
    rows: list = field(default_factory=list)


def commutators_report(config):
    """[D, x] для восьми образующих, поэлементно."""
    ctx = config['ctx']
    dirac = get_dirac(config['dirac'])
    elements = generators(ctx)
    serializer = AlgElementSerializer()
    table = {}
    rows = []
    for name in GENERATOR_ORDER:
        matrix = commutator(dirac, elements[name])
        table[name] = {
            position: serializer.to_representation(entry)
            for position, entry in zip(POSITIONS, matrix.flat())
        }
        rows.extend(
            {'generator': name, 'position': position, 'entry': str(entry)}
            for position, entry in zip(POSITIONS, matrix.flat())
        )
    return Report(
        data={'dirac': dirac.name, 'theta': ctx.theta, 'commutators': table},
        rows=rows,
    )


def spectrum_report(config):
    dirac = get_dirac(config['dirac'])
    entries = spectrum(dirac, config['cutoff'])
    frame = spectrum_frame(entries)
    rows = frame.to_dict(orient='records')
    return Report(
        data={'dirac': dirac.name, 'cutoff': config['cutoff'], 'rows': rows},
        rows=rows,
    )


def _readout(value, ctx, psi):
    return complex_pair(
        evaluate_action(value, ctx, None if psi == AVERAGE_PSI else psi)
    )


def cs_action_report(config, payload):
    """Замкнутая формула, движок, исходная сумма теоремы и расхождения."""
    serializer = ConnectionSerializer(
        data=payload, context={'ctx': config['ctx']}
    )
    serializer.is_valid(raise_exception=True)
    theta = (
        config['theta'] if config['theta_given']
        else serializer.validated_data['theta']
    )
    ctx = config['ctx'].with_theta(theta)
    dirac = get_dirac(config['dirac'])
    connection = Connection(serializer.to_pairs(), dirac, ctx)
    engine = cs_action_engine(dirac, connection)

    closed = theorem = None
    if len(connection.pairs) == 1:
        closed = cs_action_closed(dirac, *connection.pairs[0])
        theorem = cs_action_theorem(dirac, *connection.pairs[0])
    elif connection.pairs:
        logger.info(
            'Замкнутая формула применима к одной паре; получено %d.',
            len(connection.pairs),
        )
    else:
        closed = engine

    coeff_field = TrigCoeffField()
    data = {
        'dirac': dirac.name,
        'theta': ctx.theta,
        'pairs': len(connection.pairs),
        'psi': config['psi'],
        'value': (
            None if closed is None
            else coeff_field.to_representation(closed)
        ),
        'value_number': (
            None if closed is None
            else _readout(closed, ctx, config['psi'])
        ),
        'engine_value': coeff_field.to_representation(engine),
        'engine_number': _readout(engine, ctx, config['psi']),
        'delta': None,
        'theorem': (
            None if theorem is None
            else coeff_field.to_representation(theorem)
        ),
        'theorem_phase_gap': None,
    }
    if closed is not None:
        gap = (closed - engine).evaluate(ctx.samples)
        data['delta'] = float(np.max(np.abs(gap), initial=0.0))
    if theorem is not None:
        psi = None if config['psi'] == AVERAGE_PSI else config['psi']
        data['theorem_phase_gap'] = theorem_phase_gap(
            closed, theorem, ctx, psi
        )
    rows = [
        {
            'quantity': 'closed',
            'rendered': '-' if closed is None else str(closed),
        },
        {'quantity': 'engine', 'rendered': str(engine)},
        {
            'quantity': 'theorem',
            'rendered': '-' if theorem is None else str(theorem),
        },
        {'quantity': 'delta', 'rendered': str(data['delta'])},
    ]
    return Report(data=data, rows=rows)


def partition_report(config):
    """Z′(k) помодово и в замкнутом виде, тождества и классический ответ."""
    k, theta, cutoff = config['level'], config['theta'], config['cutoff']
    data = {
        'k': k,
        'theta': theta,
        'N': cutoff,
        'classical': classical_partition(k),
    }
    if k == 0:
        logger.warning('k = 0: выводится только классическое значение.')
        return Report(
            data=data,
            rows=[{'quantity': 'classical', 're': data['classical'],
                   'im': 0.0}],
        )
    result = partition_modewise(k, theta, cutoff, config['xi'])
    comparison = compare_forms(k, theta, cutoff)
    chain = identity_chain(theta, cutoff)
    data.update({
        'value': complex_pair(result.value),
        'closed': complex_pair(comparison.closed),
        'rewritten': complex_pair(comparison.rewritten),
        'phase_discrepancy': comparison.phase_discrepancy,
        'factors': {
            'prefactor': complex_pair(result.prefactor),
            'gaussian': complex_pair(result.gaussian_factor),
            'ghost': complex_pair(result.ghost_factor),
            'lines': {
                str(q): complex_pair(factor)
                for q, factor in result.line_factors.items()
            },
        },
        'regularized': [
            {'label': constant.label, 'value': complex_pair(constant.value)}
            for constant in result.regularized_constants
        ],
        'degenerate': len(result.degenerate),
        'identity_chain': [
            {
                'n': row.n,
                'product': complex_pair(row.product_form),
                'sine': complex_pair(row.sine_form),
                'gamma': complex_pair(row.gamma_form),
                'deviation': row.deviation,
            }
            for row in chain
        ],
    })
    rows = [
        {'quantity': name, 're': value.real, 'im': value.imag}
        for name, value in (
            ('modewise', result.value),
            ('closed', comparison.closed),
            ('rewritten', comparison.rewritten),
            ('classical', complex(data['classical'])),
        )
    ]
    return Report(data=data, rows=rows)
