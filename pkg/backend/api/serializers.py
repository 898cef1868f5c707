from django.conf import settings
from rest_framework import serializers

from algebra.context import DeformationContext
from algebra.elements import AlgElement
from algebra.trig import TrigCoeff
from dirac.operators import DIRAC_CHOICES

from .constants import (AVERAGE_PSI, AUTO_XI, DEFAULT_CUTOFF, DEFAULT_DIRAC,
                        DEFAULT_FORMAT, DEFAULT_LEVEL, MAX_MODES, MAX_PAIRS,
                        MAX_TERMS, OUTPUT_FORMATS)
from .validators import (validate_cutoff, validate_psi, validate_theta,
                         validate_tolerance, validate_xi)


def complex_pair(value):
    """Комплексное число как [re, im]."""
    if value is None:
        return None
    value = complex(value)
    return [value.real, value.imag]


class TermSerializer(serializers.Serializer):
    """Слагаемое coeff·cos^a ψ·sin^b ψ."""
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    re = serializers.FloatField()
    im = serializers.FloatField(default=0.0)


class TrigCoeffField(serializers.Field):
    """
    Поле для TrigCoeff: список слагаемых {a, b, re, im}.
    При выводе добавляется текстовая запись.
    """
    def to_internal_value(self, data):
        terms = TermSerializer(data=data, many=True)
        terms.is_valid(raise_exception=True)
        if len(terms.validated_data) > MAX_TERMS:
            raise serializers.ValidationError(
                f'Не больше {MAX_TERMS} слагаемых в коэффициенте.'
            )
        coeff = {}
        for term in terms.validated_data:
            key = (term['a'], term['b'])
            coeff[key] = coeff.get(key, 0) + complex(term['re'], term['im'])
        return TrigCoeff(coeff)

    def to_representation(self, value):
        value = TrigCoeff.coerce(value)
        return {
            'terms': [
                {'a': a, 'b': b, 're': coeff.real, 'im': coeff.imag}
                for (a, b), coeff in sorted(value.terms.items())
            ],
            'rendered': str(value),
        }


class ModeSerializer(serializers.Serializer):
    """Мода f_pq(ψ)·u^p v^q."""
    p = serializers.IntegerField()
    q = serializers.IntegerField()
    terms = TrigCoeffField()


class AlgElementSerializer(serializers.Serializer):
    """
    Сериализатор элемента S³_θ.
    Контекст сравнения (допуск, выборка) берётся из context['ctx'],
    θ берётся из документа.
    """
    theta = serializers.FloatField(validators=[validate_theta])
    modes = ModeSerializer(many=True)

    def validate_modes(self, value):
        """Проверяет число мод и их уникальность."""
        if len(value) > MAX_MODES:
            raise serializers.ValidationError(
                f'Не больше {MAX_MODES} мод в элементе.'
            )

        keys = [(mode['p'], mode['q']) for mode in value]
        if len(keys) != len(set(keys)):
            raise serializers.ValidationError('Моды не должны повторяться.')

        return value

    def to_element(self, data=None):
        data = data or self.validated_data
        base = self.context.get('ctx') or DeformationContext.from_settings()
        ctx = base.with_theta(data['theta'])
        return AlgElement(ctx, {
            (mode['p'], mode['q']): mode['terms'] for mode in data['modes']
        })

    def to_representation(self, instance):
        return {
            'theta': instance.ctx.theta,
            'modes': [
                {
                    'p': p,
                    'q': q,
                    'terms': TrigCoeffField().to_representation(coeff)[
                        'terms'
                    ],
                }
                for (p, q), coeff in sorted(instance.modes.items())
            ],
        }


class PairSerializer(serializers.Serializer):
    a = AlgElementSerializer()
    b = AlgElementSerializer()


class ConnectionSerializer(serializers.Serializer):
    """Связность {theta, pairs: [{a, b}]}."""
    theta = serializers.FloatField(validators=[validate_theta])
    pairs = PairSerializer(many=True)

    def validate_pairs(self, value):
        """Проверяет число пар."""
        if len(value) > MAX_PAIRS:
            raise serializers.ValidationError(
                f'Не больше {MAX_PAIRS} пар в связности.'
            )

        return value

    def to_pairs(self):
        """Пары AlgElement; θ каждого элемента сохраняется как есть."""
        element = AlgElementSerializer(context=self.context)
        return [
            (element.to_element(pair['a']), element.to_element(pair['b']))
            for pair in self.validated_data['pairs']
        ]


class RunConfigSerializer(serializers.Serializer):
    """Параметры запуска, общие для команд и HTTP-отчётов."""
    theta = serializers.FloatField(
        required=False, validators=[validate_theta]
    )
    dirac = serializers.ChoiceField(
        choices=tuple(DIRAC_CHOICES), default=DEFAULT_DIRAC
    )
    cutoff = serializers.IntegerField(
        default=DEFAULT_CUTOFF, validators=[validate_cutoff]
    )
    level = serializers.IntegerField(default=DEFAULT_LEVEL, min_value=0)
    xi = serializers.CharField(default=AUTO_XI, validators=[validate_xi])
    psi = serializers.CharField(
        default=AVERAGE_PSI, validators=[validate_psi]
    )
    tolerance = serializers.FloatField(
        required=False, validators=[validate_tolerance]
    )
    format = serializers.ChoiceField(
        choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT
    )
    seed = serializers.IntegerField(required=False)

    def validate(self, attrs):
        """Приводит ξ и ψ к числам и строит контекст деформации."""
        attrs['xi'] = validate_xi(attrs['xi'])
        attrs['psi'] = validate_psi(attrs['psi'])
        attrs['theta_given'] = 'theta' in attrs
        attrs.setdefault('theta', settings.SPHERE['DEFAULT_THETA'])
        attrs.setdefault('tolerance', settings.SPHERE['TOLERANCE'])
        attrs.setdefault('seed', settings.SPHERE['SEED'])
        attrs['ctx'] = DeformationContext.from_settings(
            theta=attrs['theta'],
            tol=attrs['tolerance'],
            rng_seed=attrs['seed'],
        )
        return attrs
