import math

from rest_framework import serializers

from algebra.constants import MAX_TOLERANCE

from .constants import AUTO_XI, AVERAGE_PSI, MAX_CUTOFF


def validate_theta(value):
    """Проверяет, что θ конечно."""
    if not math.isfinite(value):
        raise serializers.ValidationError(
            'Параметр θ должен быть конечным числом.'
        )

    return value


def validate_tolerance(value):
    """Проверяет, что допуск лежит в (0, 10⁻⁶]."""
    if not 0 < value <= MAX_TOLERANCE:
        raise serializers.ValidationError(
            f'Допуск должен лежать в (0, {MAX_TOLERANCE}].'
        )

    return value


def validate_cutoff(value):
    """Проверяет обрезание мод."""
    if value < 0:
        raise serializers.ValidationError(
            'Обрезание не может быть отрицательным.'
        )

    if value > MAX_CUTOFF:
        raise serializers.ValidationError(
            f'Обрезание не может превышать {MAX_CUTOFF}.'
        )

    return value


def validate_xi(value):
    """Проверяет параметр калибровки: auto или положительное число."""
    if str(value).strip().lower() == AUTO_XI:
        return AUTO_XI

    try:
        xi = float(value)
    except (TypeError, ValueError):
        raise serializers.ValidationError(
            'Параметр ξ должен быть числом или auto.'
        )

    if not math.isfinite(xi) or xi <= 0:
        raise serializers.ValidationError(
            'Параметр ξ должен быть положительным.'
        )

    return xi


def validate_psi(value):
    """Проверяет ψ: average или число из (0, π/2)."""
    if str(value).strip().lower() == AVERAGE_PSI:
        return AVERAGE_PSI

    try:
        psi = float(value)
    except (TypeError, ValueError):
        raise serializers.ValidationError(
            'Параметр ψ должен быть числом или average.'
        )

    if not 0 < psi < math.pi / 2:
        raise serializers.ValidationError(
            'Параметр ψ должен лежать в (0, π/2).'
        )

    return psi
