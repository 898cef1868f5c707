"""
Константы статсуммы.
"""
import cmath
import math

# Вес моды ниже порога считается вырожденным
DEGENERATE_WEIGHT = 1e-12

# |1 − λⁿ| ниже порога означает резонанс рационального θ
RESONANCE_GUARD = 1e-12

# Префакторы замкнутой формулы и её переписанного вида
CLOSED_PHASE = cmath.exp(3j * math.pi / 4)
REWRITTEN_PHASE = cmath.exp(1j * math.pi / 4)

# Точность mpmath для гамма-формы тождеств
GAMMA_PRECISION = 50

# Допуск покомпонентных тождеств
IDENTITY_TOLERANCE = 1e-12

# Обрезания для проверки устойчивости по N
STABILITY_CUTOFFS = (10, 20, 40)
