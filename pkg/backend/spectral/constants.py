"""
Константы спектрального исчисления.
"""

# Формула Эйлера–Маклорена: прямые слагаемые и число поправок Бернулли
HURWITZ_DIRECT_TERMS = 20
HURWITZ_BERNOULLI_ORDER = 12

# Точность mpmath для продолжения в полуплоскость Re s < 1
CONTINUATION_PRECISION = 40

# Расстояние до полюса s = 1, ближе которого вычисление запрещено
POLE_GUARD = 1e-12

# Контурный интеграл для коэффициентов Лорана
CONTOUR_RADIUS = 0.5
CONTOUR_POINTS = 64

# Обрезания для оракула усечённых спектральных сумм
RICHARDSON_CUTOFFS = (40, 80, 160)

# Поиск полюсов спектральной дзета-функции
SCAN_WINDOW = (0.25, 4.75)
SCAN_STEP = 0.01
SCAN_OFFSET = 0.0037
SCAN_MIN_MAGNITUDE = 1e2
SCAN_ORDER_STEPS = (1e-3, 1e-4)
SCAN_RESIDUE_STEP = 1e-5

# Степени |D|^{−n} в формуле локального индекса
SUPPORTED_TAU_ORDERS = (0, 1, 2)
