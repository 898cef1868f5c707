"""
Константы алгебры S³_θ.
"""

# Коэффициенты меньше порога отбрасываются
PRUNE_THRESHOLD = 1e-15

# Выборка ψ для сравнения функций: (MARGIN, π/2 − MARGIN)
SAMPLE_MARGIN = 0.05

# Ограничения контекста деформации
MAX_TOLERANCE = 1e-6
MIN_SAMPLE_COUNT = 9

# Значения по умолчанию, если настройки недоступны
DEFAULT_TOLERANCE = 1e-10
DEFAULT_SAMPLE_COUNT = 17
DEFAULT_SEED = 2024

# Квадратура Гаусса–Лежандра для состояния Хаара
QUADRATURE_NODES = 64

# Точность вывода коэффициентов
RENDER_DIGITS = 12
