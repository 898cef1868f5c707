"""
Исключения предметной области.

Ошибки входных данных наследуются от ValueError,
вычислительные ошибки от ArithmeticError.
"""


class ContextMismatchError(ValueError):
    """Элементы построены в разных контекстах деформации."""


class InvalidIndexError(ValueError):
    """Индекс базиса Питера–Вейля или собственного спинора вне диапазона."""


class UnsupportedPowerError(ValueError):
    """Для выбранного оператора Дирака нет веса вычета этой степени."""


class NotMonomialError(ValueError):
    """Элемент не раскладывается по мономам α^m β^n с постоянными
    коэффициентами."""


class NotConstantError(ValueError):
    """TrigCoeff не является константой как функция от ψ."""


class SelfAdjointnessError(ValueError):
    """Коэффициенты a не удовлетворяют условию a_{−m,−n} = ā_{mn}."""


class NonUnitaryError(ValueError):
    """Калибровочный элемент не унитарен."""


class ClassicalLimitError(ValueError):
    """Классическое вычисление требует θ = 0."""


class ZetaPoleError(ArithmeticError):
    """Вычисление дзета-функции в полюсе."""


class ResonanceError(ArithmeticError):
    """λⁿ = 1 для некоторого n в пределах обрезания."""


class DegenerateLevelError(ArithmeticError):
    """Уровень k = 0 не допускает квантового вычисления."""
