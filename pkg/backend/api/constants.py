"""
Константы для валидации входных данных и вывода отчётов.
"""

# Коды завершения команд
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NUMERIC = 4
EXIT_CONTEXT = 5

# Форматы вывода
OUTPUT_FORMATS = ('json', 'csv', 'markdown')
DEFAULT_FORMAT = 'json'

# Значения флагов по умолчанию
DEFAULT_DIRAC = 'd1'
DEFAULT_CUTOFF = 3
DEFAULT_LEVEL = 1
AUTO_XI = 'auto'
AVERAGE_PSI = 'average'

# Ограничения размера входных документов
MAX_MODES = 64
MAX_TERMS = 64
MAX_PAIRS = 16
MAX_CUTOFF = 200

# Порядок образующих в таблице коммутаторов
GENERATOR_ORDER = (
    'alpha', 'alpha*', 'beta', 'beta*', 'u', 'u*', 'v', 'v*',
)

# HTTP-статус для вычислительных ошибок
NUMERIC_ERROR_STATUS = 422
