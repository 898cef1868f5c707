"""
Константы операторов Дирака.
"""

DIRAC_NAMES = ('d1', 'd2', 'd3')

# Спиновая константа первого оператора
D1_SHIFT = 1.5

# Вычеты Tr(|D|^{−n−z}) при z = 0 по степеням n
RESIDUE_WEIGHTS = {
    'd1': {1: -0.5, 3: 2.0, 5: 0.0},
    'd2': {3: 2.0},
    'd3': {3: 2.0},
}

# Символ Леви-Чивиты на тройках индексов 1..3
LEVI_CIVITA = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (1, 3, 2): -1, (3, 2, 1): -1, (2, 1, 3): -1,
}
