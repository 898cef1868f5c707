"""
Спектры операторов Дирака и их выгрузка.
"""
from dataclasses import asdict, dataclass

import pandas as pd


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: float
    multiplicity: int
    family: str


def spectrum(dirac, m_max, augmented=False):
    """Собственные значения уровней m ≤ m_max.

    D1: ±(m + 3/2) с кратностью (m+1)(m+2).
    D2, D3: лапласиан m(m+2) с кратностью (m+1)²,
    на удвоенном спинорном пространстве 2(m+1)².
    """
    if m_max < 0:
        raise ValueError(
            f'Уровень обрезания должен быть ≥ 0, получено {m_max}.'
        )
    entries = []
    for m in range(m_max + 1):
        if dirac.name == 'd1':
            multiplicity = (m + 1) * (m + 2)
            entries.append(SpectrumEntry(m + 1.5, multiplicity, '+'))
            entries.append(SpectrumEntry(-(m + 1.5), multiplicity, '-'))
        else:
            multiplicity = (m + 1) ** 2 * (2 if augmented else 1)
            entries.append(
                SpectrumEntry(float(m * (m + 2)), multiplicity, '+')
            )
    return entries


def spectrum_frame(entries):
    """Таблица (eigenvalue, multiplicity, family)."""
    return pd.DataFrame(
        [asdict(entry) for entry in entries],
        columns=['eigenvalue', 'multiplicity', 'family'],
    )
