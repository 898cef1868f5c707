"""
Калибровочные преобразования A ↦ u*Au + u*[D, u].
"""
import logging

from algebra.elements import check_context, is_unitary, product, star
from algebra.exceptions import NonUnitaryError

from .connections import Connection

logger = logging.getLogger(__name__)


def gauge_transform(conn, u, dirac=None):
    """Новая связность в виде списка пар.

    u*·a[D, b]·u = u*a[D, bu] − u*ab[D, u], к ним добавляется пара (u*, u).
    """
    dirac = dirac or conn.dirac
    check_context(u, *(element for pair in conn.pairs for element in pair))
    if not is_unitary(u):
        raise NonUnitaryError(f'Элемент {u} не унитарен.')
    u_star = star(u)
    pairs = []
    for a, b in conn.pairs:
        pairs.append((product(u_star, a), product(b, u)))
        pairs.append((-product(u_star, a, b), u))
    pairs.append((u_star, u))
    logger.debug('Калибровка %s: %d пар', conn, len(pairs))
    return Connection(pairs, dirac, conn.ctx)
