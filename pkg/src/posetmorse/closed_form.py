"""
Closed-form Mobius recursions for both posets.

Each formula bottoms out within two ranks of the top and otherwise either
jumps to the exterior (outer word) or returns zero, so evaluation touches
a chain of at most |top| subproblems.
"""

from __future__ import annotations

from .perms import exterior, interior, is_monotone, leq_consecutive
from .posets import IncomparableError
from .words import inner_word, is_factor, is_flat, outer_word


def mobius_pattern(sigma: tuple[int, ...], tau: tuple[int, ...]) -> int:
    """
    Mobius function of [sigma, tau] in the consecutive pattern order.

    >>> mobius_pattern((1,), (2, 1, 3, 5, 4, 6))
    1
    >>> mobius_pattern((1, 2), (1, 2, 3, 4))
    0
    >>> mobius_pattern((1, 2, 3), (2, 1, 3, 5, 4))
    1
    """
    if not leq_consecutive(sigma, tau):
        raise IncomparableError("sigma is not a consecutive pattern of tau")
    gap = len(tau) - len(sigma)
    if gap > 2:
        x = exterior(tau)
        if leq_consecutive(sigma, x) and not leq_consecutive(x, interior(tau)):
            return mobius_pattern(sigma, x)
        return 0
    if gap == 2:
        if not is_monotone(tau) and sigma in (interior(tau), exterior(tau)):
            return 1
        return 0
    return -1 if gap == 1 else 1


def mobius_factor(u: tuple, w: tuple) -> int:
    """
    Mobius function of [u, w] in factor order; u may be the empty word.

    >>> mobius_factor(("b",), ("a", "b", "b"))
    1
    >>> mobius_factor(("b",), ("a", "a", "b", "b"))
    0
    >>> mobius_factor(("a",), ("a", "a", "a"))
    0
    """
    if not is_factor(u, w):
        raise IncomparableError("u is not a factor of w")
    gap = len(w) - len(u)
    if gap > 2:
        o = outer_word(w)
        if is_factor(u, o) and not is_factor(o, inner_word(w)):
            return mobius_factor(u, o)
        return 0
    if gap == 2:
        if not is_flat(w) and u in (inner_word(w), outer_word(w)):
            return 1
        return 0
    return -1 if gap == 1 else 1
