"""
Permutations in one-line notation and the window operators of the
consecutive pattern order.

A permutation of length n is a tuple holding each of 1..n exactly once,
e.g. ``(2, 1, 3)``.  Comparison is by consecutive containment: sigma <= tau
when some contiguous window of tau, read left to right, has its letters in
the same relative order as sigma.

Text form: permutations of length at most nine render as digit strings
("213546"); longer ones switch to comma-separated integers.  Embeddings of
a shorter permutation inside a longer one are written as expansions, digit
strings padded with zeros outside the occupied window ("000213").
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

PREFIX = "prefix"
SUFFIX = "suffix"


def standardize(seq: Sequence[int]) -> tuple[int, ...]:
    """
    The unique permutation whose letters compare like those of ``seq``.

    >>> standardize((5, 3, 4))
    (3, 1, 2)
    >>> standardize((5, 3, 4, 1))
    (4, 2, 3, 1)
    >>> standardize((7,))
    (1,)
    >>> standardize((1, 3, 5, 4))
    (1, 2, 4, 3)
    """
    if len(seq) == 0:
        raise ValueError("cannot standardize an empty sequence")
    order = sorted(range(len(seq)), key=seq.__getitem__)
    for a, b in zip(order, order[1:]):
        if seq[a] == seq[b]:
            raise ValueError(f"duplicate entry {seq[a]!r} in {tuple(seq)!r}")
    out = [0] * len(seq)
    for rank, idx in enumerate(order, start=1):
        out[idx] = rank
    return tuple(out)


def as_permutation(seq: Iterable[int]) -> tuple[int, ...]:
    """Validate that ``seq`` is a permutation of 1..n and return it as a tuple."""
    p = tuple(seq)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..n: {p!r}")
    return p


def is_monotone(p: Sequence[int]) -> bool:
    """
    True for increasing or decreasing permutations; length one counts.

    >>> is_monotone((1, 2, 3))
    True
    >>> is_monotone((2, 1, 3))
    False
    >>> is_monotone((1,))
    True
    """
    if len(p) == 0:
        raise ValueError("empty sequence has no direction")
    return tuple(p) == tuple(range(1, len(p) + 1)) or tuple(p) == tuple(range(len(p), 0, -1))


@lru_cache(maxsize=None)
def _window_patterns(tau: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """All standardized contiguous windows of tau, every width."""
    pats = set()
    n = len(tau)
    for width in range(1, n + 1):
        for lo in range(n - width + 1):
            pats.add(standardize(tau[lo:lo + width]))
    return frozenset(pats)


def leq_consecutive(sigma: tuple[int, ...], tau: tuple[int, ...]) -> bool:
    """
    Containment in the consecutive pattern order.

    >>> leq_consecutive((2, 1, 3), (2, 1, 3, 5, 4, 6))
    True
    >>> leq_consecutive((2, 1, 3), (1, 2, 4, 3))
    False
    >>> leq_consecutive((1,), (2, 1))
    True
    """
    if len(sigma) > len(tau):
        return False
    return sigma in _window_patterns(tau)


def occurrences(sigma: tuple[int, ...], tau: tuple[int, ...]) -> list[tuple[int, ...]]:
    """
    Every embedding of sigma in tau, one expansion per occupied window,
    ordered left to right.

    >>> occurrences((2, 1, 3), (2, 1, 3, 5, 4, 6))
    [(2, 1, 3, 0, 0, 0), (0, 0, 0, 2, 1, 3)]
    >>> occurrences((1,), (2, 1))
    [(1, 0), (0, 1)]
    >>> occurrences((1, 2), (2, 1))
    []
    """
    k, n = len(sigma), len(tau)
    out = []
    for lo in range(n - k + 1):
        if standardize(tau[lo:lo + k]) == sigma:
            out.append((0,) * lo + sigma + (0,) * (n - lo - k))
    return out


def down_covers(tau: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """
    The permutations covered by tau, paired with the position of tau that
    each cover deletes.  Dropping the last letter comes first; a monotone
    tau has a single cover, taken by convention at position one so that the
    surviving letters form a suffix.

    >>> down_covers((2, 1, 3, 5, 4, 6))
    [((2, 1, 3, 5, 4), 6), ((1, 2, 4, 3, 5), 1)]
    >>> down_covers((1, 2, 3))
    [((1, 2), 1)]
    >>> down_covers((2, 3, 1))
    [((1, 2), 3), ((2, 1), 1)]
    """
    if len(tau) < 2:
        raise ValueError("a length-one permutation covers nothing")
    if is_monotone(tau):
        return [(standardize(tau[1:]), 1)]
    return [(standardize(tau[:-1]), len(tau)), (standardize(tau[1:]), 1)]


def affix(tau: tuple[int, ...], k: int, side: str) -> tuple[int, ...]:
    """
    The standard form of the length-k prefix or suffix of tau.

    >>> affix((5, 3, 4, 1, 2), 4, PREFIX)
    (4, 2, 3, 1)
    >>> affix((2, 1, 3, 5, 4, 6), 3, SUFFIX)
    (2, 1, 3)
    """
    if not 1 <= k <= len(tau):
        raise ValueError(f"affix length {k} out of range for length {len(tau)}")
    if side == PREFIX:
        return standardize(tau[:k])
    if side == SUFFIX:
        return standardize(tau[-k:])
    raise ValueError(f"side must be {PREFIX!r} or {SUFFIX!r}, got {side!r}")


def interior(tau: tuple[int, ...]) -> tuple[int, ...]:
    """
    The standard form of tau with both end letters removed.

    >>> interior((2, 1, 3, 5, 4))
    (1, 2, 3)
    >>> interior((2, 1, 3, 5, 4, 6))
    (1, 2, 4, 3)
    >>> interior((1, 3, 2))
    (1,)
    """
    if len(tau) <= 2:
        raise ValueError("interior needs length at least three")
    return standardize(tau[1:-1])


def exterior(tau: tuple[int, ...]) -> tuple[int, ...]:
    """
    The longest permutation that is the standard form of both a proper
    prefix and a suffix of tau.

    >>> exterior((2, 1, 3, 5, 4))
    (2, 1)
    >>> exterior((2, 1, 3, 5, 4, 6))
    (2, 1, 3)
    >>> exterior((1, 2))
    (1,)
    """
    if len(tau) < 2:
        raise ValueError("exterior needs length at least two")
    for k in range(len(tau) - 1, 0, -1):
        p = standardize(tau[:k])
        if p == standardize(tau[-k:]):
            return p
    raise AssertionError("unreachable: length-one affixes always agree")


def format_permutation(p: tuple[int, ...]) -> str:
    """
    >>> format_permutation((2, 1, 3, 5, 4, 6))
    '213546'
    """
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def format_expansion(eta: tuple[int, ...]) -> str:
    """
    >>> format_expansion((0, 0, 0, 2, 1, 3))
    '000213'
    """
    if len(eta) <= 9:
        return "".join(str(v) for v in eta)
    return ",".join(str(v) for v in eta)


def parse_permutation(text: str) -> tuple[int, ...]:
    """
    Inverse of format_permutation, accepting both text forms.

    >>> parse_permutation("213546")
    (2, 1, 3, 5, 4, 6)
    >>> parse_permutation("2,1,3")
    (2, 1, 3)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad permutation text {text!r}") from None
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation text {text!r}")
        values = [int(ch) for ch in text]
    return as_permutation(values)
