"""Exact counting formulas, in Python's arbitrary-precision integers.

Lucas numbers use L_1 = 1, L_2 = 3 (so L_0 = 2, matching OEIS A000032).
"""

from __future__ import annotations

import threading

from .errors import DomainError

__all__ = [
    "lucas",
    "f_closed",
    "f_recurrence",
    "g_closed",
    "g_recurrence",
    "p1_count",
    "q2_count",
]

_lucas_cache = [2, 1]
_lucas_lock = threading.Lock()


def lucas(m: int) -> int:
    if m < 0:
        raise DomainError(f"lucas index must be >= 0, got {m}")
    with _lucas_lock:
        while len(_lucas_cache) <= m:
            _lucas_cache.append(_lucas_cache[-1] + _lucas_cache[-2])
        return _lucas_cache[m]


def _ceil_half(m: int) -> int:
    return -(-m // 2)


def _need(n: int, least: int, name: str) -> None:
    if n < least:
        raise DomainError(f"{name} is defined for n >= {least}, got {n}")


def f_closed(n: int) -> int:
    """Number of avoiders of ``231,1432:231``: L_{n+1} - ceil(n/2) - 1."""
    _need(n, 1, "f_closed")
    return lucas(n + 1) - _ceil_half(n) - 1


def f_recurrence(n: int) -> int:
    """Same count from f(n) = ceil((n-1)/2) + f(n-1) + f(n-2), f(1)=1, f(2)=2."""
    _need(n, 1, "f_recurrence")
    a, b = 1, 2
    if n == 1:
        return a
    for m in range(3, n + 1):
        a, b = b, _ceil_half(m - 1) + b + a
    return b


def g_closed(n: int) -> int:
    """Number of avoiders of ``213,312:~213``: 2^(n-2) + n - 1 for n >= 2.

    At n = 1 the count is 1 by enumeration, but the formula is not used there.
    """
    _need(n, 2, "g_closed")
    return (1 << (n - 2)) + n - 1


def g_recurrence(n: int) -> int:
    _need(n, 2, "g_recurrence")
    g = 2
    for m in range(3, n + 1):
        g += (1 << (m - 3)) + 1
    return g


def p1_count(n: int) -> int:
    """Avoiders of ``231,1432:231`` starting with n: ceil((n-1)/2)."""
    _need(n, 3, "p1_count")
    return _ceil_half(n - 1)


def q2_count(n: int) -> int:
    """Avoiders of ``213,312:~213`` ending with 1: 2^(n-3) + 1."""
    _need(n, 3, "q2_count")
    return (1 << (n - 3)) + 1
