"""Constructive descriptions of the two avoider classes.

``231,1432:231``
    For n >= 3 an avoider either starts with n, ends with n, or ends with
    n(n-1).  The first kind is the explicit family
    ``n (n-1) ... (n-k+1) 1 2 ... (n-k)`` with ceil(n/2) <= k <= n-1; the
    other two are ``s + 1`` and ``s + 21`` (direct sums) for a smaller
    avoider ``s``.

``213,312:~213``
    Avoiders are unimodal.  Those starting with 1 are ``1 + s`` for a
    smaller avoider ``s``; those ending with 1 are ``23...n1`` together with
    every word ``A n (n-1) D 1`` where A is increasing, D is decreasing and
    A, D split {2, ..., n-2}.

Generators return lexicographically sorted lists so they compare directly
against the brute-force enumerator.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .errors import DomainError, NotInTrichotomy, NotUnimodal
from .perm import Permutation, _compose_words, is_unimodal

__all__ = [
    "TrichotomyTag",
    "classify_trichotomy",
    "gen_P1",
    "gen_bona_smith_family",
    "gen_chain231",
    "gen_Q2",
    "gen_chain213",
    "check_peak_lemma",
]


class TrichotomyTag(enum.Enum):
    STARTS_WITH_MAX = "P1"
    ENDS_WITH_MAX = "P2"
    ENDS_MAX_THEN_SECOND = "P3"


def classify_trichotomy(p: Permutation, strict: bool = False) -> TrichotomyTag:
    """Tag an avoider of ``231,1432:231`` by its shape (n >= 3).

    Tags are tried in the order P1, P2, P3.  Raises NotInTrichotomy when no
    shape applies, which means ``p`` is not an avoider.  With ``strict`` all
    three shapes are evaluated and exclusivity is checked.
    """
    w = p.values
    n = len(w)
    if n < 3:
        raise DomainError(f"trichotomy is stated for n >= 3, got n = {n}")
    shapes = (
        (TrichotomyTag.STARTS_WITH_MAX, w[0] == n),
        (TrichotomyTag.ENDS_WITH_MAX, w[-1] == n),
        (TrichotomyTag.ENDS_MAX_THEN_SECOND, w[-2] == n and w[-1] == n - 1),
    )
    if strict:
        hits = [tag for tag, ok in shapes if ok]
        if len(hits) > 1:
            raise AssertionError(f"{p} matches several shapes: {hits}")
    for tag, ok in shapes:
        if ok:
            return tag
    raise NotInTrichotomy(f"{p} neither starts with n, ends with n, nor ends with n(n-1)")


def _p1_words(n: int) -> list[tuple[int, ...]]:
    out = []
    for k in range((n + 1) // 2, n):
        out.append(tuple(range(n, n - k, -1)) + tuple(range(1, n - k + 1)))
    return out


def gen_P1(n: int) -> list[Permutation]:
    """Avoiders of ``231,1432:231`` that start with n, ordered by block length k."""
    if n < 3:
        raise DomainError(f"gen_P1 needs n >= 3, got {n}")
    return [Permutation._trusted(w) for w in _p1_words(n)]


def gen_bona_smith_family(n: int) -> list[Permutation]:
    """Strongly 312-avoiding permutations ending in 1.

    These are ``(k+1)(k+2)...n k(k-1)...1`` for ceil(n/2) <= k <= n-1,
    listed by increasing k.  Their inverses are exactly :func:`gen_P1`.
    """
    if n < 2:
        raise DomainError(f"gen_bona_smith_family needs n >= 2, got {n}")
    return [
        Permutation._trusted(tuple(range(k + 1, n + 1)) + tuple(range(k, 0, -1)))
        for k in range((n + 1) // 2, n)
    ]


def _shift(w: tuple[int, ...], by: int) -> tuple[int, ...]:
    return tuple(v + by for v in w)


@lru_cache(maxsize=None)
def _chain231(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return ((1,),)
    if n == 2:
        return ((1, 2), (2, 1))
    words = _p1_words(n)
    words += [s + (n,) for s in _chain231(n - 1)]
    words += [s + (n, n - 1) for s in _chain231(n - 2)]
    return tuple(sorted(words))


def gen_chain231(n: int) -> list[Permutation]:
    """All avoiders of ``231,1432:231`` of length n, built from smaller ones."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return [Permutation._trusted(w) for w in _chain231(n)]


def _q2_words(n: int) -> list[tuple[int, ...]]:
    rotation = tuple(range(2, n + 1)) + (1,)
    middle = list(range(2, n - 1))
    family = []
    for mask in range(1 << len(middle)):
        up = tuple(v for b, v in enumerate(middle) if mask >> b & 1)
        down = tuple(v for b, v in reversed(list(enumerate(middle))) if not mask >> b & 1)
        family.append(up + (n, n - 1) + down + (1,))
    if rotation in family:
        raise AssertionError(f"23...n1 collides with the A n (n-1) D 1 family at n = {n}")
    return sorted(family + [rotation])


def gen_Q2(n: int) -> list[Permutation]:
    """Avoiders of ``213,312:~213`` that end with 1 (n >= 3); 2^(n-3) + 1 of them."""
    if n < 3:
        raise DomainError(f"gen_Q2 needs n >= 3, got {n}")
    return [Permutation._trusted(w) for w in _q2_words(n)]


@lru_cache(maxsize=None)
def _chain213(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return ((1,),)
    if n == 2:
        return ((1, 2), (2, 1))
    words = [(1,) + _shift(s, 1) for s in _chain213(n - 1)]
    words += _q2_words(n)
    return tuple(sorted(words))


def gen_chain213(n: int) -> list[Permutation]:
    """All avoiders of ``213,312:~213`` of length n."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return [Permutation._trusted(w) for w in _chain213(n)]


def check_peak_lemma(p: Permutation) -> bool:
    """For unimodal ``p``: every consecutive 213 in the square sits under the peak.

    Returns False only if some window ``sq(i-1) sq(i) sq(i+1)`` of the
    square is order isomorphic to 213 while ``p(i) != n``.  It never should.
    """
    if not is_unimodal(p):
        raise NotUnimodal(f"{p} is not unimodal")
    w = p.values
    n = len(w)
    sq = _compose_words(w, w)
    for i in range(1, n - 1):
        if sq[i] < sq[i - 1] < sq[i + 1] and w[i] != n:
            return False
    return True
