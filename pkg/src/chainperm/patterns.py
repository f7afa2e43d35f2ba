"""Classical and consecutive pattern containment.

Classical search extends index tuples depth first, left to right, and only
accepts a candidate entry if its value falls inside the window fixed by
the entries already chosen for the pattern's nearest smaller and nearest
larger letters.  That window test is exactly order isomorphism, so no
renormalisation is ever needed.  Because positions are tried in increasing
order, the first occurrence found is the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import ParseError
from .perm import Permutation

__all__ = [
    "Pattern",
    "Occurrence",
    "classical",
    "consecutive",
    "parse_pattern",
    "contains",
    "avoids",
    "count_occurrences",
    "occurrences",
]


@dataclass(frozen=True, order=True)
class Pattern:
    word: Permutation
    consecutive: bool = False

    def __post_init__(self):
        if len(self.word) < 1:
            raise ValueError("a pattern must have length at least 1")

    @property
    def flavor(self) -> str:
        return "consecutive" if self.consecutive else "classical"

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return render_pattern(self)


@dataclass(frozen=True)
class Occurrence:
    """1-based, strictly increasing positions of one occurrence."""

    positions: tuple[int, ...]

    def values_in(self, p: Permutation) -> tuple[int, ...]:
        return tuple(p.values[i - 1] for i in self.positions)


def classical(word) -> Pattern:
    """Shorthand: ``classical("231")`` or ``classical([2, 3, 1])``."""
    return Pattern(_as_word(word), consecutive=False)


def consecutive(word) -> Pattern:
    return Pattern(_as_word(word), consecutive=True)


def _as_word(word) -> Permutation:
    if isinstance(word, Permutation):
        return word
    if isinstance(word, str):
        return Permutation(tuple(int(c) for c in word))
    return Permutation(tuple(word))


def parse_pattern(text: str, offset: int = 0) -> Pattern:
    """Parse ``"231"`` (classical) or ``"~213"`` (consecutive).

    ``offset`` is only used to report positions inside a larger string.
    """
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    is_consecutive = s.startswith("~")
    digits = s[1:] if is_consecutive else s
    base = offset + lead + (1 if is_consecutive else 0)
    if not digits:
        raise ParseError("empty pattern", base)
    for i, ch in enumerate(digits):
        if not ch.isdigit():
            raise ParseError(f"unexpected character {ch!r} in pattern", base + i)
    if len(digits) > 9:
        raise ParseError("pattern words are limited to length 9", base)
    values = tuple(int(c) for c in digits)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(f"pattern {digits!r} is not a permutation", base)
    return Pattern(Permutation._trusted(values), is_consecutive)


def render_pattern(pat: Pattern) -> str:
    body = "".join(str(v) for v in pat.word.values)
    return ("~" + body) if pat.consecutive else body


# words may be prefixes whose values exceed their length
_NO_CEILING = float("inf")


@lru_cache(maxsize=None)
def _windows(word: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # for slot j: (earlier slot holding the largest smaller letter,
    #              earlier slot holding the smallest larger letter), -1 if none
    out = []
    for j, v in enumerate(word):
        lo = hi = -1
        for i in range(j):
            u = word[i]
            if u < v and (lo < 0 or u > word[lo]):
                lo = i
            elif u > v and (hi < 0 or u < word[hi]):
                hi = i
        out.append((lo, hi))
    return tuple(out)


def _classical(w: tuple[int, ...], pw: tuple[int, ...], ends_at_last: bool) -> Iterator[tuple[int, ...]]:
    n, k = len(w), len(pw)
    if k > n or (ends_at_last and n == 0):
        return
    windows = _windows(pw)
    chosen: list[int] = []

    def extend(j: int, start: int) -> Iterator[tuple[int, ...]]:
        lo, hi = windows[j]
        lo_v = w[chosen[lo]] if lo >= 0 else 0
        hi_v = w[chosen[hi]] if hi >= 0 else _NO_CEILING
        if ends_at_last and j == k - 1:
            candidates = range(n - 1, n) if start <= n - 1 else range(0)
        else:
            candidates = range(start, n - k + j + 1)
        for i in candidates:
            if lo_v < w[i] < hi_v:
                if j == k - 1:
                    yield tuple(chosen) + (i,)
                else:
                    chosen.append(i)
                    yield from extend(j + 1, i + 1)
                    chosen.pop()

    yield from extend(0, 0)


def _consecutive(w: tuple[int, ...], pw: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n, k = len(w), len(pw)
    windows = _windows(pw)
    for s in range(n - k + 1):
        for j, (lo, hi) in enumerate(windows):
            v = w[s + j]
            if (lo >= 0 and w[s + lo] > v) or (hi >= 0 and w[s + hi] < v):
                break
        else:
            yield tuple(range(s, s + k))


def _iter_raw(w: tuple[int, ...], pat: Pattern, ends_at_last: bool = False) -> Iterator[tuple[int, ...]]:
    """0-based occurrence tuples of ``pat`` in the word ``w``, lexicographically.

    ``w`` only needs distinct values (prefixes of permutations are fine).
    With ``ends_at_last`` only occurrences using the final entry are produced;
    this is supported for classical patterns only.
    """
    if pat.consecutive:
        if ends_at_last:
            raise ValueError("ends_at_last is only defined for classical patterns")
        return _consecutive(w, pat.word.values)
    return _classical(w, pat.word.values, ends_at_last)


def _first_raw(w: tuple[int, ...], pat: Pattern) -> Optional[tuple[int, ...]]:
    return next(_iter_raw(w, pat), None)


def occurrences(p: Permutation, pat: Pattern) -> Iterator[Occurrence]:
    """All occurrences of ``pat`` in ``p``, in lexicographic order of positions."""
    for pos in _iter_raw(p.values, pat):
        yield Occurrence(tuple(i + 1 for i in pos))


def contains(p: Permutation, pat: Pattern) -> Optional[Occurrence]:
    """The lexicographically least occurrence of ``pat`` in ``p``, or None."""
    pos = _first_raw(p.values, pat)
    if pos is None:
        return None
    return Occurrence(tuple(i + 1 for i in pos))


def avoids(p: Permutation, pat: Pattern) -> bool:
    return _first_raw(p.values, pat) is None


def count_occurrences(p: Permutation, pat: Pattern) -> int:
    return sum(1 for _ in _iter_raw(p.values, pat))
