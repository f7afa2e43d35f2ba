"""Permutations in one-line notation and their algebra.

A permutation of [n] = {1, ..., n} is stored as the word
``(p(1), p(2), ..., p(n))``.  Everything user-facing is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthMismatch, NotABijection, ParseError

__all__ = [
    "Permutation",
    "from_one_line",
    "identity",
    "compose",
    "power",
    "inverse",
    "direct_sum",
    "is_unimodal",
    "parse_perm",
    "format_perm",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """Immutable permutation in one-line notation.

    ``values[i]`` is the image of ``i + 1``.  Instances order
    lexicographically by their words, so ``sorted`` gives the usual
    lexicographic listing of S_n.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        _check_bijection(values)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> "Permutation":
        # skips validation; internal callers guarantee a bijection
        p = object.__new__(cls)
        object.__setattr__(p, "values", values)
        return p

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"{i} is not in [1, {len(self.values)}]")
        return self.values[i - 1]

    def __str__(self):
        return format_perm(self)

    def __repr__(self):
        return f"Permutation({format_perm(self, compact=True)!r})"


def _check_bijection(values: Sequence[int]) -> None:
    n = len(values)
    seen = [False] * (n + 1)
    for idx, v in enumerate(values, start=1):
        if not 1 <= v <= n:
            raise NotABijection(f"value {v} at index {idx} is outside [1, {n}]", idx)
        if seen[v]:
            raise NotABijection(f"value {v} at index {idx} is repeated", idx)
        seen[v] = True


def from_one_line(values: Iterable[int]) -> Permutation:
    """Build a permutation from its one-line word, validating it."""
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Permutation._trusted(tuple(range(1, n + 1)))


def _compose_words(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple([p[j - 1] for j in q])


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Functional composition: ``compose(p, q)(i) == p(q(i))``."""
    if len(p) != len(q):
        raise LengthMismatch(f"cannot compose lengths {len(p)} and {len(q)}")
    return Permutation._trusted(_compose_words(p.values, q.values))


def power(p: Permutation, k: int) -> Permutation:
    """``p`` composed with itself ``k`` times; ``power(p, 0)`` is the identity."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    word = tuple(range(1, len(p) + 1))
    for _ in range(k):
        word = _compose_words(p.values, word)
    return Permutation._trusted(word)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p.values, start=1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def direct_sum(p: Permutation, q: Permutation) -> Permutation:
    """``p`` followed by ``q`` shifted up by ``len(p)``."""
    k = len(p)
    return Permutation._trusted(p.values + tuple(v + k for v in q.values))


def is_unimodal(p: Permutation) -> bool:
    """True iff the word strictly rises to its maximum and then strictly falls."""
    w = p.values
    i = 1
    while i < len(w) and w[i - 1] < w[i]:
        i += 1
    while i < len(w) and w[i - 1] > w[i]:
        i += 1
    return i >= len(w)


def parse_perm(text: str) -> Permutation:
    """Parse ``"4,3,1,2"`` or the compact ``"4312"`` (compact only for n <= 9).

    Raises ParseError for malformed text and NotABijection for a word that
    is not a permutation.
    """
    s = text.strip()
    if not s:
        return identity(0)
    if "," in s:
        values = []
        pos = 0
        for token in s.split(","):
            t = token.strip()
            if not t.isdigit():
                raise ParseError(f"bad permutation entry {token!r}", pos)
            values.append(int(t))
            pos += len(token) + 1
        return from_one_line(values)
    for pos, ch in enumerate(s):
        if not ch.isdigit():
            raise ParseError(f"unexpected character {ch!r} in permutation", pos)
    if len(s) > 9:
        raise ParseError("compact form is limited to n <= 9; use commas", 0)
    return from_one_line(int(ch) for ch in s)


def format_perm(p: Permutation, compact: bool = False) -> str:
    if compact and len(p) <= 9:
        return "".join(str(v) for v in p.values)
    return ",".join(str(v) for v in p.values)
