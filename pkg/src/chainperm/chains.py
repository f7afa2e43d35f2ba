"""Chains of patterns: level ``i`` constrains the ``i``-th power of a permutation.

Text grammar::

    chain   := level (":" level)*
    level   := "-" | pattern ("," pattern)*
    pattern := "~"? digits

``"-"`` is an unconstrained level, so ``"-:321"`` only asks the square to
avoid 321.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ParseError
from .patterns import Occurrence, Pattern, _first_raw, parse_pattern, render_pattern
from .perm import Permutation, _compose_words

__all__ = [
    "Chain",
    "LevelEntry",
    "AvoidanceReport",
    "parse_chain",
    "render_chain",
    "avoids_chain",
    "chain_avoided",
    "strongly_avoids",
]


@dataclass(frozen=True, eq=False)
class Chain:
    """Ordered levels of patterns; ``levels[i - 1]`` constrains ``p ** i``.

    Patterns keep their parse order for reporting, but equality and hashing
    treat each level as a set.
    """

    levels: tuple[tuple[Pattern, ...], ...]

    def __post_init__(self):
        levels = tuple(tuple(level) for level in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise ValueError("a chain needs at least one level")
        if not any(levels):
            raise ValueError("every level of the chain is empty")
        for i, level in enumerate(levels, start=1):
            if len(set(level)) != len(level):
                raise ValueError(f"level {i} lists a pattern twice")

    @classmethod
    def of(cls, *levels: Iterable) -> "Chain":
        """Convenience constructor: ``Chain.of(["231", "1432"], ["231"])``."""
        built = []
        for level in levels:
            built.append(tuple(
                pat if isinstance(pat, Pattern) else parse_pattern(str(pat))
                for pat in level
            ))
        return cls(tuple(built))

    @property
    def depth(self) -> int:
        return len(self.levels)

    def _key(self):
        return tuple(frozenset(level) for level in self.levels)

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return render_chain(self)

    def __repr__(self):
        return f"Chain({render_chain(self)!r})"


@dataclass(frozen=True)
class LevelEntry:
    power: int
    power_perm: Permutation
    pattern: Pattern
    witness: Optional[Occurrence]


@dataclass(frozen=True)
class AvoidanceReport:
    perm: Permutation
    chain: Chain
    entries: tuple[LevelEntry, ...] = field(default=())

    @property
    def verdict(self) -> bool:
        return all(e.witness is None for e in self.entries)

    def __bool__(self):
        return self.verdict


def parse_chain(text: str) -> Chain:
    if not text or not text.strip():
        raise ParseError("empty chain", 0)
    levels = []
    pos = 0
    for raw_level in text.split(":"):
        stripped = raw_level.strip()
        if not stripped:
            raise ParseError("empty level; use '-' for an unconstrained level", pos)
        if stripped == "-":
            levels.append(())
        else:
            pats = []
            inner = pos
            for raw_pat in raw_level.split(","):
                if not raw_pat.strip():
                    raise ParseError("empty pattern in level", inner)
                pat = parse_pattern(raw_pat, offset=inner)
                if pat in pats:
                    raise ParseError(f"pattern {render_pattern(pat)} repeated in level", inner)
                pats.append(pat)
                inner += len(raw_pat) + 1
            levels.append(tuple(pats))
        pos += len(raw_level) + 1
    if not any(levels):
        raise ParseError("every level of the chain is empty", 0)
    return Chain(tuple(levels))


def render_chain(c: Chain) -> str:
    return ":".join(
        ",".join(render_pattern(p) for p in level) if level else "-"
        for level in c.levels
    )


def _powers(w: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    out = [w]
    for _ in range(k - 1):
        out.append(_compose_words(w, out[-1]))
    return out


def avoids_chain(p: Permutation, c: Chain) -> AvoidanceReport:
    """Full per-level report; every (level, pattern) pair is evaluated."""
    entries = []
    for i, (level, w) in enumerate(zip(c.levels, _powers(p.values, c.depth)), start=1):
        pw = Permutation._trusted(w)
        for pat in level:
            pos = _first_raw(w, pat)
            witness = None if pos is None else Occurrence(tuple(j + 1 for j in pos))
            entries.append(LevelEntry(i, pw, pat, witness))
    return AvoidanceReport(p, c, tuple(entries))


def _word_avoids_chain(w: tuple[int, ...], levels, skip_first_classical: bool = False) -> bool:
    # boolean fast path; powers are built lazily and the scan stops at the
    # first witness
    power = w
    for i, level in enumerate(levels):
        if i:
            power = _compose_words(w, power)
        for pat in level:
            if skip_first_classical and i == 0 and not pat.consecutive:
                continue
            if _first_raw(power, pat) is not None:
                return False
    return True


def chain_avoided(p: Permutation, c: Chain) -> bool:
    """Short-circuiting yes/no version of :func:`avoids_chain`."""
    return _word_avoids_chain(p.values, c.levels)


def strongly_avoids(p: Permutation, pat: Pattern) -> bool:
    """True iff both ``p`` and ``p`` squared avoid the classical pattern ``pat``."""
    if pat.consecutive:
        raise ValueError("strong avoidance is defined for classical patterns")
    return _word_avoids_chain(p.values, ((pat,), (pat,)))


CHAIN_231 = Chain.of(["231", "1432"], ["231"])
CHAIN_213 = Chain.of(["213", "312"], ["~213"])
