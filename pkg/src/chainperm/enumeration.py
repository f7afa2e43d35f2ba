"""Exhaustive search for chain avoiders in S_n.

S_n is walked in lexicographic order.  Prefixes that already contain one of
the chain's first-level classical patterns are abandoned, which is sound
because classical containment survives extension of the word.  Everything
else (consecutive patterns, constraints on higher powers) is checked on
complete permutations only.

The search splits into ``n`` independent work units, one per first entry.
Running them on several worker processes and concatenating the results in
first-entry order gives exactly the single-worker output.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterator

from .chains import CHAIN_213, CHAIN_231, Chain, _word_avoids_chain
from .errors import UnsupportedChain
from .patterns import _iter_raw
from .perm import Permutation

__all__ = [
    "METHODS",
    "CountSequence",
    "enumerate_avoiders",
    "count_avoiders",
    "sequence",
]

METHODS = ("brute", "structural", "closed")


@dataclass(frozen=True)
class CountSequence:
    chain: Chain
    method: str
    entries: tuple[tuple[int, int], ...]

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.entries]

    def __iter__(self):
        return iter(self.entries)


def _prefix_ok(prefix: tuple[int, ...], prune) -> bool:
    for pat in prune:
        if next(_iter_raw(prefix, pat, ends_at_last=True), None) is not None:
            return False
    return True


def _walk(n: int, levels, first: int) -> Iterator[tuple[int, ...]]:
    """Avoiding words of length ``n`` starting with ``first``, in lex order."""
    prune = tuple(p for p in levels[0] if not p.consecutive)
    rest = [v for v in range(1, n + 1) if v != first]

    if not prune:
        for tail in itertools.permutations(rest):
            w = (first,) + tail
            if _word_avoids_chain(w, levels):
                yield w
        return

    if not _prefix_ok((first,), prune):
        return
    prefix = [first]
    used = [False] * (n + 1)
    used[first] = True

    def extend() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            w = tuple(prefix)
            if _word_avoids_chain(w, levels, skip_first_classical=True):
                yield w
            return
        for v in rest:
            if used[v]:
                continue
            prefix.append(v)
            if _prefix_ok(tuple(prefix), prune):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    yield from extend()


def _unit_list(n, levels, first):
    return list(_walk(n, levels, first))


def _unit_count(n, levels, first):
    return sum(1 for _ in _walk(n, levels, first))


def _run_units(func, n: int, c: Chain, workers: int):
    firsts = range(1, n + 1)
    job = partial(func, n, c.levels)
    if workers <= 1 or n <= 1:
        for first in firsts:
            yield job(first)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, so the merge stays deterministic
        yield from pool.map(job, firsts)


def enumerate_avoiders(n: int, c: Chain, workers: int = 1) -> Iterator[Permutation]:
    """Stream every permutation of length ``n`` avoiding ``c``, lexicographically.

    The output does not depend on ``workers``.  Wrap in ``list`` to
    materialise.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        # the empty permutation avoids every pattern of length >= 1
        yield Permutation._trusted(())
        return
    if workers <= 1:
        for first in range(1, n + 1):
            for w in _walk(n, c.levels, first):
                yield Permutation._trusted(w)
        return
    for chunk in _run_units(_unit_list, n, c, workers):
        for w in chunk:
            yield Permutation._trusted(w)


def count_avoiders(n: int, c: Chain, workers: int = 1) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return sum(_run_units(_unit_count, n, c, workers))


def _count(c: Chain, n: int, method: str, workers: int) -> int:
    if method == "brute":
        return count_avoiders(n, c, workers)

    from . import closed_forms, structure

    if c == CHAIN_231:
        gen, closed = structure.gen_chain231, closed_forms.f_closed
    elif c == CHAIN_213:
        gen, closed = structure.gen_chain213, closed_forms.g_closed
    else:
        raise UnsupportedChain(
            f"no {method} counting route for chain {c}; supported: {CHAIN_231}, {CHAIN_213}"
        )
    if method == "structural":
        return len(gen(n))
    return closed(n)


def sequence(c: Chain, n_min: int, n_max: int, method: str = "brute", workers: int = 1) -> CountSequence:
    """Counts for ``n_min <= n <= n_max`` by the chosen route.

    ``structural`` and ``closed`` only know the two chains
    ``231,1432:231`` and ``213,312:~213``; ``closed`` also raises
    DomainError below the formula's range.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if not 0 <= n_min <= n_max:
        raise ValueError(f"need 0 <= n_min <= n_max, got {n_min}..{n_max}")
    entries = tuple((n, _count(c, n, method, workers)) for n in range(n_min, n_max + 1))
    return CountSequence(c, method, entries)
