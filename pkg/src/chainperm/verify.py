"""Cross-checks between brute force, the generators and the closed forms.

Each suite returns a :class:`SuiteResult` holding a printable per-n table
and the first counterexample found, if any.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import closed_forms as cf
from .chains import CHAIN_213, CHAIN_231, parse_chain
from .enumeration import enumerate_avoiders
from .errors import NotInTrichotomy
from .perm import format_perm, inverse
from .structure import (
    TrichotomyTag,
    check_peak_lemma,
    classify_trichotomy,
    gen_bona_smith_family,
    gen_chain213,
    gen_chain231,
    gen_P1,
)

__all__ = ["SUITES", "MIN_N", "SuiteResult", "run_suite"]

MIN_N = {
    "conj231": 1,
    "conj213": 2,
    "trichotomy": 3,
    "bona-smith": 2,
    "peak": 3,
}
SUITES = tuple(MIN_N) + ("all",)


@dataclass
class SuiteResult:
    name: str
    header: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def fail(self, message: str) -> None:
        if self.failure is None:
            self.failure = message


def _first_difference(a, b) -> str:
    diff = sorted(set(a) ^ set(b))
    if diff:
        return format_perm(diff[0], compact=True)
    return "ordering differs"


def _three_routes(name, chain, gen, closed, n_lo, max_n, workers):
    res = SuiteResult(name, ("n", "brute", "structural", "closed", "match"))
    for n in range(n_lo, max_n + 1):
        brute = list(enumerate_avoiders(n, chain, workers))
        built = gen(n)
        expected = closed(n)
        match = brute == built and len(brute) == expected
        res.rows.append((n, len(brute), len(built), expected, "yes" if match else "NO"))
        if not match:
            if brute != built:
                res.fail(f"n={n}: brute and structural lists differ at {_first_difference(brute, built)}")
            else:
                res.fail(f"n={n}: count {len(brute)} but closed form gives {expected}")
    return res


def _conj231(max_n, workers):
    return _three_routes("conj231", CHAIN_231, gen_chain231, cf.f_closed, 1, max_n, workers)


def _conj213(max_n, workers):
    return _three_routes("conj213", CHAIN_213, gen_chain213, cf.g_closed, 2, max_n, workers)


def _trichotomy(max_n, workers):
    res = SuiteResult("trichotomy", ("n", "P1", "P2", "P3", "expected", "match"))
    for n in range(3, max_n + 1):
        sizes = dict.fromkeys(TrichotomyTag, 0)
        for p in enumerate_avoiders(n, CHAIN_231, workers):
            try:
                sizes[classify_trichotomy(p, strict=True)] += 1
            except NotInTrichotomy:
                res.fail(f"n={n}: avoider {format_perm(p, compact=True)} has no trichotomy tag")
        got = tuple(sizes[t] for t in TrichotomyTag)
        expected = (cf.p1_count(n), cf.f_closed(n - 1), cf.f_closed(n - 2))
        match = got == expected
        res.rows.append((n, *got, "/".join(map(str, expected)), "yes" if match else "NO"))
        if not match:
            res.fail(f"n={n}: class sizes {got}, expected {expected}")
    return res


_STRONG_312 = parse_chain("312:312")


def _bona_smith(max_n, workers):
    res = SuiteResult("bona-smith", ("n", "brute", "family", "inverses=P1", "match"))
    for n in range(2, max_n + 1):
        brute = [p for p in enumerate_avoiders(n, _STRONG_312, workers) if p(n) == 1]
        family = sorted(gen_bona_smith_family(n))
        inv_ok = n < 3 or sorted(inverse(p) for p in family) == sorted(gen_P1(n))
        match = brute == family and inv_ok
        res.rows.append((n, len(brute), len(family), "yes" if inv_ok else "NO", "yes" if match else "NO"))
        if brute != family:
            res.fail(f"n={n}: family and brute force differ at {_first_difference(brute, family)}")
        elif not inv_ok:
            res.fail(f"n={n}: inverses of the family are not the P1 forms")
    return res


_UNIMODAL = parse_chain("213,312")


def _peak(max_n, workers):
    res = SuiteResult("peak", ("n", "unimodal", "expected", "violations", "match"))
    for n in range(3, max_n + 1):
        total = bad = 0
        for p in enumerate_avoiders(n, _UNIMODAL, workers):
            total += 1
            if not check_peak_lemma(p):
                bad += 1
                res.fail(f"n={n}: square of {format_perm(p, compact=True)} has a 213 window off the peak")
        expected = 1 << (n - 1)
        match = bad == 0 and total == expected
        res.rows.append((n, total, expected, bad, "yes" if match else "NO"))
        if total != expected:
            res.fail(f"n={n}: found {total} unimodal permutations, expected {expected}")
    return res


_RUNNERS: dict[str, Callable[[int, int], SuiteResult]] = {
    "conj231": _conj231,
    "conj213": _conj213,
    "trichotomy": _trichotomy,
    "bona-smith": _bona_smith,
    "peak": _peak,
}


def min_n(name: str) -> int:
    if name == "all":
        return max(MIN_N.values())
    return MIN_N[name]


def run_suite(name: str, max_n: int, workers: int = 1) -> list[SuiteResult]:
    """Run one suite (or every suite for ``"all"``) up to ``max_n``."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if max_n < min_n(name):
        raise ValueError(f"suite {name} needs --max-n >= {min_n(name)}")
    names = list(_RUNNERS) if name == "all" else [name]
    return [_RUNNERS[s](max_n, workers) for s in names]
