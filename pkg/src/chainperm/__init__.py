"""Enumerate and verify permutations avoiding chains of patterns.

A permutation p avoids the chain ``(T1 : T2 : ... : Tk)`` when p**i avoids
every pattern in Ti.  The package offers three independent counting routes
for the chains ``231,1432:231`` and ``213,312:~213``: brute-force search,
constructive generators and closed formulas.
"""

from .chains import (
    CHAIN_213,
    CHAIN_231,
    AvoidanceReport,
    Chain,
    LevelEntry,
    avoids_chain,
    chain_avoided,
    parse_chain,
    render_chain,
    strongly_avoids,
)
from .closed_forms import f_closed, f_recurrence, g_closed, g_recurrence, lucas, p1_count, q2_count
from .enumeration import CountSequence, count_avoiders, enumerate_avoiders, sequence
from .errors import (
    DomainError,
    LengthMismatch,
    NotABijection,
    NotInTrichotomy,
    NotUnimodal,
    ParseError,
    UnsupportedChain,
)
from .patterns import (
    Occurrence,
    Pattern,
    avoids,
    classical,
    consecutive,
    contains,
    count_occurrences,
    occurrences,
    parse_pattern,
)
from .perm import (
    Permutation,
    compose,
    direct_sum,
    format_perm,
    from_one_line,
    identity,
    inverse,
    is_unimodal,
    parse_perm,
    power,
)
from .structure import (
    TrichotomyTag,
    check_peak_lemma,
    classify_trichotomy,
    gen_bona_smith_family,
    gen_chain213,
    gen_chain231,
    gen_P1,
    gen_Q2,
)

__version__ = "0.1.0"
