"""
How the avoider sets decompose: the P1/P2/P3 split of 231,1432:231, the
strongly 312-avoiding family ending in 1, and the two halves of
213,312:~213.
"""

from collections import Counter

from chainperm import (
    CHAIN_231,
    check_peak_lemma,
    classify_trichotomy,
    enumerate_avoiders,
    format_perm,
    gen_bona_smith_family,
    gen_chain213,
    gen_P1,
    gen_Q2,
    inverse,
    parse_chain,
)


def show(perms):
    return " ".join(format_perm(p, compact=True) for p in perms)


n = 6

## Every avoider of 231,1432:231 starts with n, ends with n, or ends with n(n-1)
tags = Counter(classify_trichotomy(p).value for p in enumerate_avoiders(n, CHAIN_231))
print(f"n={n} class sizes:", dict(sorted(tags.items())))
print("P1 forms:", show(gen_P1(n)))

## Inverting the strongly 312-avoiding family ending in 1 gives the P1 forms
family = gen_bona_smith_family(n)
print("family   :", show(family))
print("inverses :", show(inverse(p) for p in family))

## 213,312:~213 avoiders ending in 1
print("\nQ2 forms:", show(gen_Q2(n)))
print("all avoiders:", len(gen_chain213(n)))

## In a unimodal p, any consecutive 213 in the square sits right under the peak
unimodal = list(enumerate_avoiders(8, parse_chain("213,312")))
print("\npeak property holds on all", len(unimodal), "unimodal permutations of 8:",
      all(check_peak_lemma(p) for p in unimodal))
