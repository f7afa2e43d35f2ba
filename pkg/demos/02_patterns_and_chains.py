"""
Classical and consecutive patterns, and avoidance of chains of patterns.
"""

from chainperm import (
    avoids_chain,
    classical,
    consecutive,
    contains,
    count_occurrences,
    parse_chain,
    parse_perm,
    strongly_avoids,
)

w = parse_perm("1534627")

## Classical containment returns the lexicographically least witness
occ = contains(w, classical("12345"))
print("12345 in", w, "at positions", occ.positions, "values", occ.values_in(w))
print("3142 in", w, ":", contains(w, classical("3142")))

## Consecutive patterns must occupy adjacent positions
occ = contains(w, consecutive("213"))
print("~213 in", w, "at positions", occ.positions, "values", occ.values_in(w))
print("~321 in", w, ":", contains(w, consecutive("321")))

print("occurrences of 231 in 2413:", count_occurrences(parse_perm("2413"), classical("231")))

## A chain constrains successive powers: level i applies to p^i
chain = parse_chain("231,1432:231")
report = avoids_chain(parse_perm("1325467"), chain)
print("\n1325467 avoids", chain, ":", report.verdict)
for e in report.entries:
    print(f"  p^{e.power} = {e.power_perm}  {e.pattern}: {'avoided' if e.witness is None else e.witness.positions}")

## "-" leaves a level unconstrained
report = avoids_chain(parse_perm("312"), parse_chain("-:231"))
print("\n312 avoids -:231 :", report.verdict, "(square is", report.entries[0].power_perm, ")")

## Strong avoidance is the chain (s : s)
print("45321 strongly avoids 312:", strongly_avoids(parse_perm("45321"), classical("312")))
