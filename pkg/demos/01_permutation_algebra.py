"""
Permutations in one-line notation: composition, powers, inverses, direct sums.
"""

from chainperm import compose, direct_sum, inverse, is_unimodal, parse_perm, power

## One-line notation; compact text works up to n = 9
p = parse_perm("1325467")
print("p       =", p)
print("p(2)    =", p(2))

## Composition is functional: compose(p, q)(i) == p(q(i))
print("p o p   =", compose(p, p))
print("p^2     =", power(p, 2))

## A 3-cycle returns to the identity after three steps
c = parse_perm("231")
for k in range(4):
    print(f"231^{k}   =", power(c, k))

## Inverse
q = parse_perm("45321")
print("inv(45321) =", inverse(q))

## Direct sum, and the fact that squaring acts blockwise on it
a, b = parse_perm("231"), parse_perm("21")
print("231 + 21 =", direct_sum(a, b))
print("(a+b)^2 == a^2 + b^2:", power(direct_sum(a, b), 2) == direct_sum(power(a, 2), power(b, 2)))

## Unimodal words rise to a single peak and then fall
for text in ("23451", "1534627", "213"):
    print(text, "unimodal:", is_unimodal(parse_perm(text)))
