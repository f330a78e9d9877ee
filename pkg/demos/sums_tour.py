"""When is the sum of two real roots again a real root?

Run with: python3 demos/sums_tour.py
"""

from rank2roots import (
    RealRoot,
    System,
    brute_simple_sum_neighbors,
    positive_combinations,
    real_sum_pairs,
    root_literal,
    simple_sum_neighbors,
    sum_length_rule,
)

# For a >= b > 1 the answer is: never.  A brute scan over a whole index
# window finds nothing.
for a, b in [(3, 2), (2, 2), (7, 3)]:
    s = System(a, b)
    pairs = real_sum_pairs(s, 8)
    print(f"H({a},{b}): real sums within |index| <= 8: {len(pairs)}")
print()

# For b = 1 real sums exist but are tightly constrained: each simple root
# has a short list of partners.
s = System(5, 1)
print("H(5,1) partners of the simple roots:")
for i in (1, 2):
    for sign in (1, -1):
        gs = [root_literal(g) for g in simple_sum_neighbors(s, i, sign)]
        print(f"  {'+' if sign > 0 else '-'}alpha_{i} + {gs}")
print()

# Every real-sum pair in a window, with the length rule in action:
# short + short gives long, mixed gives short.
print("all real-sum pairs of H(5,1) with |index| <= 1:")
for alpha, beta, total in real_sum_pairs(s, 1):
    rule = sum_length_rule(s, alpha, beta)
    print(
        f"  {root_literal(alpha):>6} + {root_literal(beta):>6}"
        f" = {root_literal(total):>6}   (forced {rule})"
    )
print()

# The affine system H(4,1) is the exception: its gamma gaps are all 1, so
# alpha_1 + SU_j is real for every j and the partner lists are infinite.
s41 = System(4, 1)
found = brute_simple_sum_neighbors(s41, 1, 1, 8)
print(f"H(4,1) brute partners of +alpha_1 up to index 8: {[root_literal(g) for g in found]}")
print()

# Positive integer combinations m*alpha + n*beta that land on real roots.
s32 = System(3, 2)
alpha, beta = RealRoot("SU", 0), RealRoot("LL", 0)
print(f"real m*{root_literal(alpha)} + n*{root_literal(beta)} in H(3,2), m,n <= 10:")
for m, n, r in positive_combinations(s32, alpha, beta, 10):
    print(f"  m={m}, n={n}: {root_literal(r)}")
