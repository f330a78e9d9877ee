"""A walking tour of the real roots of one hyperbolic system.

Run with: python3 demos/roots_tour.py
"""

from rank2roots import (
    RealRoot,
    System,
    classify,
    coords,
    enumerate_imaginary,
    enumerate_real,
    general_reflection,
    integral_norm,
    negate,
    reflect,
    root_literal,
)

s = System(5, 1)
print(f"System H({s.a},{s.b}), Cartan matrix {s.cartan_matrix()}")
print(f"product ab = {s.product}: hyperbolic = {s.is_hyperbolic}")
print()

# Every real root sits in one of four index families.  Positive roots are
# exactly the ones with index >= 0.
print("the four families at indices 0..3:")
for fam in ("LL", "LU", "SU", "SL"):
    row = [coords(s, RealRoot(fam, j)) for j in range(4)]
    norms = {integral_norm(s, v) for v in row}
    print(f"  {fam}: {row}   norm {norms}")
print()

# The first few positive real roots in height order.
print("positive real roots up to family index 2, by height:")
for r in enumerate_real(s, 2):
    v = coords(s, r)
    print(f"  {root_literal(r):>6}  at {v}, height {sum(v)}")
print()

# classify() inverts the coordinate forms: any integer vector gets a verdict.
print("classification of a few vectors:")
for v in [(4, 15), (1, 2), (2, 0), (-3, -4), (0, 0)]:
    cls = classify(s, v)
    name = root_literal(cls.root) if cls.root else ""
    print(f"  {v!s:>9} -> {cls.kind} {name}")
print()

# Imaginary roots fill the cone between the two conic branches.
print(f"positive imaginary roots of height <= 6: {enumerate_imaginary(s, 6)}")
print()

# Reflections compose on indices alone; the coordinate computation agrees.
mirror, target = RealRoot("SU", 1), RealRoot("LL", 0)
image = reflect(s, mirror, target)
check = general_reflection(s, coords(s, mirror), coords(s, target))
print(f"reflecting {root_literal(target)} in the mirror of {root_literal(mirror)}:")
print(f"  index arithmetic gives {root_literal(image)} = {coords(s, image)}")
print(f"  coordinate reflection gives {check}")
assert coords(s, image) == check

# Negation swaps the paired families and flips the index.
r = RealRoot("SU", 2)
print(f"negate({root_literal(r)}) = {root_literal(negate(r))}")
