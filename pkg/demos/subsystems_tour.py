"""Root subsystems: reflection closures, lattice spans, and the systems
living inside other systems.

Run with: python3 demos/subsystems_tour.py
"""

from rank2roots import (
    IndexSets,
    Progression,
    RealRoot,
    System,
    delta,
    delta_re_subsystem,
    epsilon,
    phi_classify,
    phi_closure,
    root_literal,
    subsystem_class,
)

s = System(5, 1)

# The reflection closure of a generating set is an arithmetic progression
# of mirror lines per orbit.
gens = [RealRoot("LL", 1), RealRoot("SU", 0)]
ix = phi_closure(gens)
print(f"closure of {{{', '.join(root_literal(g) for g in gens)}}}: {ix}")

pt = phi_classify(s, ix)
cls = subsystem_class(pt)
print(f"type {pt.kind}, base {[root_literal(r) for r in pt.base]}")
print(f"Cartan matrix {pt.cartan} -> {cls.kind} H({cls.p},{cls.q})")
print()

# Varying the short-line modulus d produces a chain of symmetric hyperbolic
# systems H(delta_d, delta_d) inside H(5,1)...
print("II_S chain inside H(5,1):")
for d in (1, 2, 3, 4):
    pt = phi_classify(s, IndexSets(None, Progression(0, d)))
    print(f"  d={d}: Cartan H({delta(s, d)},{delta(s, d)}) = {pt.cartan}")
print()

# ...and mixed closures produce the asymmetric chain H(a*eps_D, b*eps_D).
print("II_LS chain inside H(5,1):")
for big_d in (1, 2, 3):
    g = 2 * big_d + 1
    pt = phi_classify(s, IndexSets(Progression(0, g), Progression(big_d, g)))
    cls = subsystem_class(pt)
    print(f"  D={big_d} (modulus {g}): H({cls.p},{cls.q}), epsilon = {epsilon(s, big_d)}")
print()

# The lattice-span subsystem usually agrees with the reflection closure,
# but short generators over b = 1 can span more than they reflect to.
gens = [RealRoot("SU", 0), RealRoot("SL", 0)]
ix, same = delta_re_subsystem(s, gens)
print(f"span subsystem of {{SU:0, SL:0}} in H(5,1): {ix}")
print(f"same as the reflection closure: {same}")
print()

s41 = System(4, 1)
gens = [RealRoot("SU", 0), RealRoot("SU", 3)]
phi = phi_closure(gens)
ix, same = delta_re_subsystem(s41, gens)
print(f"H(4,1), gens {{SU:0, SU:3}}:")
print(f"  reflection closure: {phi}")
print(f"  span subsystem:     {ix} (gains the long lines)")
