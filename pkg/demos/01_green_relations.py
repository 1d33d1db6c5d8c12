"""Classical Green's relations on a small transformation monoid.

Builds the monoid of order-preserving self-maps of {1,2,3} fixing 3,
prints its eggbox structure, and shows the ideal preorders at work.
"""

from efountain import build_of, export_dot, green_classes, structure_flags

fam = build_of(3)
s = fam.semigroup
print(f"elements ({s.size}):", ", ".join(s.label(i) for i in range(s.size)))

green = green_classes(s)
print("\nR-classes:", [[s.label(x) for x in c] for c in green.r_classes])
print("L-classes:", [[s.label(x) for x in c] for c in green.l_classes])
print("J-classes:", [[s.label(x) for x in c] for c in green.j_classes])
print("H-classes are singletons:", all(len(c) == 1 for c in green.h_classes))

flags = structure_flags(s)
print(f"\nH-trivial: {flags.h_trivial}, regular: {flags.regular}")

a, b = 1, 5  # the map 1,3,3 against the identity
print(f"\n{s.label(a)} <=_J {s.label(b)}:", green.j_leq(a, b))
print(f"{s.label(b)} <=_J {s.label(a)}:", green.j_leq(b, a))

print("\nDOT eggbox (paste into graphviz):\n")
print(export_dot(green, s))
