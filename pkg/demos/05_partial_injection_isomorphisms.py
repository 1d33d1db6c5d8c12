"""Moebius inversion and the bridge to partial injections.

The monoid of order-preserving self-maps of {1..n+1} fixing the top point
shares its associated category with the inverse monoid of order-preserving
partial injections of {1..n}.  Moebius inversion over the natural order
turns that shared category into an explicit rational-algebra isomorphism;
restricting to the order-increasing elements gives the Catalan analogue.
"""

from efountain import (
    build_io,
    iso_c_ic,
    iso_of_io,
    mobius,
    natural_order_matrix,
    phi,
    psi,
)

io2 = build_io(2)
s = io2.semigroup
leq = natural_order_matrix(s)
mu = mobius(leq)
print("natural order on io:2 (restriction of partial maps):")
for a in range(s.size):
    ups = [s.label(b) for b in range(s.size) if leq[a, b]]
    print(f"  {s.label(a):10} <= {ups}")

top = s.identity
print("\nmu(-, identity):",
      {s.label(a): mu[(a, top)] for a in range(s.size) if leq[a, top]})

psi_m = psi(io2)        # verified: algebra iso, two-sided inverse of phi
phi_m = phi(io2.estructure)
print("\npsi . phi is the identity matrix:",
      all((psi_m @ phi_m).entry(i, j) == (1 if i == j else 0)
          for i in range(s.size) for j in range(s.size)))

for n in (1, 2, 3):
    r = iso_of_io(n)
    print(f"\nof:{n+1} ~ io:{n}:  multiplicative={r.hom.holds}, "
          f"invertible={r.invertible}, unit preserved={r.unit_preserved}, "
          f"dimension={r.matrix.rows}")
    r2 = iso_c_ic(n)
    print(f"catalan:{n+1} ~ ic:{n}:  multiplicative={r2.hom.holds}, "
          f"invertible={r2.invertible}, dimension={r2.matrix.rows}")
