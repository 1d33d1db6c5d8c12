"""The reduced E-Fountain structure: tilde classes, star and plus maps.

E is the set of diagonal subset pairs.  Each element's star is its least
right identity from E, its plus the least left identity; the tilde classes
group elements sharing those identities.
"""

from efountain import build_of, e_fountain_check, green_classes

fam = build_of(3)
s, es = fam.semigroup, fam.estructure

report = e_fountain_check(s, es.E)
print("E =", [s.label(e) for e in es.E])
print("fountain:", report.fountain, " reduced:", report.reduced)

print("\nL~-classes:", [[s.label(x) for x in c] for c in es.ltilde_classes])
print("R~-classes:", [[s.label(x) for x in c] for c in es.rtilde_classes])

green = green_classes(s)
print("\nL~ equals classical L:", set(es.ltilde_classes) == set(green.l_classes))
print("R~ equals classical R:", set(es.rtilde_classes) == set(green.r_classes))

print("\nelement   star      plus")
for a in range(s.size):
    print(f"{s.label(a):9} {s.label(es.star[a]):9} {s.label(es.plus[a]):9}")

# star of a pair (X, Y) is the diagonal pair on X; plus the diagonal on Y
for i, p in enumerate(fam.pairs):
    assert fam.pairs[es.star[i]].x == p.x
    assert fam.pairs[es.plus[i]].y == p.y
print("\nstar/plus match the subset-pair description on every element")
