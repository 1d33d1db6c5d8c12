"""The generalized right ample identity and its partial-action meaning.

The identity (e(a(eaf)*)+)* = (a(eaf)*)+ holds exactly when every right
multiplication map between tilde classes is a homomorphism of partial left
actions.  The committed corpus contains a minimal three-element structure
where it fails: a left-zero pair with an adjoined identity.
"""

from efountain import (
    build_estructure,
    congruence_condition,
    gla_check,
    gra_action_equivalence,
    gra_check,
    gra_simplified_check,
    is_partial_action_hom,
    opposite_semigroup,
    r_alpha,
)
from efountain.corpus import load_instance

inst = load_instance("gra_fail_00")
s = inst.semigroup
print("table:")
for i in range(s.size):
    print("  ", [s.mul(i, j) for j in range(s.size)])
print("E =", inst.E)

es = build_estructure(s, inst.E)
print("congruence condition:", congruence_condition(es).holds)

verdict = gra_check(es)
print("right ample identity:", verdict.holds, " witness (a, e, f):", verdict.witness)
print("two-variable form agrees:", gra_simplified_check(es).holds == verdict.holds)

for a in range(s.size):
    pm = r_alpha(es, a)
    hom = is_partial_action_hom(es, pm, es.plus[a], es.star[a])
    print(f"right multiplication by {a}: action homomorphism = {hom}")

print("identity <-> all maps are homs (theorem oracle):", gra_action_equivalence(es))

op = build_estructure(opposite_semigroup(s), inst.E)
print("\nreversed table fails the LEFT ample identity:", not gla_check(op).holds)
