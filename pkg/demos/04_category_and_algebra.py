"""From a reduced E-Fountain monoid to its category and algebra.

The associated category has the E-idempotents as objects and one morphism
per element (domain star, codomain plus).  The linear map phi sending an
element to the sum of morphisms left-below it is an algebra isomorphism
onto the category algebra, and the class spans become projective modules
whose hom spaces are spanned by right multiplications.
"""

from efountain import (
    associated_category,
    category_algebra,
    category_flags,
    check_algebra_hom,
    d_category,
    hom_space,
    is_semisimple_char0,
    peirce_dims,
    phi,
    phi_module_iso,
    semigroup_algebra,
    build_catalan,
    build_of,
)

fam = build_of(3)
s, es = fam.semigroup, fam.estructure

cat = associated_category(es)
print(f"category: {cat.n_objects} objects, {cat.n_morphisms} morphisms")
print("flags:", category_flags(cat))
print("hom-set counts (rows dom, cols cod):")
print(peirce_dims(cat))

m = phi(es)
hom = check_algebra_hom(m, semigroup_algebra(s), category_algebra(cat))
print("\nphi multiplicative:", hom.holds, " invertible:", m.is_invertible(),
      " det:", m.det())

for e in es.E:
    hs_dims = [hom_space(es, e, f).dim for f in es.E]
    print(f"hom dims out of L~({s.label(e)}):", hs_dims,
          " module iso:", phi_module_iso(es, e, cat))

dcat, _ = d_category(es)
print("\naction-homomorphism category morphisms:", dcat.n_morphisms,
      "(= monoid size)")

print("\nsemisimplicity over the rationals:")
print("  of:3     ->", is_semisimple_char0(semigroup_algebra(s)))
print("  catalan:3 ->", is_semisimple_char0(
    semigroup_algebra(build_catalan(3).semigroup)))
