"""The flagship verification suite (``verify --suite paper``): nine named
criteria, each a list of exact sub-checks.  The pytest acceptance module and
the command-line ``verify`` command both run these functions; every
comparison is exact (rational arithmetic or integer counts), there are no
tolerances.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from efountain.algebras import (
    category_algebra,
    check_algebra_hom,
    check_iso,
    hom_space,
    is_semisimple_char0,
    order_condition,
    peirce_dims,
    phi,
    phi_module_iso,
    semigroup_algebra,
)
from efountain.categories import associated_category, d_category, is_functor_iso, opposite_category
from efountain.corpus import load_corpus
from efountain.families import (
    build_catalan,
    build_io,
    build_of,
    iso_c_ic,
    iso_of_io,
    mobius,
    natural_order_matrix,
    of_lex_leq,
    of_map,
    psi,
    subset_pairs,
)
from efountain.fountain import (
    build_estructure,
    congruence_condition,
    gla_check,
    gra_check,
    gra_simplified_check,
    is_partial_action_hom,
    r_alpha,
)
from efountain.linalg import identity_map
from efountain.semigroups import green_classes, structure_flags

__all__ = ["CRITERIA", "CriterionResult", "run_criteria"]

#: Runtime ceilings per criterion, seconds (exceeding one fails the criterion).
TIME_LIMITS = {
    "of-count": 1.0,
    "of-structure": 30.0,
    "theorem-sweep": 60.0,
    "phi-iso": 10.0,
    "order-lemma": 30.0,
    "module-layer": 60.0,
    "semisimplicity": 60.0,
    "final-isos": 60.0,
    "mobius-identity": 30.0,
}


@dataclass
class CriterionResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    elapsed_s: float = 0.0

    def record(self, label: str, ok: bool) -> None:
        self.checks.append((label, bool(ok)))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.checks if not ok]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else "  [" + "; ".join(self.failures) + "]"
        return f"{status} {self.name} ({len(self.checks)} checks, {self.elapsed_s:.2f}s){extra}"


# The six maps on {1,2,3} displayed for the smallest nontrivial case,
# written as 1-based image rows.
OF3_REFERENCE_MAPS = (
    (1, 2, 3),
    (1, 3, 3),
    (2, 3, 3),
    (1, 1, 3),
    (2, 2, 3),
    (3, 3, 3),
)


def criterion_of_count() -> CriterionResult:
    """Element counts of the of family for n = 1..7, and the exact map list
    at n = 3."""
    res = CriterionResult("of-count")
    expected = {1: 1, 2: 2, 3: 6, 4: 20, 5: 70, 6: 252, 7: 924}
    for n in range(1, 8):
        pairs = subset_pairs(n - 1)
        res.record(f"|of:{n}| == C(2n-2,n-1) == {expected[n]}",
                   len(pairs) == math.comb(2 * n - 2, n - 1) == expected[n])
    got = sorted(",".join(str(v + 1) for v in of_map(3, p.x, p.y))
                 for p in subset_pairs(2))
    want = sorted(",".join(str(v) for v in row) for row in OF3_REFERENCE_MAPS)
    res.record("of:3 maps byte-match the reference list", got == want)
    return res


def criterion_of_structure(n_max: int = 5) -> CriterionResult:
    """Structure of the of family for n <= n_max: regular, H-trivial,
    reduced E-Fountain with the diagonal E, congruence + both ample
    identities, tilde classes equal to the classical ones, and the eggbox
    counts."""
    res = CriterionResult("of-structure")
    for n in range(1, n_max + 1):
        fam = build_of(n)  # construction itself verifies reduced E-Fountain
        s, es = fam.semigroup, fam.estructure
        flags = structure_flags(s)
        res.record(f"of:{n} regular", flags.regular)
        res.record(f"of:{n} H-trivial", flags.h_trivial)
        res.record(f"of:{n} |E| == 2^(n-1)", len(es.E) == 2 ** (n - 1))
        res.record(f"of:{n} congruence", congruence_condition(es).holds)
        res.record(f"of:{n} gra", gra_check(es).holds)
        res.record(f"of:{n} gla", gla_check(es).holds)
        green = green_classes(s)
        res.record(f"of:{n} Ltilde == L",
                   set(es.ltilde_classes) == set(green.l_classes))
        res.record(f"of:{n} Rtilde == R",
                   set(es.rtilde_classes) == set(green.r_classes))
        sizes = sorted(len(c) for c in green.j_classes)
        want = sorted(math.comb(n - 1, k) ** 2 for k in range(n))
        res.record(f"of:{n} J-class count == {n}", len(green.j_classes) == n)
        res.record(f"of:{n} |J_k| == C(n-1,k)^2", sizes == want)
        rl_ok = True
        for jc in green.j_classes:
            k = round(math.sqrt(len(jc)))
            r_sizes = {len(green.r_classes[green.r_index[x]]) for x in jc}
            l_sizes = {len(green.l_classes[green.l_index[x]]) for x in jc}
            if r_sizes != {k} or l_sizes != {k}:
                rl_ok = False
        res.record(f"of:{n} R/L class sizes in J_k == C(n-1,k)", rl_ok)
    return res


def criterion_theorem_sweep(max_order: int = 6) -> CriterionResult:
    """Corpus sweep: on every committed instance, the right ample identity,
    its two-variable form, the action-homomorphism property of all right
    multiplications, and multiplicativity of the structural map agree; where
    the left-below relation embeds in a partial order, the structural map is
    additionally invertible, and being an algebra isomorphism is equivalent
    to the identity."""
    res = CriterionResult("theorem-sweep")
    corpus = load_corpus(max_order=max_order)
    res.record(f"corpus has >= 50 instances (got {len(corpus)})", len(corpus) >= 50)
    res.record("corpus contains a gra-failing instance",
               any(not inst.expected_gra for inst in corpus))
    agree = True
    iso_ok = True
    expected_ok = True
    for inst in corpus:
        es = build_estructure(inst.semigroup, inst.E)
        if not congruence_condition(es):
            res.record(f"{inst.name} congruence", False)
            continue
        gra = gra_check(es).holds
        chain = (
            gra_simplified_check(es).holds,
            all(is_partial_action_hom(es, r_alpha(es, a), es.plus[a], es.star[a])
                for a in range(es.size)),
        )
        m = phi(es)
        hom = check_algebra_hom(
            m, semigroup_algebra(inst.semigroup),
            category_algebra(associated_category(es))).holds
        if not all(v == gra for v in chain) or hom != gra:
            agree = False
        if gra != inst.expected_gra:
            expected_ok = False
        if order_condition(es):
            inv = check_iso(m)
            if not inv or (hom and inv) != gra:
                iso_ok = False
    res.record("gra == simplified == action-homs == phi-hom on all instances", agree)
    res.record("recorded gra verdicts match recomputation", expected_ok)
    res.record("order condition => phi invertible and (hom and iso) == gra", iso_ok)
    return res


def criterion_phi_iso(n_max: int = 4) -> CriterionResult:
    """The structural map on the of family is an algebra isomorphism,
    checked on all basis pairs and by exact invertibility, n <= n_max."""
    res = CriterionResult("phi-iso")
    for n in range(1, n_max + 1):
        fam = build_of(n)
        m = phi(fam.estructure)
        hom = check_algebra_hom(
            m, semigroup_algebra(fam.semigroup),
            category_algebra(associated_category(fam.estructure)))
        res.record(f"of:{n} phi multiplicative on all |S|^2 pairs", hom.holds)
        res.record(f"of:{n} phi invertible", check_iso(m))
    return res


def criterion_order_lemma(n_max: int = 5) -> CriterionResult:
    """The left-below relation of the of family is contained in the
    lexicographic order on subset pairs, and its closure is antisymmetric."""
    res = CriterionResult("order-lemma")
    for n in range(1, n_max + 1):
        fam = build_of(n)
        es = fam.estructure
        contained = all(
            of_lex_leq(fam, es.mul(a, e), a)
            for a in range(es.size) for e in es.E
        )
        res.record(f"of:{n} left-below contained in the lexicographic order", contained)
        res.record(f"of:{n} closure of left-below antisymmetric",
                   order_condition(es, lex_leq=lambda i, j: of_lex_leq(fam, i, j)))
    return res


def criterion_module_layer(n_max: int = 4, budget: int | None = None) -> CriterionResult:
    """For the of family, n <= n_max: the class-span modules are projective
    columns of the category algebra; hom-space dimensions count the elements
    with matching plus/star, realized by right-multiplication bases; and the
    concrete action category is the opposite of the associated one."""
    from efountain.fountain import DEFAULT_HOM_BUDGET

    budget = budget or DEFAULT_HOM_BUDGET
    res = CriterionResult("module-layer")
    for n in range(1, n_max + 1):
        fam = build_of(n)
        es = fam.estructure
        cat = associated_category(es)
        res.record(f"of:{n} class-module iso for every e",
                   all(phi_module_iso(es, e, cat) for e in es.E))
        dims_ok = True
        basis_ok = True
        total = 0
        pd = peirce_dims(cat)
        cross_ok = True
        for e in es.E:
            for f in es.E:
                hs = hom_space(es, e, f)
                total += hs.dim
                if hs.dim != len(hs.alphas):
                    dims_ok = False
                if not hs.ralpha_is_basis:
                    basis_ok = False
                # contravariance: hom dims match the (f, e) entry of the
                # category's hom-set counts
                if hs.dim != int(pd[es.e_position[f], es.e_position[e]]):
                    cross_ok = False
        res.record(f"of:{n} hom dims == #(plus=e, star=f)", dims_ok)
        res.record(f"of:{n} right-mult maps form a hom basis", basis_ok)
        res.record(f"of:{n} sum of hom dims == |S|", total == fam.size)
        res.record(f"of:{n} hom dims match transposed hom-set counts", cross_ok)
        dcat, dmaps = d_category(es, budget=budget)
        cop = opposite_category(cat)
        mor_map = []
        for a in range(fam.size):
            pm = r_alpha(es, a)
            target = None
            for k in range(dcat.n_morphisms):
                if (dcat.dom[k] == es.e_position[es.plus[a]]
                        and dcat.cod[k] == es.e_position[es.star[a]]
                        and dmaps[k] == pm):
                    target = k
                    break
            mor_map.append(target)
        res.record(f"of:{n} D(S) morphism count == |S|",
                   dcat.n_morphisms == fam.size)
        res.record(f"of:{n} C(S)^op iso D(S) via the canonical functor",
                   None not in mor_map
                   and is_functor_iso(cop, dcat, range(cat.n_objects), mor_map))
    return res


def criterion_semisimplicity(n_max: int = 4) -> CriterionResult:
    """Trace-form semisimplicity of the of-family algebras with the block
    dimension bookkeeping, against non-semisimplicity of the catalan family
    for n = 2..n_max."""
    res = CriterionResult("semisimplicity")
    for n in range(1, n_max + 1):
        fam = build_of(n)
        res.record(f"QQ[of:{n}] semisimple (trace form)",
                   is_semisimple_char0(semigroup_algebra(fam.semigroup)))
        cat = associated_category(fam.estructure)
        pd = peirce_dims(cat)
        blocks_ok = True
        for i, e in enumerate(fam.estructure.E):
            for j, f in enumerate(fam.estructure.E):
                same = fam.pairs[e].x.bit_count() == fam.pairs[f].x.bit_count()
                if int(pd[i, j]) != (1 if same else 0):
                    blocks_ok = False
        res.record(f"of:{n} hom-set counts block by subset size", blocks_ok)
        total = sum(math.comb(n - 1, k) ** 2 for k in range(n))
        res.record(
            f"of:{n} sum_k C(n-1,k)^2 == C(2n-2,n-1) == |S|",
            total == math.comb(2 * n - 2, n - 1) == int(pd.sum()) == fam.size)
    for n in range(2, n_max + 1):
        fam = build_catalan(n)
        res.record(f"QQ[catalan:{n}] not semisimple",
                   not is_semisimple_char0(semigroup_algebra(fam.semigroup)))
    return res


def criterion_final_isos(n_max: int = 3) -> CriterionResult:
    """End-to-end algebra isomorphisms for n <= n_max: of at n+1 onto io at
    n (with Moebius inversion a two-sided inverse of the structural map) and
    catalan at n+1 onto ic at n."""
    res = CriterionResult("final-isos")
    for n in range(1, n_max + 1):
        r = iso_of_io(n)
        res.record(f"of:{n+1} -> io:{n} multiplicative", r.hom.holds)
        res.record(f"of:{n+1} -> io:{n} invertible", r.invertible)
        res.record(f"of:{n+1} -> io:{n} unit preserved", r.unit_preserved)
        io = r.target
        psi_m = psi(io, verify=False)
        phi_m = phi(io.estructure)
        ident = identity_map(io.size)
        res.record(f"psi(io:{n}) . phi(io:{n}) == identity",
                   psi_m @ phi_m == ident and phi_m @ psi_m == ident)
        r2 = iso_c_ic(n)
        res.record(f"catalan:{n+1} -> ic:{n} multiplicative", r2.hom.holds)
        res.record(f"catalan:{n+1} -> ic:{n} invertible", r2.invertible)
    return res


def criterion_mobius_identity(n_max: int = 3) -> CriterionResult:
    """The Moebius delta identity on the natural order of the io family."""
    res = CriterionResult("mobius-identity")
    for n in range(0, n_max + 1):
        fam = build_io(n)
        leq = natural_order_matrix(fam.semigroup)
        mu = mobius(leq)  # raises if the delta identity fails internally
        size = fam.size
        ok = True
        for x in range(size):
            for y in range(size):
                if leq[x, y]:
                    total = sum(mu[(z, y)] for z in range(size)
                                if leq[x, z] and leq[z, y])
                    if total != (1 if x == y else 0):
                        ok = False
        res.record(f"io:{n} sum of mu(z,y) over x<=z<=y == delta(x,y)", ok)
    return res


CRITERIA = {
    "of-count": criterion_of_count,
    "of-structure": criterion_of_structure,
    "theorem-sweep": criterion_theorem_sweep,
    "phi-iso": criterion_phi_iso,
    "order-lemma": criterion_order_lemma,
    "module-layer": criterion_module_layer,
    "semisimplicity": criterion_semisimplicity,
    "final-isos": criterion_final_isos,
    "mobius-identity": criterion_mobius_identity,
}


def run_criteria(only=None, max_order: int | None = None,
                 budget: int | None = None) -> list[CriterionResult]:
    """Run the named criteria (all by default); enforce runtime ceilings."""
    names = list(CRITERIA) if not only else list(only)
    results = []
    for name in names:
        if name not in CRITERIA:
            raise KeyError(f"unknown criterion {name!r}")
        fn = CRITERIA[name]
        start = time.perf_counter()
        if name == "theorem-sweep" and max_order is not None:
            result = fn(max_order=max_order)
        elif name == "module-layer" and budget is not None:
            result = fn(budget=budget)
        else:
            result = fn()
        result.elapsed_s = time.perf_counter() - start
        limit = TIME_LIMITS[name]
        result.record(f"runtime {result.elapsed_s:.2f}s within {limit:.0f}s",
                      result.elapsed_s < limit)
        results.append(result)
    return results
