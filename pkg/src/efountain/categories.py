"""Finite categories: the category attached to a reduced E-Fountain structure,
its opposite, the concrete category of partial-action homomorphisms, a small
isomorphism checker/finder, and DOT / JSON exports.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from efountain.fountain import (
    EStructure,
    PartialMap,
    congruence_condition,
    enumerate_action_homs,
    DEFAULT_HOM_BUDGET,
)
from efountain.semigroups import FiniteSemigroup, GreenData

__all__ = [
    "CategoryFlags",
    "CongruenceConditionFails",
    "FiniteCategory",
    "SearchBudgetExceeded",
    "associated_category",
    "category_flags",
    "category_isomorphic",
    "category_json",
    "d_category",
    "export_dot",
    "is_functor_iso",
    "opposite_category",
]


class CongruenceConditionFails(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"congruence condition fails at {witness}")


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    """Objects and morphisms by index; composition as a dense table.

    ``compose_table[m2, m1]`` is the index of m2 o m1 (m1 applied first), or
    -1 when cod(m1) != dom(m2).  ``identity[o]`` is the identity morphism of
    object o.
    """

    n_objects: int
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    identity: tuple[int, ...]
    compose_table: np.ndarray
    object_labels: tuple[str, ...]
    morphism_labels: tuple[str, ...]

    @property
    def n_morphisms(self) -> int:
        return len(self.dom)

    def compose(self, m2: int, m1: int) -> int | None:
        v = int(self.compose_table[m2, m1])
        return None if v == -1 else v

    def hom(self, e: int, f: int) -> tuple[int, ...]:
        return tuple(m for m in range(self.n_morphisms)
                     if self.dom[m] == e and self.cod[m] == f)

    def validate(self) -> None:
        """Exhaustively check the category axioms (vectorized); raises
        AssertionError on the first broken axiom."""
        n = self.n_morphisms
        comp = self.compose_table
        dom = np.asarray(self.dom, dtype=np.intp)
        cod = np.asarray(self.cod, dtype=np.intp)
        for o in range(self.n_objects):
            i = self.identity[o]
            assert self.dom[i] == o and self.cod[i] == o
        # comp[m2, m1] defined exactly when cod(m1) == dom(m2)
        defined = comp != -1
        assert np.array_equal(defined, cod[None, :] == dom[:, None]), \
            "composition defined on the wrong pairs"
        # the composite of m2 after m1 runs from dom(m1) to cod(m2)
        safe = np.where(defined, comp, 0)
        assert np.all(np.where(defined, dom[safe], dom[None, :]) == dom[None, :])
        assert np.all(np.where(defined, cod[safe], cod[:, None]) == cod[:, None])
        ident_cod = np.asarray([self.identity[c] for c in self.cod], dtype=np.intp)
        ident_dom = np.asarray([self.identity[d] for d in self.dom], dtype=np.intp)
        ar = np.arange(n)
        assert np.array_equal(comp[ident_cod, ar], ar), "left identity fails"
        assert np.array_equal(comp[ar, ident_dom], ar), "right identity fails"
        # associativity: for composable pairs, (m3 . m2) . m1 == m3 . (m2 . m1)
        for m3 in range(n):
            a = comp[m3]                      # m3 . m2, or -1
            rows = np.nonzero(a != -1)[0]
            if not len(rows):
                continue
            sub = comp[rows]                  # m2 . m1 for those m2
            lhs = comp[a[rows]]               # (m3 . m2) . m1
            rhs = np.where(sub != -1, a[sub], -1)
            assert np.array_equal(lhs, rhs), f"associativity fails around {m3}"


def _make_category(n_objects, dom, cod, identity, compose_table,
                   object_labels, morphism_labels) -> FiniteCategory:
    table = np.array(compose_table, dtype=np.intp)
    table.setflags(write=False)
    cat = FiniteCategory(
        n_objects=n_objects, dom=tuple(dom), cod=tuple(cod),
        identity=tuple(identity), compose_table=table,
        object_labels=tuple(object_labels), morphism_labels=tuple(morphism_labels),
    )
    cat.validate()
    return cat


def associated_category(es: EStructure) -> FiniteCategory:
    """The category with objects E and one morphism per semigroup element.

    Element a becomes a morphism star(a) -> plus(a); composition of b after a
    is the product ba, defined when star(b) = plus(a).  Morphism indices are
    the element indices, so the element <-> morphism bijection is the
    identity.  Requires the congruence condition.
    """
    verdict = congruence_condition(es)
    if not verdict:
        raise CongruenceConditionFails(verdict.witness)
    s = es.semigroup
    n = s.size
    star, plus = es.star, es.plus
    e_pos = es.e_position
    dom = [e_pos[star[a]] for a in range(n)]
    cod = [e_pos[plus[a]] for a in range(n)]
    identity = [e for e in es.E]
    comp = np.full((n, n), -1, dtype=np.intp)
    for a in range(n):
        for b in range(n):
            if star[b] == plus[a]:
                ba = s.mul(b, a)
                # the compatibility that makes this a category
                assert plus[ba] == plus[b] and star[ba] == star[a]
                comp[b, a] = ba
    return _make_category(
        n_objects=len(es.E), dom=dom, cod=cod, identity=identity,
        compose_table=comp,
        object_labels=[s.label(e) for e in es.E],
        morphism_labels=[s.label(a) for a in range(n)],
    )


def opposite_category(c: FiniteCategory) -> FiniteCategory:
    """Same data with domains/codomains swapped and composition reversed."""
    return _make_category(
        n_objects=c.n_objects, dom=c.cod, cod=c.dom, identity=c.identity,
        compose_table=c.compose_table.T.copy(),
        object_labels=c.object_labels, morphism_labels=c.morphism_labels,
    )


@dataclass(frozen=True)
class CategoryFlags:
    groupoid: bool
    locally_trivial: bool


def category_flags(c: FiniteCategory) -> CategoryFlags:
    """groupoid: every morphism has a two-sided inverse.  locally_trivial:
    the only endomorphisms are the identities."""
    groupoid = True
    for m in range(c.n_morphisms):
        e, f = c.dom[m], c.cod[m]
        if not any(
            c.compose(m2, m) == c.identity[e] and c.compose(m, m2) == c.identity[f]
            for m2 in c.hom(f, e)
        ):
            groupoid = False
            break
    locally_trivial = all(
        m == c.identity[c.dom[m]]
        for m in range(c.n_morphisms) if c.dom[m] == c.cod[m]
    )
    return CategoryFlags(groupoid=groupoid, locally_trivial=locally_trivial)


def d_category(es: EStructure, budget: int = DEFAULT_HOM_BUDGET
               ) -> tuple[FiniteCategory, tuple[PartialMap, ...]]:
    """The concrete category of partial-action homomorphisms.

    Objects are the E-idempotents (standing for their L~-classes); the
    hom-set from e to f holds every total map L~(e) -> L~(f) that is a
    homomorphism of partial left actions, found by brute enumeration.
    Returns the category plus the morphism maps in index order.
    """
    s = es.semigroup
    ne = len(es.E)
    maps: list[PartialMap] = []
    dom: list[int] = []
    cod: list[int] = []
    key_to_index: dict = {}
    for ei in range(ne):
        for fi in range(ne):
            for pm in enumerate_action_homs(es, es.E[ei], es.E[fi], budget=budget):
                key_to_index[(ei, fi, pm.images)] = len(maps)
                maps.append(pm)
                dom.append(ei)
                cod.append(fi)
    identity = []
    for ei in range(ne):
        size = len(es.ltilde(es.E[ei]))
        identity.append(key_to_index[(ei, ei, tuple(range(size)))])
    n = len(maps)
    comp = np.full((n, n), -1, dtype=np.intp)
    for m1 in range(n):
        for m2 in range(n):
            if cod[m1] != dom[m2]:
                continue
            pm = maps[m2].compose(maps[m1])
            comp[m2, m1] = key_to_index[(dom[m1], cod[m2], pm.images)]
    labels = []
    for k, pm in enumerate(maps):
        src = es.ltilde(es.E[dom[k]])
        dst = es.ltilde(es.E[cod[k]])
        alpha = dst[pm.images[src.index(es.E[dom[k]])]]  # the hom equals right mult by F(e)
        labels.append(f"r[{s.label(alpha)}]")
    return _make_category(
        n_objects=ne, dom=dom, cod=cod, identity=identity, compose_table=comp,
        object_labels=[f"L~({s.label(e)})" for e in es.E],
        morphism_labels=labels,
    ), tuple(maps)


def is_functor_iso(c1: FiniteCategory, c2: FiniteCategory,
                   obj_map, mor_map) -> bool:
    """Check that (obj_map, mor_map) is a covariant isomorphism c1 -> c2."""
    if c1.n_objects != c2.n_objects or c1.n_morphisms != c2.n_morphisms:
        return False
    obj_map = tuple(obj_map)
    mor_map = tuple(mor_map)
    if sorted(obj_map) != list(range(c2.n_objects)):
        return False
    if sorted(mor_map) != list(range(c2.n_morphisms)):
        return False
    for m in range(c1.n_morphisms):
        if c2.dom[mor_map[m]] != obj_map[c1.dom[m]]:
            return False
        if c2.cod[mor_map[m]] != obj_map[c1.cod[m]]:
            return False
    for o in range(c1.n_objects):
        if mor_map[c1.identity[o]] != c2.identity[obj_map[o]]:
            return False
    for m1 in range(c1.n_morphisms):
        for m2 in range(c1.n_morphisms):
            c = c1.compose(m2, m1)
            img = c2.compose(mor_map[m2], mor_map[m1])
            if (c is None) != (img is None):
                return False
            if c is not None and mor_map[c] != img:
                return False
    return True


def category_isomorphic(c1: FiniteCategory, c2: FiniteCategory,
                        candidates=None,
                        max_objects: int = 12, max_morphisms: int = 64):
    """Find an isomorphism c1 -> c2, or return None.

    ``candidates`` is an optional iterable of (obj_map, mor_map) pairs tried
    first (canonical functors known to the caller).  The generic backtracking
    search only runs for categories within the stated size bounds; beyond
    them SearchBudgetExceeded is raised.
    """
    if candidates is not None:
        for obj_map, mor_map in candidates:
            if is_functor_iso(c1, c2, obj_map, mor_map):
                return tuple(obj_map), tuple(mor_map)
    if c1.n_objects != c2.n_objects or c1.n_morphisms != c2.n_morphisms:
        return None
    if c1.n_objects > max_objects or c1.n_morphisms > max_morphisms:
        raise SearchBudgetExceeded(
            f"{c1.n_objects} objects / {c1.n_morphisms} morphisms exceed the "
            f"generic search bounds ({max_objects}/{max_morphisms})")

    n_obj = c1.n_objects

    def hom_profile(c: FiniteCategory, o: int):
        ins = sum(1 for m in range(c.n_morphisms) if c.cod[m] == o)
        outs = sum(1 for m in range(c.n_morphisms) if c.dom[m] == o)
        loops = sum(1 for m in range(c.n_morphisms) if c.dom[m] == o and c.cod[m] == o)
        return (ins, outs, loops)

    prof1 = [hom_profile(c1, o) for o in range(n_obj)]
    prof2 = [hom_profile(c2, o) for o in range(n_obj)]

    import itertools
    for perm in itertools.permutations(range(n_obj)):
        if any(prof1[o] != prof2[perm[o]] for o in range(n_obj)):
            continue
        hom_sets_ok = True
        hom_choices = []
        order = []
        for e in range(n_obj):
            for f in range(n_obj):
                h1 = c1.hom(e, f)
                h2 = c2.hom(perm[e], perm[f])
                if len(h1) != len(h2):
                    hom_sets_ok = False
                    break
                if h1:
                    order.append((h1, h2))
            if not hom_sets_ok:
                break
        if not hom_sets_ok:
            continue

        def assign(idx: int, mor_map: dict):
            if idx == len(order):
                full = [mor_map[m] for m in range(c1.n_morphisms)]
                if is_functor_iso(c1, c2, perm, full):
                    return full
                return None
            h1, h2 = order[idx]
            for images in itertools.permutations(h2):
                trial = dict(mor_map)
                ok = True
                for m, im in zip(h1, images):
                    trial[m] = im
                # prune: composition with already-assigned morphisms
                for m, im in zip(h1, images):
                    for m2, im2 in trial.items():
                        c = c1.compose(m2, m)
                        if c is not None and c in trial:
                            if c2.compose(im2, im) != trial[c]:
                                ok = False
                                break
                        c = c1.compose(m, m2)
                        if c is not None and c in trial:
                            if c2.compose(im, im2) != trial[c]:
                                ok = False
                                break
                    if not ok:
                        break
                if ok:
                    res = assign(idx + 1, trial)
                    if res is not None:
                        return res
            return None

        result = assign(0, {})
        if result is not None:
            return tuple(perm), tuple(result)
    return None


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

def _dot_escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;"))


def _category_dot(c: FiniteCategory) -> str:
    out = ["digraph category {", "  rankdir=LR;"]
    for o in range(c.n_objects):
        out.append(f'  o{o} [shape=circle label="{c.object_labels[o]}"];')
    for m in range(c.n_morphisms):
        out.append(
            f'  o{c.dom[m]} -> o{c.cod[m]} [label="{c.morphism_labels[m]}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _eggbox_dot(green: GreenData, s: FiniteSemigroup | None = None) -> str:
    def lab(x: int) -> str:
        return _dot_escape(s.label(x)) if s is not None else f"s{x}"

    out = ["digraph eggbox {", "  node [shape=plaintext];"]
    for ji, jcls in enumerate(green.j_classes):
        members = set(jcls)
        r_ids = sorted({green.r_index[x] for x in jcls})
        l_ids = sorted({green.l_index[x] for x in jcls})
        rows_html = []
        for ri in r_ids:
            cells = []
            for li in l_ids:
                cell = [x for x in jcls
                        if green.r_index[x] == ri and green.l_index[x] == li]
                cells.append("<TD>" + (" ".join(lab(x) for x in cell) or "&nbsp;") + "</TD>")
            rows_html.append("<TR>" + "".join(cells) + "</TR>")
        table = ('<<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0">'
                 + "".join(rows_html) + "</TABLE>>")
        out.append(f"  j{ji} [label={table}];")
    # covering edges of the J-order, drawn upward from lower to higher classes
    nj = len(green.j_classes)
    reps = [cls[0] for cls in green.j_classes]
    leq = [[green.j_leq(reps[a], reps[b]) for b in range(nj)] for a in range(nj)]
    for a in range(nj):
        for b in range(nj):
            if a == b or not leq[a][b] or leq[b][a]:
                continue
            if any(leq[a][c] and leq[c][b] and c not in (a, b) and not leq[c][a]
                   and not leq[b][c] for c in range(nj)):
                continue
            out.append(f"  j{a} -> j{b};")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(obj, semigroup: FiniteSemigroup | None = None) -> str:
    """Deterministic DOT text for a FiniteCategory or a GreenData eggbox."""
    if isinstance(obj, FiniteCategory):
        return _category_dot(obj)
    if isinstance(obj, GreenData):
        return _eggbox_dot(obj, semigroup)
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")


def category_json(c: FiniteCategory) -> dict:
    """JSON-ready category dump with a dense composition table (None = undefined)."""
    return {
        "objects": list(c.object_labels),
        "morphisms": [
            {"id": m, "dom": c.dom[m], "cod": c.cod[m], "label": c.morphism_labels[m]}
            for m in range(c.n_morphisms)
        ],
        "compose": [
            [None if int(v) == -1 else int(v) for v in row]
            for row in c.compose_table
        ],
    }
