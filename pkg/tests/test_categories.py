"""The associated category, its opposite, the action-homomorphism category,
isomorphism search, and exports."""

import json

import numpy as np
import pytest

from efountain.categories import (
    CongruenceConditionFails,
    SearchBudgetExceeded,
    associated_category,
    category_flags,
    category_isomorphic,
    category_json,
    d_category,
    export_dot,
    is_functor_iso,
    opposite_category,
)
from efountain.corpus import load_corpus
from efountain.families import build_catalan, build_io, build_of
from efountain.fountain import build_estructure, gra_check, r_alpha
from efountain.semigroups import from_table, green_classes

Z2 = [[0, 1], [1, 0]]


@pytest.fixture(scope="module")
def of3():
    return build_of(3)


@pytest.fixture(scope="module")
def cat3(of3):
    return associated_category(of3.estructure)


def test_monoid_one_object_category():
    es = build_estructure(from_table(Z2), [0])
    cat = associated_category(es)
    assert cat.n_objects == 1 and cat.n_morphisms == 2
    assert cat.compose(1, 1) == 0  # composition is the group law


def test_congruence_required():
    """A reduced E-Fountain structure without the congruence condition is
    rejected.  Full transformation monoid on two points, elements ordered
    id, swap, const0, const1, with E = {id, const0}: the plus identity fails
    at (swap, const1)."""
    t2 = from_table([
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 2, 2, 2],
        [3, 3, 3, 3],
    ])
    es = build_estructure(t2, [0, 2])
    from efountain.fountain import congruence_condition
    assert not congruence_condition(es).holds
    with pytest.raises(CongruenceConditionFails):
        associated_category(es)


def test_of3_category_shape(cat3, of3):
    assert cat3.n_objects == 4
    assert cat3.n_morphisms == 6
    # unique morphism between objects of equal subset size
    sizes = [of3.pairs[e].x.bit_count() for e in of3.estructure.E]
    for i in range(4):
        for j in range(4):
            expect = 1 if sizes[i] == sizes[j] else 0
            assert len(cat3.hom(i, j)) == expect


def test_of_category_morphism_count_binomial():
    import math
    for n in (2, 3, 4):
        cat = associated_category(build_of(n).estructure)
        assert cat.n_morphisms == math.comb(2 * n - 2, n - 1)


def test_of3_category_flags(cat3):
    flags = category_flags(cat3)
    assert flags.groupoid and flags.locally_trivial


def test_group_category_flags():
    es = build_estructure(from_table(Z2), [0])
    flags = category_flags(associated_category(es))
    assert flags.groupoid and not flags.locally_trivial


def test_catalan_category_flags():
    """Strictly increasing subset pairs are not invertible; they first appear
    at n = 3 (the ambient set {1..n-1} needs two points)."""
    for n in (2, 3, 4):
        cat = associated_category(build_catalan(n).estructure)
        flags = category_flags(cat)
        assert flags.locally_trivial
        assert flags.groupoid == (n <= 2)


def test_opposite_involution(cat3):
    opop = opposite_category(opposite_category(cat3))
    assert opop.dom == cat3.dom and opop.cod == cat3.cod
    assert np.array_equal(opop.compose_table, cat3.compose_table)
    assert category_flags(opposite_category(cat3)).groupoid


def test_d_category_counts(of3):
    dcat, maps = d_category(of3.estructure)
    assert dcat.n_morphisms == 6 == of3.size
    assert dcat.n_objects == 4


def test_d_category_count_equals_size_when_gra():
    for inst in load_corpus():
        es = build_estructure(inst.semigroup, inst.E)
        if not gra_check(es).holds:
            continue
        dcat, _ = d_category(es)
        assert dcat.n_morphisms == inst.semigroup.size


def test_cop_isomorphic_to_d(of3):
    es = of3.estructure
    cat = associated_category(es)
    dcat, dmaps = d_category(es)
    cop = opposite_category(cat)
    mor_map = []
    for a in range(of3.size):
        pm = r_alpha(es, a)
        hit = [k for k in range(dcat.n_morphisms)
               if dcat.dom[k] == es.e_position[es.plus[a]]
               and dcat.cod[k] == es.e_position[es.star[a]]
               and dmaps[k] == pm]
        assert len(hit) == 1
        mor_map.append(hit[0])
    assert is_functor_iso(cop, dcat, range(cat.n_objects), mor_map)


def test_cop_isomorphic_to_d_on_gra_corpus():
    for inst in load_corpus():
        es = build_estructure(inst.semigroup, inst.E)
        if not gra_check(es).holds:
            continue
        cat = associated_category(es)
        dcat, dmaps = d_category(es)
        found = category_isomorphic(opposite_category(cat), dcat)
        assert found is not None, inst.name


def test_generic_search_finds_self_iso(cat3):
    cop = opposite_category(cat3)
    assert category_isomorphic(cop, cat3) is not None


def test_generic_search_object_count_mismatch():
    es1 = build_estructure(from_table([[0]]), [0])
    one = associated_category(es1)
    es2 = build_estructure(from_table(Z2), [0])
    two = associated_category(es2)
    assert category_isomorphic(one, two) is None


def test_search_budget():
    cat = associated_category(build_of(4).estructure)  # 20 morphisms, 8 objects
    with pytest.raises(SearchBudgetExceeded):
        category_isomorphic(cat, cat, max_objects=4)


def test_io_of_category_identification():
    """C of the io family at n matches C of the of family at n+1 index for
    index under the shared subset-pair order."""
    for n in (1, 2):
        io = build_io(n)
        of = build_of(n + 1)
        c1 = associated_category(io.estructure)
        c2 = associated_category(of.estructure)
        assert [(p.x, p.y) for p in io.pairs] == [(p.x, p.y) for p in of.pairs]
        assert is_functor_iso(c1, c2, range(c1.n_objects), range(c1.n_morphisms))


def test_validate_rejects_broken_table(cat3):
    broken = cat3.compose_table.copy()
    broken[0, 0] = -1
    from efountain.categories import FiniteCategory
    bad = FiniteCategory(
        n_objects=cat3.n_objects, dom=cat3.dom, cod=cat3.cod,
        identity=cat3.identity, compose_table=broken,
        object_labels=cat3.object_labels, morphism_labels=cat3.morphism_labels)
    with pytest.raises(AssertionError):
        bad.validate()


# --- exports -----------------------------------------------------------------

def test_category_dot(cat3):
    text = export_dot(cat3)
    assert text.startswith("digraph category {")
    assert text.count("->") == 6
    assert text.count("shape=circle") == 4
    assert export_dot(cat3) == text  # deterministic


def test_eggbox_dot(of3):
    g = green_classes(of3.semigroup)
    text = export_dot(g, of3.semigroup)
    assert text.startswith("digraph eggbox {")
    assert text.count("<TABLE") == 3  # one block per J-class
    assert export_dot(g, of3.semigroup) == text


def test_trivial_category_dot():
    es = build_estructure(from_table([[0]]), [0])
    text = export_dot(associated_category(es))
    assert text.count("->") == 1  # one identity loop


def test_export_dot_type_error():
    with pytest.raises(TypeError):
        export_dot(42)


def test_category_json_roundtrip(cat3):
    obj = category_json(cat3)
    assert len(obj["objects"]) == 4
    assert len(obj["morphisms"]) == 6
    assert obj["morphisms"][0]["id"] == 0
    assert len(obj["compose"]) == 6
    json.dumps(obj)  # serializable
    undefined = sum(1 for row in obj["compose"] for v in row if v is None)
    defined = sum(1 for row in obj["compose"] for v in row if v is not None)
    assert undefined + defined == 36


def test_generic_search_discrete_two_objects():
    """One object with one loop against two isolated objects: no isomorphism."""
    from efountain.categories import FiniteCategory
    import numpy as np
    one = associated_category(build_estructure(from_table([[0]]), [0]))
    comp = np.array([[0, -1], [-1, 1]], dtype=np.intp)
    discrete = FiniteCategory(
        n_objects=2, dom=(0, 1), cod=(0, 1), identity=(0, 1),
        compose_table=comp, object_labels=("a", "b"),
        morphism_labels=("1a", "1b"))
    discrete.validate()
    assert category_isomorphic(one, discrete) is None
    assert category_isomorphic(discrete, discrete) is not None
