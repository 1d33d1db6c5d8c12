"""Tables, validation, classical Green's relations, and the text format."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from efountain.semigroups import (
    NotAssociative,
    NotIdempotent,
    NotRegular,
    OutOfRangeEntry,
    SemigroupError,
    dump_table_text,
    from_table,
    green_classes,
    idempotents,
    is_inverse,
    natural_order_leq,
    opposite_semigroup,
    parse_table_text,
    rho_hom_check,
    structure_flags,
)
from efountain.families import build_of

Z2 = [[0, 1], [1, 0]]
NULL2 = [[0, 0], [0, 0]]


def brute_green_leq(table):
    """Oracle: the ideal-inclusion definitions, computed as literal sets."""
    n = len(table)
    def r_ideal(a):
        return {a} | {table[a][s] for s in range(n)}
    def l_ideal(a):
        return {a} | {table[s][a] for s in range(n)}
    def j_ideal(a):
        out = set()
        for b in l_ideal(a):
            out |= r_ideal(b)
        return out
    r = [[r_ideal(a) <= r_ideal(b) for b in range(n)] for a in range(n)]
    l = [[l_ideal(a) <= l_ideal(b) for b in range(n)] for a in range(n)]
    j = [[j_ideal(a) <= j_ideal(b) for b in range(n)] for a in range(n)]
    return r, l, j


def test_trivial_monoid():
    s = from_table([[0]])
    assert s.size == 1 and s.is_monoid and s.identity == 0
    g = green_classes(s)
    assert g.r_classes == g.l_classes == g.j_classes == g.h_classes == ((0,),)


def test_null_semigroup_valid():
    s = from_table(NULL2)
    assert not s.is_monoid
    assert idempotents(s) == (0,)


def test_z2_valid_group():
    s = from_table(Z2)
    assert s.is_monoid and s.identity == 0
    assert idempotents(s) == (0,)


def test_out_of_range_entry():
    with pytest.raises(OutOfRangeEntry) as exc:
        from_table([[0, 2], [1, 0]])
    assert exc.value.position == (0, 1)


def test_not_associative_reports_triple():
    table = [[0, 0], [1, 0]]
    with pytest.raises(NotAssociative) as exc:
        from_table(table)
    i, j, k = exc.value.triple
    assert table[table[i][j]][k] != table[i][table[j][k]]


def test_full_check_flag_skips():
    s = from_table([[0, 0], [1, 0]], full_check=False)
    assert s.size == 2  # invalid algebra, but the caller opted out


def test_table_is_readonly():
    s = from_table(Z2)
    with pytest.raises(ValueError):
        s.table[0, 0] = 1


def test_idempotents_of3_by_squaring():
    """Oracle: square each of the six reference maps directly."""
    maps = [(0, 1, 2), (0, 2, 2), (1, 2, 2), (0, 0, 2), (1, 1, 2), (2, 2, 2)]
    compose = lambda f, g: tuple(f[x] for x in g)
    expected = sorted(m for m in maps if compose(m, m) == m)
    assert len(expected) == 5
    fam = build_of(3)
    got = sorted(fam.maps[i] for i in idempotents(fam.semigroup))
    assert got == expected


def test_natural_order_examples():
    fam = build_of(3)
    s = fam.semigroup
    idx = {s.label(i): i for i in range(s.size)}
    assert natural_order_leq(s, idx["3,3,3"], idx["1,3,3"])      # empty below {1}
    assert not natural_order_leq(s, idx["1,3,3"], idx["2,2,3"])  # {1} vs {2}
    for e in idempotents(s):
        assert natural_order_leq(s, e, e)


def test_natural_order_rejects_non_idempotent():
    s = from_table(Z2)
    with pytest.raises(NotIdempotent):
        natural_order_leq(s, 0, 1)


def test_natural_order_is_partial_order():
    """Reflexive, antisymmetric, transitive on idempotents of a mid-size case."""
    s = build_of(4).semigroup
    idem = idempotents(s)
    leq = {(e, f): natural_order_leq(s, e, f) for e in idem for f in idem}
    for e in idem:
        assert leq[e, e]
        for f in idem:
            if leq[e, f] and leq[f, e]:
                assert e == f
            for g in idem:
                if leq[e, f] and leq[f, g]:
                    assert leq[e, g]


@pytest.mark.parametrize("table", [Z2, NULL2, [[0]]])
def test_green_preorders_match_ideal_oracle(table):
    s = from_table(table)
    r, l, j = brute_green_leq(table)
    g = green_classes(s)
    n = s.size
    for a in range(n):
        for b in range(n):
            assert g.r_leq(a, b) == r[a][b]
            assert g.l_leq(a, b) == l[a][b]
            assert g.j_leq(a, b) == j[a][b]


def test_green_preorders_match_ideal_oracle_of4():
    fam = build_of(4)
    rows = [list(r) for r in fam.semigroup.rows]
    r, l, j = brute_green_leq(rows)
    g = green_classes(fam.semigroup)
    n = fam.size
    for a in range(n):
        for b in range(n):
            assert g.r_leq(a, b) == r[a][b]
            assert g.l_leq(a, b) == l[a][b]
            assert g.j_leq(a, b) == j[a][b]


def test_h_is_r_meet_l():
    for table in (Z2, NULL2):
        g = green_classes(from_table(table))
        for a in range(len(table)):
            for b in range(len(table)):
                same_h = g.h_index[a] == g.h_index[b]
                assert same_h == (g.r_index[a] == g.r_index[b]
                                  and g.l_index[a] == g.l_index[b])
    fam = build_of(4)
    g = green_classes(fam.semigroup)
    for a in range(fam.size):
        for b in range(fam.size):
            same_h = g.h_index[a] == g.h_index[b]
            assert same_h == (g.r_index[a] == g.r_index[b]
                              and g.l_index[a] == g.l_index[b])


def test_of3_r_class_same_image():
    fam = build_of(3)
    s = fam.semigroup
    g = green_classes(s)
    idx = {s.label(i): i for i in range(s.size)}
    cls = g.r_classes[g.r_index[idx["1,3,3"]]]
    assert sorted(s.label(x) for x in cls) == ["1,1,3", "1,3,3"]


def test_structure_flags():
    f = structure_flags(from_table(Z2))
    assert not f.h_trivial and f.regular
    f = structure_flags(from_table(NULL2))
    assert f.h_trivial and not f.regular
    f = structure_flags(build_of(3).semigroup)
    assert f.h_trivial and f.regular


def test_is_inverse():
    assert is_inverse(from_table(Z2))
    assert not is_inverse(from_table(NULL2))  # 1 has no generalized inverse


def test_rho_hom_check_identity_and_of():
    fam = build_of(3)
    s = fam.semigroup
    for e in idempotents(s):
        assert rho_hom_check(s, e)
    idx = {s.label(i): i for i in range(s.size)}
    assert rho_hom_check(s, idx["2,3,3"])


def test_rho_hom_check_all_regular_of4():
    s = build_of(4).semigroup
    for a in range(s.size):
        assert rho_hom_check(s, a)


def test_rho_hom_check_not_regular():
    with pytest.raises(NotRegular):
        rho_hom_check(from_table(NULL2), 1)


def test_opposite_involution():
    fam = build_of(3)
    s = fam.semigroup
    opop = opposite_semigroup(opposite_semigroup(s))
    assert np.array_equal(opop.table, s.table)


# --- table text format -----------------------------------------------------

def test_parse_reference_file():
    text = "# demo\n2\n0 0\n0 0\n"
    grid, labels = parse_table_text(text)
    assert grid == [[0, 0], [0, 0]] and labels is None


def test_parse_labels():
    text = "1\n0\nlabels:\ne\n"
    grid, labels = parse_table_text(text)
    assert grid == [[0]] and labels == ("e",)


def test_parse_errors():
    for text in ("", "x\n", "2\n0 0\n", "1\n0\nbogus\n", "1\n0\nlabels:\na b\n"):
        with pytest.raises(SemigroupError):
            parse_table_text(text)


@given(
    n=st.integers(min_value=1, max_value=5),
    data=st.data(),
)
def test_dump_parse_roundtrip(n, data):
    """Serialization is a bijection on (grid, labels) content."""
    grid = data.draw(st.lists(
        st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n),
        min_size=n, max_size=n))
    with_labels = data.draw(st.booleans())
    labels = tuple(f"x{i}" for i in range(n)) if with_labels else None
    s = from_table(grid, labels, full_check=False)
    grid2, labels2 = parse_table_text(dump_table_text(s))
    assert grid2 == grid and labels2 == labels


def test_dump_byte_determinism():
    s = build_of(3).semigroup
    assert dump_table_text(s) == dump_table_text(s)
