"""Regenerate the committed corpus under src/efountain/data/corpus/.

The corpus holds small reduced E-Fountain semigroups with the congruence
condition, harvested deterministically from subsemigroups of the full
transformation monoid on 3 points (closures of generator sets of size <= 3)
plus a few named family members.  Instances whose structure fails the
generalized right ample identity are kept under gra_fail_* names; any
instance whose left-below relation fails to embed in a partial order would
be kept under cycle_* names.

Run from the repository root:  python3 tools/generate_corpus.py
"""

from __future__ import annotations

import itertools
import shutil
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from efountain.fountain import (
    build_estructure,
    congruence_condition,
    e_fountain_check,
    gra_check,
)
from efountain.algebras import order_condition
from efountain.semigroups import from_table, idempotents

MAX_ORDER = 6
PER_ORDER_CAP = 12
GRA_FAIL_CAP = 4
OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "efountain" / "data" / "corpus"


def compose(f, g):
    return tuple(f[x] for x in g)


def closure(gens, max_order):
    els = set(gens)
    frontier = list(els)
    while frontier:
        new = []
        for a in list(els):
            for b in frontier:
                for c in (compose(a, b), compose(b, a)):
                    if c not in els:
                        els.add(c)
                        new.append(c)
                        if len(els) > max_order:
                            return None
        frontier = new
    return frozenset(els)


def table_of(els):
    elist = sorted(els)
    pos = {f: i for i, f in enumerate(elist)}
    n = len(elist)
    return tuple(
        tuple(pos[compose(elist[i], elist[j])] for j in range(n))
        for i in range(n)
    )


def canonical_key(table, E):
    """Least relabeling of (table, E) over all permutations of the elements."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        relabeled = tuple(
            tuple(perm[table[inv[i]][inv[j]]] for j in range(n))
            for i in range(n)
        )
        e_mask = 0
        for e in E:
            e_mask |= 1 << perm[e]
        key = (relabeled, e_mask)
        if best is None or key < best:
            best = key
    return best


def harvest():
    maps3 = [tuple(t) for t in itertools.product(range(3), repeat=3)]
    semigroup_sets = set()
    for r in (1, 2, 3):
        for gens in itertools.combinations(maps3, r):
            els = closure(gens, MAX_ORDER)
            if els is not None:
                semigroup_sets.add(els)
    instances = []
    for els in sorted(semigroup_sets, key=lambda s: (len(s), sorted(s))):
        table = table_of(els)
        s = from_table([list(r) for r in table])
        idem = idempotents(s)
        for r in range(1, len(idem) + 1):
            for E in itertools.combinations(idem, r):
                report = e_fountain_check(s, E)
                if not (report.fountain and report.reduced):
                    continue
                es = build_estructure(s, E)
                if not congruence_condition(es):
                    continue
                gra = gra_check(es).holds
                order_ok = order_condition(es)
                instances.append((table, E, gra, order_ok))
    return instances


def select(instances):
    seen = set()
    fails, passes, cycles = [], [], []
    for table, E, gra, order_ok in instances:
        key = canonical_key(table, E)
        if key in seen:
            continue
        seen.add(key)
        rec = (table, E, gra, order_ok)
        if not order_ok:
            cycles.append(rec)
        elif not gra:
            fails.append(rec)
        else:
            passes.append(rec)
    fails = fails[:GRA_FAIL_CAP]
    by_order: dict[int, list] = {}
    for rec in passes:
        by_order.setdefault(len(rec[0]), []).append(rec)
    chosen = []
    for order in sorted(by_order):
        chosen.extend(by_order[order][:PER_ORDER_CAP])
    return fails, chosen, cycles


def write_instance(name, table, E, note=""):
    n = len(table)
    lines = [f"# {name}: order {n}{', ' + note if note else ''}", str(n)]
    for row in table:
        lines.append(" ".join(str(v) for v in row))
    (OUT_DIR / f"{name}.tbl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    (OUT_DIR / f"{name}.e").write_text(
        f"# E for {name}\n" + " ".join(str(e) for e in E) + "\n", encoding="utf-8")


def family_instances():
    from efountain.families import build_catalan, build_ic, build_io, build_of

    out = []
    for name, fam in (
        ("fam_of3", build_of(3)),
        ("fam_catalan3", build_catalan(3)),
        ("fam_io1", build_io(1)),
        ("fam_io2", build_io(2)),
        ("fam_ic2", build_ic(2)),
    ):
        table = tuple(tuple(fam.semigroup.mul(i, j) for j in range(fam.size))
                      for i in range(fam.size))
        out.append((name, table, fam.estructure.E))
    out.append(("fam_z2", ((0, 1), (1, 0)), (0,)))
    out.append(("fam_trivial", ((0,),), (0,)))
    return out


def main():
    if OUT_DIR.exists():
        shutil.rmtree(OUT_DIR)
    OUT_DIR.mkdir(parents=True)
    instances = harvest()
    fails, passes, cycles = select(instances)
    count = 0
    for k, (table, E, _, _) in enumerate(fails):
        write_instance(f"gra_fail_{k:02d}", table, E, note="fails the right ample sweep")
        count += 1
    for k, (table, E, _, _) in enumerate(cycles):
        write_instance(f"cycle_{k:02d}", table, E, note="left-below relation has a cycle")
        count += 1
    for k, (table, E, _, _) in enumerate(passes):
        write_instance(f"t3_{k:03d}", table, E)
        count += 1
    for name, table, E in family_instances():
        write_instance(name, table, E)
        count += 1
    print(f"wrote {count} instances to {OUT_DIR}")
    print(f"  gra failures: {len(fails)};  order-condition failures: {len(cycles)}")


if __name__ == "__main__":
    main()
