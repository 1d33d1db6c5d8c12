"""Command-line front end.

Three subcommands:

* ``analyze``  run the full pipeline on a family or a table file and print a
               JSON report (deterministic bytes for fixed input and flags).
* ``export``   write a DOT / table / matrix artifact.
* ``verify``   run the flagship criterion suite (``paper``) or the corpus sweep.

Exit codes: 0 when every checked condition holds, 1 when some condition is
false (or a verification check fails), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from efountain.algebras import (
    NoUnit,
    category_algebra,
    check_algebra_hom,
    check_iso,
    is_semisimple_char0,
    phi,
    semigroup_algebra,
)
from efountain.categories import associated_category, category_flags, export_dot
from efountain.corpus import load_corpus, parse_e_text
from efountain.families import build_family
from efountain.fountain import (
    Verdict,
    build_estructure,
    congruence_condition,
    e_fountain_check,
    gla_check,
    gra_check,
    tilde_classes,
)
from efountain.semigroups import (
    SemigroupError,
    dump_table_text,
    green_classes,
    idempotents,
    load_table_file,
    structure_flags,
)
from efountain.verify import CRITERIA, run_criteria

__all__ = ["main"]

SCHEMA = "efountain/report/1"


class ParseError(ValueError):
    pass


class InvalidE(ValueError):
    pass


def _load_source(args) -> tuple:
    """Resolve --family/--table and --E into (semigroup, E, descriptor)."""
    if bool(args.family) == bool(args.table):
        raise ParseError("exactly one of --family or --table is required")
    if args.family:
        try:
            fam = build_family(args.family)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        descriptor = {"kind": "family", "selector": args.family}
        s = fam.semigroup
        default_e = fam.estructure.E
    else:
        try:
            s = load_table_file(args.table)
        except (OSError, SemigroupError) as exc:
            raise ParseError(f"cannot load table: {exc}") from None
        descriptor = {"kind": "table", "path": os.path.basename(args.table)}
        default_e = None
    e_arg = args.E
    if e_arg is None or e_arg == "auto-of":
        if default_e is None:
            raise InvalidE("--E is required for table input (no canonical choice)")
        return s, tuple(default_e), descriptor
    if os.path.exists(e_arg):
        try:
            E = parse_e_text(open(e_arg, encoding="utf-8").read())
        except ValueError as exc:
            raise InvalidE(f"bad E file: {exc}") from None
    else:
        try:
            E = tuple(sorted(set(int(t) for t in e_arg.replace(",", " ").split())))
        except ValueError:
            raise InvalidE(f"cannot parse E specification {e_arg!r}") from None
    if not E:
        raise InvalidE("E must be nonempty")
    return s, E, descriptor


def _verdict_json(s, v: Verdict | None, skipped: bool = False):
    if skipped:
        return {"status": "skipped"}
    assert v is not None
    out = {"status": "holds" if v.holds else "fails"}
    if v.witness is not None:
        out["witness"] = {
            "indices": list(v.witness),
            "labels": [s.label(i) for i in v.witness],
        }
        if v.detail:
            out["witness"]["detail"] = v.detail
    return out


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    s, E, descriptor = _load_source(args)
    green = green_classes(s)
    flags = structure_flags(s)
    report = {
        "schema": SCHEMA,
        "input": descriptor,
        "structure": {
            "size": s.size,
            "is_monoid": s.is_monoid,
            "idempotents": len(idempotents(s)),
            "h_trivial": flags.h_trivial,
            "regular": flags.regular,
            "green_classes": {
                "r": len(green.r_classes),
                "l": len(green.l_classes),
                "j": len(green.j_classes),
                "h": len(green.h_classes),
            },
        },
        "E": {"indices": list(E), "labels": [s.label(e) for e in E]},
    }
    conditions: dict[str, bool] = {}

    lt, rt = tilde_classes(s, E)
    report["tilde"] = {
        "l_class_sizes": sorted(len(c) for c in lt),
        "r_class_sizes": sorted(len(c) for c in rt),
    }

    fr = e_fountain_check(s, E)
    report["verdicts"] = {
        "fountain": {"status": "holds" if fr.fountain else "fails"},
        "reduced": {"status": "holds" if fr.reduced else "fails"},
    }
    if fr.fountain_witness is not None:
        side, cls = fr.fountain_witness
        report["verdicts"]["fountain"]["witness"] = {
            "side": side, "class_indices": list(cls),
            "class_labels": [s.label(x) for x in cls],
        }
    if fr.reduced_witness is not None:
        e, f = fr.reduced_witness
        report["verdicts"]["reduced"]["witness"] = {
            "indices": [e, f], "labels": [s.label(e), s.label(f)],
        }
    conditions["fountain"] = fr.fountain
    conditions["reduced"] = fr.reduced

    es = None
    if fr.fountain and fr.reduced:
        es = build_estructure(s, E)
        cong = congruence_condition(es)
        report["verdicts"]["congruence"] = _verdict_json(s, cong)
        conditions["congruence"] = cong.holds
    else:
        report["verdicts"]["congruence"] = _verdict_json(s, None, skipped=True)
        cong = None

    if es is not None and cong is not None and cong.holds:
        gra = gra_check(es)
        gla = gla_check(es)
        report["verdicts"]["gra"] = _verdict_json(s, gra)
        report["verdicts"]["gla"] = _verdict_json(s, gla)
        conditions["gra"] = gra.holds
        conditions["gla"] = gla.holds
        cat = associated_category(es)
        cf = category_flags(cat)
        report["category"] = {
            "objects": cat.n_objects,
            "morphisms": cat.n_morphisms,
            "groupoid": cf.groupoid,
            "locally_trivial": cf.locally_trivial,
        }
        m = phi(es)
        hom = check_algebra_hom(m, semigroup_algebra(s), category_algebra(cat))
        iso = check_iso(m)
        report["algebra"] = {
            "phi_hom": _verdict_json(s, hom),
            "phi_iso": {"status": "holds" if iso else "fails"},
        }
        conditions["phi_hom"] = hom.holds
        conditions["phi_iso"] = iso
        try:
            semi = is_semisimple_char0(semigroup_algebra(s))
            report["algebra"]["semisimple"] = {"status": "holds" if semi else "fails"}
            conditions["semisimple"] = semi
        except NoUnit:
            report["algebra"]["semisimple"] = {"status": "skipped", "reason": "no unit"}
    else:
        for key in ("gra", "gla"):
            report["verdicts"][key] = _verdict_json(s, None, skipped=True)

    report["conditions_checked"] = {k: v for k, v in sorted(conditions.items())}
    report["timing_ms"] = (
        round((time.perf_counter() - started) * 1000.0, 3) if args.timing else None
    )
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if all(conditions.values()) else 1


def cmd_export(args) -> int:
    s, E, _descriptor = _load_source(args)
    what = args.what
    if what == "table":
        payload = dump_table_text(s)
    elif what == "dot-eggbox":
        payload = export_dot(green_classes(s), s)
    elif what in ("dot-category", "phi-matrix"):
        es = build_estructure(s, E)
        cong = congruence_condition(es)
        if not cong.holds:
            raise ParseError("the congruence condition fails; no category exists")
        if what == "dot-category":
            payload = export_dot(associated_category(es))
        else:
            payload = json.dumps(phi(es).to_json_obj(), sort_keys=True) + "\n"
    else:
        raise ParseError(f"unknown export kind {what!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _run_corpus_suite(max_order, jobs: int) -> list[tuple[str, bool]]:
    names = [inst.name for inst in load_corpus(max_order=max_order)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_instance_ok, names))
        return sorted(zip(names, results))
    return sorted((name, _corpus_instance_ok(name)) for name in names)


def _corpus_instance_ok(name: str) -> bool:
    """Theorem biconditionals on one corpus instance (worker-safe)."""
    from efountain.corpus import load_instance
    from efountain.fountain import (
        gra_simplified_check,
        is_partial_action_hom,
        r_alpha,
    )
    from efountain.algebras import order_condition

    inst = load_instance(name)
    es = build_estructure(inst.semigroup, inst.E)
    if not congruence_condition(es).holds:
        return False
    gra = gra_check(es).holds
    if gra != inst.expected_gra:
        return False
    if gra_simplified_check(es).holds != gra:
        return False
    if gra != all(is_partial_action_hom(es, r_alpha(es, a), es.plus[a], es.star[a])
                  for a in range(es.size)):
        return False
    m = phi(es)
    hom = check_algebra_hom(m, semigroup_algebra(inst.semigroup),
                            category_algebra(associated_category(es))).holds
    if hom != gra:
        return False
    if order_condition(es):
        inv = check_iso(m)
        if not inv or (hom and inv) != gra:
            return False
    return True


def cmd_verify(args) -> int:
    if args.suite == "paper":
        only = args.only.split(",") if args.only else None
        try:
            results = run_criteria(only=only, max_order=args.max_order,
                                   budget=args.budget)
        except KeyError as exc:
            raise ParseError(f"{exc.args[0]}; known: {', '.join(CRITERIA)}") from None
        for r in results:
            print(r.summary())
        n_fail = sum(not r.passed for r in results)
        print(f"{len(results) - n_fail}/{len(results)} criteria passed")
        return 0 if n_fail == 0 else 1
    if args.suite == "corpus":
        rows = _run_corpus_suite(args.max_order, args.jobs)
        n_fail = 0
        for name, ok in rows:
            print(f"{'PASS' if ok else 'FAIL'} {name}")
            n_fail += not ok
        print(f"{len(rows) - n_fail}/{len(rows)} corpus instances passed")
        return 0 if n_fail == 0 else 1
    raise ParseError(f"unknown suite {args.suite!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="efountain",
        description="Analyze finite semigroups as reduced E-Fountain structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        p.add_argument("--family", help="family selector: of:N, catalan:N, io:N, ic:N")
        p.add_argument("--table", help="path to a multiplication-table file")
        p.add_argument("--E", help="E subset: inline indices, a file path, or auto-of")

    p_an = sub.add_parser("analyze", help="run the full pipeline, print a JSON report")
    add_source(p_an)
    p_an.add_argument("--timing", action="store_true",
                      help="include wall-clock timing in the report "
                           "(off by default to keep output byte-deterministic)")
    p_an.add_argument("--jobs", type=int, default=1, help="worker cap (reserved)")
    p_an.set_defaults(func=cmd_analyze)

    p_ex = sub.add_parser("export", help="write a DOT / table / matrix artifact")
    add_source(p_ex)
    p_ex.add_argument("--what", required=True,
                      choices=["dot-category", "dot-eggbox", "table", "phi-matrix"])
    p_ex.add_argument("--out", help="output path (stdout when omitted)")
    p_ex.set_defaults(func=cmd_export)

    p_ve = sub.add_parser("verify", help="run a verification suite")
    p_ve.add_argument("--suite", required=True, choices=["paper", "corpus"])
    p_ve.add_argument("--only", help="comma-separated criterion names (paper suite)")
    p_ve.add_argument("--max-order", type=int, default=None,
                      help="corpus instance order cap")
    p_ve.add_argument("--budget", type=int, default=None,
                      help="candidate-map budget for hom-set enumeration")
    p_ve.add_argument("--jobs", type=int, default=1,
                      help="parallel workers for the corpus sweep")
    p_ve.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidE) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # surfaced with a clean message, still exit 2
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
