"""Command-line front end.

Subcommands: group, monoid, defect-table, egf, normal-form, invariants,
verify.  Output is deterministic: two runs with the same configuration
produce byte-identical JSON (timings are therefore printed only in text
mode).  Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import __version__
from .algebra import (
    QuandleSolution,
    make_dihedral_group,
    make_symmetric_group,
    dihedral_reflections,
    symmetric_transpositions,
    reflection_solution,
    transposition_solution,
)
from .group_growth import (
    as_full_conjugation_gf,
    as_reflections_group_gf,
    as_transpositions_group_gf,
    defect_series,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_STATE_BUDGET,
    DEFAULT_WORD_BUDGET,
    conjugation_ball_series,
    monoid_orbit_enumerate,
)
from .reflection_monoid import (
    ReflectionWord,
    invariants,
    monoid_growth_reflections,
    normal_form,
)
from .series import RationalGF, expand_rational
from .transposition_monoid import (
    egf_column,
    egf_transposition_monoids,
    monoid_growth_transpositions,
)
from .verification import run_criteria

GROUP_FAMILIES = ("transpositions", "permutations", "reflections", "dihedral")
MONOID_FAMILIES = ("transpositions", "reflections", "custom-json")


class UsageError(Exception):
    pass


def _budget(args, default: int = DEFAULT_STATE_BUDGET) -> int:
    if args.budget_states is not None:
        return args.budget_states
    env = os.environ.get("YBE_GROWTH_BUDGET")
    if env:
        return int(env)
    return default


def _base_report(args, command: str) -> dict:
    config = {
        "command": command,
        "threads": args.threads,
        "seed": args.seed,
    }
    for key in ("solution", "d", "order", "closed_form", "verify"):
        if hasattr(args, key):
            config[key] = getattr(args, key)
    return {"version": __version__, "config": config}


def _emit(report: dict, args, csv_rows=None, text_lines=None) -> None:
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    elif args.format == "csv" and csv_rows is not None:
        out = io.StringIO()
        writer = csv.writer(out)
        for row in csv_rows:
            writer.writerow(row)
        sys.stdout.write(out.getvalue())
    else:
        for line in text_lines or [json.dumps(report, indent=2, sort_keys=True)]:
            print(line)


def _gf_json(gf: RationalGF) -> dict:
    return gf.to_json()


def cmd_group(args) -> int:
    family, d, order = args.solution, args.d, args.order
    report = _base_report(args, "group")
    text = [f"growth series of the structure group ({family}, d={d})"]
    closed = None
    oracle = None
    if family == "transpositions":
        if d < 2:
            raise UsageError("transpositions need d >= 2")
        closed = as_transpositions_group_gf(d)
        expansion = expand_rational(closed, order)
        if args.verify:
            group = make_symmetric_group(d)
            oracle = conjugation_ball_series(
                group, symmetric_transpositions(group), order, _budget(args)
            )
    elif family == "reflections":
        if d < 2:
            raise UsageError("reflections need d >= 2")
        closed = as_reflections_group_gf(d)
        expansion = expand_rational(closed, order)
        if args.verify:
            group = make_dihedral_group(d)
            oracle = conjugation_ball_series(
                group, dihedral_reflections(group), order, _budget(args)
            )
    else:
        if family == "permutations":
            if not 1 <= d <= 7:
                raise UsageError("permutations supported for 1 <= d <= 7")
            group = make_symmetric_group(d)
        else:
            group = make_dihedral_group(d)
        result = as_full_conjugation_gf(group, order)
        closed = result.closed_form
        expansion = result.truncated
        report["defect"] = {
            "classification": result.defect.classification,
            "series": result.defect.truncated.to_json(),
        }
        if result.defect.closed_form is not None:
            report["defect"]["closed_form"] = _gf_json(result.defect.closed_form)
        if result.defect.diagnostic:
            report["defect"]["diagnostic"] = result.defect.diagnostic
            text.append(f"warning: {result.defect.diagnostic}")
        if args.verify:
            nontrivial = [x for x in group.elements() if x != 0]
            part = conjugation_ball_series(group, nontrivial, order, _budget(args))
            z = [1] + [2] * order
            oracle = [sum(z[k] * part[n - k] for k in range(n + 1)) for n in range(order + 1)]
    coeffs = expansion.integer_coefficients()
    report["expansion"] = {"order": order, "coefficients": coeffs}
    text.append(f"coefficients (orders 0..{order}): {coeffs}")
    if closed is not None and args.closed_form:
        report["closed_form"] = _gf_json(closed)
        text.append(f"closed form: {closed!r}")
    exit_code = 0
    if args.verify:
        if oracle is None:
            raise UsageError("no oracle available for this family")
        verdict = list(oracle) == coeffs
        report["oracle"] = {"spheres": list(oracle), "passed": verdict}
        text.append(f"oracle spheres: {list(oracle)} -> {'PASS' if verdict else 'FAIL'}")
        if not verdict:
            exit_code = 1
    _emit(report, args, text_lines=text)
    return exit_code


def cmd_monoid(args) -> int:
    family, d, order = args.solution, args.d, args.order
    report = _base_report(args, "monoid")
    text = [f"growth series of the structure monoid ({family}, d={d})"]
    closed = None
    if family == "transpositions":
        closed = monoid_growth_transpositions(d)
        coeffs = expand_rational(closed, order).integer_coefficients()
        sol = transposition_solution(d)
    elif family == "reflections":
        closed = monoid_growth_reflections(d)
        coeffs = expand_rational(closed, order).integer_coefficients()
        sol = reflection_solution(d)
    else:
        if not args.input:
            raise UsageError("custom-json needs --input pointing at an operation table")
        with open(args.input, "r", encoding="utf-8") as fh:
            sol = QuandleSolution.from_json(json.load(fh))
        coeffs = None
        report["note"] = "no closed form for custom solutions; oracle counts only"
        text.append("no closed form for custom solutions; oracle counts only")
    exit_code = 0
    if coeffs is not None:
        report["expansion"] = {"order": order, "coefficients": coeffs}
        text.append(f"coefficients (orders 0..{order}): {coeffs}")
        if args.closed_form and closed is not None:
            report["closed_form"] = _gf_json(closed)
            text.append(f"closed form: {closed!r}")
    if args.verify or coeffs is None:
        enum = monoid_orbit_enumerate(sol, order, _budget(args, DEFAULT_WORD_BUDGET))
        counts = enum.counts
        report["oracle"] = {
            "counts": counts,
            "enumerated_to": enum.max_length,
            "truncated": enum.truncated,
        }
        text.append(f"oracle orbit counts: {counts}")
        if enum.truncated:
            text.append(f"oracle truncated at length {enum.max_length} (budget)")
        if coeffs is not None:
            verdict = counts == coeffs[: enum.max_length + 1]
            report["oracle"]["passed"] = verdict
            text.append(f"oracle comparison: {'PASS' if verdict else 'FAIL'}")
            if not verdict:
                exit_code = 1
    _emit(report, args, text_lines=text)
    return exit_code


def cmd_defect_table(args) -> int:
    family, d, order = args.solution, args.d, args.order
    if family == "permutations":
        if not 1 <= d <= 7:
            raise UsageError("permutations supported for 1 <= d <= 7")
        group = make_symmetric_group(d)
    elif family == "dihedral":
        group = make_dihedral_group(d)
    else:
        raise UsageError("defect-table supports permutations or dihedral")
    dec = group.conjugacy_classes()
    from .algebra import class_product_table

    table = class_product_table(group, dec)
    from .group_growth import DEFAULT_DEFECT_BUDGET

    result = defect_series(group, order, _budget(args, DEFAULT_DEFECT_BUDGET))
    report = _base_report(args, "defect-table")
    classes = [
        {"index": i, "size": len(c), "members": [group.label(x) for x in c]}
        for i, c in enumerate(dec.classes)
    ]
    mult_table = [
        [sorted(j for j in range(dec.count) if table[a][b] >> j & 1) for b in range(dec.count)]
        for a in range(dec.count)
    ]
    report["classes"] = classes
    report["class_product_table"] = mult_table
    report["defect_series"] = {
        "classification": result.classification,
        "series": result.truncated.to_json(),
    }
    if result.closed_form is not None:
        report["defect_series"]["closed_form"] = _gf_json(result.closed_form)
        if result.polynomial_part is not None:
            report["defect_series"]["polynomial_part"] = result.polynomial_part.to_json()
        if result.tail_numerator is not None:
            report["defect_series"]["geometric_tails_over_1_minus_t2"] = (
                result.tail_numerator.to_json()
            )
    if result.diagnostic:
        report["defect_series"]["diagnostic"] = result.diagnostic
    nonzero = _nonzero_defects(group, dec, table, order)
    report["nonzero_defects"] = nonzero
    csv_rows = [["kbar", "product_size", "defect"]] + [
        [" ".join(map(str, row["kbar"])), row["product_size"], row["defect"]] for row in nonzero
    ]
    text = [f"conjugacy classes of {group.name}:"]
    for c in classes:
        text.append(f"  C_{c['index']} (size {c['size']}): {' '.join(c['members'])}")
    text.append("class product table (indices of classes in C_i * C_j):")
    for i, row in enumerate(mult_table):
        text.append(f"  {i}: " + "  ".join(",".join(map(str, cell)) for cell in row))
    text.append(f"defect series [{result.classification}]: {result.truncated.integer_coefficients()}")
    text.append(f"nonzero defects up to |kbar| = {order}: {len(nonzero)} entries")
    _emit(report, args, csv_rows=csv_rows, text_lines=text)
    return 0


def _nonzero_defects(group, dec, table, order) -> list[dict]:
    from .group_growth import defect_measure

    out = []

    def rec(i: int, kbar: list[int], used: int):
        if i == dec.count:
            record = defect_measure(group, dec, table, kbar)
            if record.defect:
                out.append(
                    {
                        "kbar": list(record.exponents),
                        "product_size": record.product_size,
                        "defect": record.defect,
                    }
                )
            return
        for k in range(order - used + 1):
            rec(i + 1, kbar + [k], used + k)

    rec(1, [], 0)
    out.sort(key=lambda row: (sum(row["kbar"]), row["kbar"]))
    return out


def cmd_egf(args) -> int:
    order_t, order_x = args.order, args.order_x
    egf = egf_transposition_monoids(order_t, order_x)
    report = _base_report(args, "egf")
    report["config"]["order_x"] = order_x
    rows = []
    all_ok = True
    for d in range(order_x + 1):
        series = egf_column(egf, d)
        coeffs = series.integer_coefficients()
        entry = {"d": d, "coefficients": coeffs}
        if d <= 12:
            direct = expand_rational(monoid_growth_transpositions(d), order_t)
            entry["matches_direct_formula"] = series == direct
            all_ok &= entry["matches_direct_formula"]
        rows.append(entry)
    report["columns"] = rows
    report["cross_check_passed"] = all_ok
    text = [f"EGF columns d! [x^d] through t^{order_t}:"]
    for entry in rows:
        text.append(f"  d={entry['d']}: {entry['coefficients']}")
    text.append(f"cross-check against per-d formulas: {'PASS' if all_ok else 'FAIL'}")
    _emit(report, args, text_lines=text)
    return 0 if all_ok else 1


def _parse_word(args) -> ReflectionWord:
    if args.word is None:
        raise UsageError("need --word with comma-separated letters")
    letters = [int(x) for x in str(args.word).split(",") if x.strip() != ""]
    if args.infinite:
        return ReflectionWord(tuple(letters), None)
    if args.d is None:
        raise UsageError("need --d (or --infinite) for reflection words")
    return ReflectionWord(tuple(a % args.d for a in letters), args.d)


def cmd_normal_form(args) -> int:
    word = _parse_word(args)
    nf = normal_form(word)
    inv = invariants(word)
    report = _base_report(args, "normal-form")
    report["word"] = str(word)
    report["invariants"] = _invariants_json(inv)
    report["normal_form"] = {"shape": nf.shape, "word": str(nf.word)}
    text = [
        f"word: {word}",
        f"invariants: {_invariants_text(inv)}",
        f"normal form [{nf.shape}]: {nf.word}",
    ]
    _emit(report, args, text_lines=text)
    return 0


def cmd_invariants(args) -> int:
    word = _parse_word(args)
    inv = invariants(word)
    report = _base_report(args, "invariants")
    report["word"] = str(word)
    report["invariants"] = _invariants_json(inv)
    _emit(report, args, text_lines=[f"word: {word}", f"invariants: {_invariants_text(inv)}"])
    return 0


def _invariants_json(inv) -> dict:
    return {
        "modulus": inv.modulus,
        "weight": inv.weight,
        "density": inv.density,
        "anchor": inv.anchor,
        "essential_even_length": inv.essential_even,
        "essential_odd_length": inv.essential_odd,
        "length": inv.length,
    }


def _invariants_text(inv) -> str:
    return (
        f"weight={inv.weight} density={inv.density} anchor={inv.anchor} "
        f"essential lengths=({inv.essential_even},{inv.essential_odd}) length={inv.length}"
    )


def cmd_verify(args) -> int:
    ids = args.criteria.split(",") if args.criteria else None
    t0 = time.monotonic()
    results = run_criteria(ids, seed=args.seed)
    elapsed = time.monotonic() - t0
    report = _base_report(args, "verify")
    report["criteria"] = [r.to_json() for r in results]
    gating_failures = [r.cid for r in results if r.gating and not r.passed]
    report["passed"] = not gating_failures
    text = []
    for r in results:
        tag = "PASS" if r.passed else ("FAIL" if r.gating else "fail (non-gating)")
        text.append(f"[{tag}] criterion {r.cid}: {r.name}")
    text.append(f"overall: {'PASS' if not gating_failures else 'FAIL'} ({elapsed:.1f}s)")
    _emit(report, args, text_lines=text)
    return 0 if not gating_failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybe-growth",
        description=(
            "Growth series of structure groups and monoids of conjugation-quandle "
            "Yang-Baxter solutions, with brute-force verification."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--budget-states", type=int, default=None, help="state budget override")
    common.add_argument("--threads", type=int, default=1, help="maximum worker count")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized property checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[common], help="structure-group growth series")
    p.add_argument("--solution", choices=GROUP_FAMILIES, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--verify", action="store_true", help="compare against the ball oracle")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("monoid", parents=[common], help="structure-monoid growth series")
    p.add_argument("--solution", choices=MONOID_FAMILIES, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--input", help="JSON operation table for custom-json")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--verify", action="store_true", help="compare against the orbit oracle")
    p.set_defaults(fn=cmd_monoid)

    p = sub.add_parser("defect-table", parents=[common], help="conjugacy-class products and defects")
    p.add_argument("--solution", choices=("permutations", "dihedral"), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, default=6, help="max |kbar| for the defect listing")
    p.set_defaults(fn=cmd_defect_table)

    p = sub.add_parser("egf", parents=[common], help="bivariate EGF of transposition monoids")
    p.add_argument("--order", type=int, default=8, help="truncation order in t")
    p.add_argument("--order-x", type=int, default=4, help="truncation order in x")
    p.set_defaults(fn=cmd_egf)

    p = sub.add_parser("normal-form", parents=[common], help="canonical form of a reflection word")
    p.add_argument("--word", required=True, help="comma-separated letters")
    p.add_argument("--d", type=int)
    p.add_argument("--infinite", action="store_true")
    p.set_defaults(fn=cmd_normal_form)

    p = sub.add_parser("invariants", parents=[common], help="invariants of a reflection word")
    p.add_argument("--word", required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--infinite", action="store_true")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance matrix")
    p.add_argument("--criteria", help="comma-separated criterion ids (default: all)")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
