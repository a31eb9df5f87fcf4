"""Command-line interface: expansions, class listings, verify suites.

Exit codes: 0 on success, 1 on usage or validation errors, 2 when a
mathematical cross-check disagrees.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from .chromatic import (
    CrossCheckError,
    asc_des_symmetry_check,
    chromatic_sym,
    closed_form_two_column,
    coeff_e_hook,
    coeff_e_two_column,
    coloring_qsym,
    expansion,
    positivity_report,
    sink_sum,
)
from .heaps import enumerate_classes, enumerate_heaps
from .ncsf import hp_recurrence_check, nc_e, nc_h, nc_p, nc_s
from .partitions import partitions, revlex_sorted
from .posets import UnitIntervalOrder
from .qpoly import QPoly
from .render import heap_svg

DEFAULT_SIZE_LIMIT = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="chromheap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_mu=True):
        p.add_argument("--poset", help="bound sequence, e.g. 2,4,5,5,5")
        if need_mu:
            p.add_argument("--mu", help="type vector, e.g. 1,1,2")
        p.add_argument(
            "--format", choices=["json", "csv", "pretty"], default="pretty"
        )
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument(
            "--max-n",
            type=int,
            default=None,
            help="verify: largest n to sweep; otherwise overrides the "
            f"total-size guardrail (default {DEFAULT_SIZE_LIMIT})",
        )

    p_expand = sub.add_parser("expand", help="basis expansion of the chromatic function")
    common(p_expand)
    p_expand.add_argument("--basis", choices=list("fpsemh"), default="e")
    p_expand.add_argument("--colors", type=int, help="color supply for the oracle")

    p_classes = sub.add_parser("classes", help="heaps and flip-equivalence classes")
    common(p_classes)
    p_classes.add_argument("--svg", help="directory for per-heap SVG diagrams")

    p_verify = sub.add_parser("verify", help="run verification suites")
    common(p_verify)
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=[
            "oracle",
            "commutation",
            "p-equiv",
            "s-equiv",
            "sinks",
            "two-column",
            "hook",
            "hp-recurrence",
            "positivity",
            "all",
        ],
    )
    p_verify.add_argument("--colors", type=int)
    return parser


def _parse_instance(args, require_poset=True):
    if args.poset is None:
        if require_poset:
            raise UsageError("--poset is required")
        return None, None
    order = UnitIntervalOrder.from_text(args.poset)
    mu_text = getattr(args, "mu", None)
    if mu_text:
        mu = tuple(int(x) for x in mu_text.split(","))
        if len(mu) != order.n:
            raise UsageError("--mu length must match the poset size")
        if any(x < 0 for x in mu) or sum(mu) == 0:
            raise UsageError("--mu entries must be nonnegative, not all zero")
    else:
        mu = (1,) * order.n
    limit = args.max_n if args.max_n is not None else DEFAULT_SIZE_LIMIT
    if sum(mu) > limit:
        raise UsageError(
            f"total size {sum(mu)} exceeds the guardrail {limit}; "
            "pass --max-n to raise it"
        )
    return order, mu


def _write(args, text: str):
    out = args.out
    if out is None:
        out_dir = os.environ.get("CHROMHEAP_OUT")
        if out_dir:
            os.makedirs(out_dir, exist_ok=True)
            out = os.path.join(out_dir, f"{args.command}.{args.format}")
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_expand(args) -> int:
    order, mu = _parse_instance(args)
    report = expansion(order, mu, args.basis)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "csv":
        parts = revlex_sorted(report.coefficients)
        width = max((c.degree for c in report.coefficients.values()), default=0) + 1
        lines = ["partition," + ",".join(f"q^{k}" for k in range(width))]
        for lam in parts:
            c = report.coefficients[lam]
            row = ["+".join(map(str, lam))]
            row += [str(c.coeff(k)) for k in range(width)]
            lines.append(",".join(row))
        text = "\n".join(lines) + "\n"
    else:
        lines = [
            f"poset {order.text()}  mu {','.join(map(str, mu))}  "
            f"basis {args.basis}  positive={report.positive}"
        ]
        for lam in revlex_sorted(report.coefficients):
            c = report.coefficients[lam]
            lines.append(
                f"  {str(list(lam)):<16} {c.pretty():<30} [{report.provenance[lam]}]"
            )
        text = "\n".join(lines) + "\n"
    _write(args, text)
    return 0


def cmd_classes(args) -> int:
    order, mu = _parse_instance(args)
    d = sum(mu)
    words = factorial(d)
    for x in mu:
        words //= factorial(x)
    heaps = enumerate_heaps(order, mu)
    classes = enumerate_classes(order, mu)
    if args.svg:
        os.makedirs(args.svg, exist_ok=True)
        index = []
        for ci, cls in enumerate(classes):
            entry = {"class": ci, "ascents": cls.ascents, "heaps": []}
            for h in cls.heaps:
                name = "heap_" + "".join(map(str, h.canonical_word)) + ".svg"
                with open(os.path.join(args.svg, name), "w") as f:
                    f.write(heap_svg(h))
                entry["heaps"].append(name)
            index.append(entry)
        with open(os.path.join(args.svg, "classes.json"), "w") as f:
            json.dump(index, f, indent=2)
    summary = f"words={words} heaps={len(heaps)} classes={len(classes)}"
    if args.format == "json":
        data = {
            "poset": order.text(),
            "mu": list(mu),
            "words": words,
            "heaps": len(heaps),
            "classes": [
                {
                    "representative": "".join(map(str, c.representative)),
                    "size": len(c),
                    "ascents": c.ascents,
                    "members": ["".join(map(str, h.canonical_word)) for h in c.heaps],
                }
                for c in classes
            ],
        }
        text = json.dumps(data, indent=2) + "\n"
    else:
        lines = [summary]
        for c in classes:
            members = " ".join("".join(map(str, h.canonical_word)) for h in c.heaps)
            lines.append(f"  asc={c.ascents} [{members}]")
        text = "\n".join(lines) + "\n"
    _write(args, text)
    return 0


# ---------------------------------------------------------------------------
# verify suites


def _suite_oracle(order, mu, colors=None):
    x_words = chromatic_sym(order, mu)
    x_oracle = coloring_qsym(order, mu, colors).to_symmetric()
    yield "oracle-vs-words", x_words == x_oracle
    yield "asc-vs-des", asc_des_symmetry_check(order, mu, colors)


def _suite_commutation(order, mu, colors=None):
    h = order.height
    for k in range(1, h + 1):
        for l in range(k, h + 1):
            ok = nc_e(order, k) * nc_e(order, l) == nc_e(order, l) * nc_e(order, k)
            yield f"e{k}-e{l}-commute", ok
    for k in range(1, min(sum(mu), 6) + 1):
        yield f"h{k}-relation", nc_h(order, k) == nc_h(order, k, "relation")


def _suite_p_equiv(order, mu, colors=None):
    for k in range(1, min(sum(mu), 6) + 1):
        yield f"p{k}-words-vs-relation", nc_p(order, k) == nc_p(order, k, "relation")


def _suite_s_equiv(order, mu, colors=None):
    for d in range(1, min(sum(mu), 4) + 1):
        for lam in partitions(d):
            ok = nc_s(order, lam) == nc_s(order, lam, "jacobi_trudi")
            yield f"s{list(lam)}-tableaux-vs-jt", ok


def _run_checked(label, fn):
    try:
        fn()
        return label, True
    except CrossCheckError:
        return label, False


def _suite_sinks(order, mu, colors=None):
    for k in range(1, sum(mu) + 1):
        yield _run_checked(f"sinks-k{k}", lambda k=k: sink_sum(order, mu, k))


def _suite_two_column(order, mu, colors=None):
    d = sum(mu)
    for l in range(0, d // 2 + 1):
        k = d - l
        if k >= l:
            yield _run_checked(
                f"two-column-k{k}-l{l}",
                lambda k=k, l=l: coeff_e_two_column(order, mu, k, l),
            )
    triangle_free = not any(
        order.m[i - 1] >= i + 2 for i in range(1, order.n - 1)
    )
    if mu == (1,) * order.n and triangle_free:
        report = expansion(order, mu, "e")
        ok = True
        for lam in partitions(d):
            if any(p > 2 for p in lam):
                continue
            want = closed_form_two_column(order, lam)
            got = report.coefficients.get(lam, QPoly())
            if got != want or not got.is_unimodal():
                ok = False
        yield "two-column-closed-form", ok


def _suite_hook(order, mu, colors=None):
    d = sum(mu)
    for l in range(1, d - 1):
        a = d - l - 1
        if a >= 1:
            yield _run_checked(
                f"hook-a{a}-l{l}", lambda a=a, l=l: coeff_e_hook(order, mu, a, l)
            )


def _suite_hp(order, mu, colors=None):
    h = order.height
    found = False
    for d in range(h, min(sum(mu), 6) + 1):
        for lam in partitions(d):
            if len(lam) >= h:
                found = True
                yield f"hp-{list(lam)}", hp_recurrence_check(order, lam)
    if not found:
        yield "hp-no-applicable-shape", True


def _suite_positivity(order, mu, colors=None):
    report = positivity_report(order, mu)
    yield "classes-h-positive", report["all_classes_h_positive"]
    yield "x-e-positive", report["e_positive"]


SUITES = {
    "oracle": _suite_oracle,
    "commutation": _suite_commutation,
    "p-equiv": _suite_p_equiv,
    "s-equiv": _suite_s_equiv,
    "sinks": _suite_sinks,
    "two-column": _suite_two_column,
    "hook": _suite_hook,
    "hp-recurrence": _suite_hp,
    "positivity": _suite_positivity,
}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.poset is not None:
        order, mu = _parse_instance(args)
        instances = [(order, mu)]
    else:
        max_n = args.max_n if args.max_n is not None else 4
        instances = [
            (order, (1,) * order.n)
            for n in range(1, max_n + 1)
            for order in UnitIntervalOrder.all_orders(n)
        ]
    lines = []
    failed = False
    for order, mu in instances:
        tag = f"{order.text()}/{','.join(map(str, mu))}"
        for name in names:
            for label, ok in SUITES[name](order, mu, args.colors):
                lines.append(f"{'PASS' if ok else 'FAIL'} {tag} {name}:{label}")
                failed = failed or not ok
    text = "\n".join(lines) + "\n"
    _write(args, text)
    return 2 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "expand":
            return cmd_expand(args)
        if args.command == "classes":
            return cmd_classes(args)
        return cmd_verify(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
