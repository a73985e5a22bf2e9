"""Command-line front end.

Exit codes: 0 ok, 1 unstable with --fail-on-unstable, 2 usage error,
3 cap/budget exceeded, 4 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import cayley, cliques, constructions, stability
from .catalog import build_group, enumerable_catalog, finite_catalog, parse_elements
from .errors import BudgetExceeded, InputError, LimitExceeded
from .groups import INFINITE, involutions, squares_set

EXIT_OK, EXIT_UNSTABLE, EXIT_USAGE, EXIT_LIMIT, EXIT_INPUT = 0, 1, 2, 3, 4


class _Unstable(Exception):
    pass


def _order_json(k):
    return "infinite" if k == INFINITE else k


def _finite(G, what):
    if not G.is_finite:
        raise InputError(f"{what} needs a finite group, got {G.label}")
    return G


def _subset(G, text, what="--subset"):
    if not text:
        raise InputError(f"{what} is required")
    return parse_elements(G, text)


def _write_dot(args, graph, name):
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(name), encoding="utf-8")


def cmd_group_info(args):
    G = build_group(args.group)
    if G.is_finite:
        return {
            "group": G.label,
            "finite": True,
            "order": G.order,
            "abelian": G.is_abelian(),
            "elements": list(G.names),
            "element_orders": [G.order_of(a) for a in G.elements()],
            "involutions": sorted(G.name(x) for x in involutions(G)),
            "squares": sorted(G.name(x) for x in squares_set(G)),
        }
    return {
        "group": G.label,
        "finite": False,
        "prefix": [{"element": G.format(g), "order": _order_json(G.order_of(g))} for g in G.prefix(args.prefix)],
    }


def cmd_sindex(args):
    G = _finite(build_group(args.group), "sindex")
    A = _subset(G, args.subset)
    rep = stability.s_indices(G, A, cap=args.cap, workers=args.threads)
    _write_dot(args, cayley.cayley_graph(G, cayley.boundary_set(G, A)), G.name)
    if not rep.stable and args.fail_on_unstable:
        args._unstable = True
    return {"group": G.label, "subset": [G.name(a) for a in A], **rep.to_json(G)}


def cmd_stable_subset(args):
    G = _finite(build_group(args.group), "stable-subset")
    A = _subset(G, args.subset)
    normalized = stability.normalize_subset(G, A)
    stable = stability.is_stable_subset(G, A, cap=args.cap)
    if not stable and args.fail_on_unstable:
        args._unstable = True
    return {
        "group": G.label,
        "subset": [G.name(a) for a in A],
        "normalized": [G.name(a) for a in normalized],
        "stable": stable,
    }


def _stability_report(args, G):
    try:
        rep = stability.scan_group_stability(G, budget=args.budget, workers=args.threads, cap=args.cap)
    except BudgetExceeded as exc:
        rep = exc.report
        args._limit = True
    if args.deterministic:
        rep.elapsed_ms = 0
    if rep.verdict == stability.Verdict.UNSTABLE and args.fail_on_unstable:
        args._unstable = True
    return rep.to_json(G)


def cmd_stable_group(args):
    G = _finite(build_group(args.group), "stable-group")
    return _stability_report(args, G)


def cmd_scan(args):
    results = []
    for _, G in finite_catalog(args.max_order):
        if G.order >= args.min_order:
            results.append(_stability_report(args, G))
    return {"results": results}


def cmd_delta(args):
    G = build_group(args.group)
    if args.F is not None:
        F = cayley.SymSet.of(G, parse_elements(G, args.F), keep_order=True)
    else:
        F = cayley.complement_set(_finite(G, "delta --subset"), _subset(G, args.subset))
    graph = cayley.delta_graph(G, F)
    rep = cliques.extremal_clique_numbers(graph, cap=args.cap, workers=args.threads)
    _write_dot(args, graph, G.format)
    label = lambda v: G.format(graph.labels[v])  # noqa: E731
    return {
        "group": G.label,
        "F": [G.format(x) for x in F.elements],
        "graph": graph.to_json(G.format),
        "report": rep.to_json(label),
    }


def cmd_witness(args):
    G = build_group(args.group)
    case = args.case
    if case == "auto":
        w = constructions.case_analysis(G, prefix=args.prefix)
    elif case == "infinite-cyclic":
        s = G.parse_element(args.s) if args.s else next(g for g in G.prefix(args.prefix) if G.order_of(g) == INFINITE)
        w = constructions.witness_infinite_cyclic(G, s, args.n, args.m)
    else:
        if not args.H or not args.f:
            raise InputError(f"--H and --f are required for case {case}")
        from .groups import generated_subgroup

        H = generated_subgroup(G, parse_elements(G, args.H))
        f = G.parse_element(args.f)
        build = {
            "involution": constructions.witness_involution,
            "noncube": constructions.witness_noncube,
            "cube": constructions.witness_cube,
        }[case]
        w = build(G, H, f)
    _write_dot(args, w.delta, G.format)
    return w.to_json()


def cmd_construct(args):
    G = build_group(args.group)
    F = parse_elements(G, args.F or "")
    state = constructions.greedy_construct_A(G, F, args.steps, skip_covered=args.skip_covered, check_each_step=True)
    return state.to_json()


def _bridge(max_order, cap):
    """omega(Delta(F)) = alpha - 1 and iota(Delta(F)) = i - 1 for every A containing e."""
    import itertools

    groups = checked = 0
    ok = True
    for _, G in finite_catalog(max_order):
        groups += 1
        for k in range(0, G.order):
            for rest in itertools.combinations(range(1, G.order), k):
                A = (0,) + rest
                gamma = cayley.cayley_graph(G, cayley.boundary_set(G, A))
                ind = cliques.extremal_independent_numbers(gamma, cap=cap)
                dl = cliques.extremal_clique_numbers(cayley.delta_graph(G, cayley.complement_set(G, A)), cap=cap)
                ok &= dl.max_size == ind.max_size - 1 and dl.min_maximal_size == ind.min_maximal_size - 1
                checked += 1
    return {"groups": groups, "subsets": checked, "status": "PASS" if ok else "FAIL"}


def cmd_verify_lemmas(args):
    o32 = constructions.verify_order32_lemma()
    o32["status"] = "PASS" if o32["holds"] else "FAIL"
    quotients = []
    for text, H_names in (("quaternion:8", ["e", "a^2"]), ("dihedral:4", ["e", "a^2"])):
        G = build_group(text)
        H = [G.parse_element(x) for x in H_names]
        outcome = constructions.verify_exponent2_quotient(G, H)
        quotients.append({"group": text, "H": H_names, "outcome": outcome.value})
    q_ok = all(q["outcome"] == "VERIFIED" for q in quotients)
    witnesses = []
    for text, _ in enumerable_catalog():
        w = constructions.case_analysis(build_group(text), prefix=args.prefix)
        witnesses.append({**w.to_json(), "status": "PASS" if w.iota < w.omega else "FAIL"})
    bridge = _bridge(args.max_order, args.cap)
    all_pass = (
        o32["status"] == "PASS"
        and q_ok
        and bridge["status"] == "PASS"
        and all(w["status"] == "PASS" for w in witnesses)
    )
    return {
        "order32": o32,
        "exponent2_quotient": {"checks": quotients, "status": "PASS" if q_ok else "FAIL"},
        "delta_bridge": bridge,
        "witnesses": witnesses,
        "all_pass": all_pass,
    }


def cmd_cross_validate(args):
    import itertools

    G = _finite(build_group(args.group), "cross-validate")
    if args.subset:
        subsets = [tuple(_subset(G, args.subset))]
    else:
        subsets = [(0,) + r for k in range(G.order) for r in itertools.combinations(range(1, G.order), k)]
    mismatches = [A for A in subsets if not stability.cross_validate_correspondence(G, A)]
    return {
        "group": G.label,
        "checked": len(subsets),
        "agree": not mismatches,
        "mismatches": [[G.name(a) for a in A] for A in mismatches],
    }


COMMANDS = {
    "group-info": cmd_group_info,
    "sindex": cmd_sindex,
    "stable-subset": cmd_stable_subset,
    "stable-group": cmd_stable_group,
    "scan": cmd_scan,
    "delta": cmd_delta,
    "witness": cmd_witness,
    "construct": cmd_construct,
    "verify-lemmas": cmd_verify_lemmas,
    "cross-validate": cmd_cross_validate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--dot", metavar="PATH", help="write the relevant graph in DOT format")
    common.add_argument("--cap", type=int, default=cliques.DEFAULT_CAP, help="maximal-set enumeration cap")
    common.add_argument("--budget", type=int, default=None, help="subset budget for stability scans")
    common.add_argument("--steps", type=int, default=40, help="greedy construction steps")
    common.add_argument("--prefix", type=int, default=512, help="enumeration prefix for infinite groups")
    common.add_argument("--fail-on-unstable", action="store_true")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--deterministic", action="store_true", help="single worker, zeroed timings")

    parser = argparse.ArgumentParser(prog="sfactors", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, group=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if group:
            p.add_argument("--group", "--family", dest="group", required=True, help="group descriptor, e.g. cyclic:8")
        return p

    add("group-info", "describe a group")
    add("sindex", "lower/upper s-index of a subset").add_argument("--subset")
    add("stable-subset", "is a subset stable").add_argument("--subset")
    add("stable-group", "scan all subsets of a finite group")
    p = add("scan", "stability scan over the finite catalog", group=False)
    p.add_argument("--max-order", type=int, default=12)
    p.add_argument("--min-order", type=int, default=1)
    p = add("delta", "the graph Delta(F) and its clique numbers")
    p.add_argument("--F", help="symmetric set F (comma separated)")
    p.add_argument("--subset", help="A; F is then G minus A^-1 A")
    p = add("witness", "build a witness configuration F")
    p.add_argument("--case", choices=("auto", "involution", "noncube", "cube", "infinite-cyclic"), default="auto")
    p.add_argument("--H", help="generators of the finite subgroup H")
    p.add_argument("--f", help="the element f")
    p.add_argument("--s", help="element of infinite order")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=7)
    p = add("construct", "greedy construction of A with A^-1 A = G - F")
    p.add_argument("--F", help="symmetric set F (comma separated)")
    p.add_argument("--skip-covered", action="store_true")
    add("verify-lemmas", "run the built-in lemma checks", group=False).add_argument(
        "--max-order", type=int, default=8, help="largest catalog order for the Delta bridge check"
    )
    add("cross-validate", "s-factors by definition vs maximal independent sets").add_argument("--subset")
    return parser


def _text(doc, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in doc.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines += _text(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines += _text(item, indent + 1)
                lines.append("")
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: {', '.join(str(v) for v in val)}")
        else:
            lines.append(f"{pad}{key}: {val}")
    return lines


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.deterministic:
        args.threads = 1
    args._unstable = False
    args._limit = False
    try:
        doc = COMMANDS[args.command](args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(_text(doc)))
    if args._limit:
        return EXIT_LIMIT
    if args._unstable:
        return EXIT_UNSTABLE
    return EXIT_OK


def main():  # pragma: no cover
    sys.exit(run())
