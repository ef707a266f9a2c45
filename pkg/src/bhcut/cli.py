"""Command-line front end.

Subcommands: gen (graph export), props (structural property suite),
solve (connectivity search), verify (upper-bound construction
certificates), oracle (brute-force vs quotient cross-checks), sweep
(CSV over a parameter grid).

Exit codes: 0 success, 1 check failure or bad usage, 3 budget refusal.
The default output directory can be set via BHCUT_OUT_DIR.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import analysis, constructions, solver, topology

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 3

SWEEP_COLUMNS = [
    "n", "kind", "param", "value", "witness_size", "verdict",
    "subsets_examined", "elapsed_ms",
]


def _out_path(path: str | None) -> str | None:
    if path is None:
        return None
    if os.path.isabs(path):
        return path
    return os.path.join(os.environ.get("BHCUT_OUT_DIR", "."), path)


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    g = topology.build_direct(args.n)
    if args.method in ("recursive", "both") or args.check_recursive:
        rec = topology.build_recursive(args.n)
        if rec.adj != g.adj:
            print("generator mismatch between direct and recursive builds",
                  file=sys.stderr)
            return EXIT_FAIL
        if args.method == "recursive":
            g = rec
    text = topology.graph_json(g) if args.format == "json" \
        else topology.adjacency_text(g)
    _emit(text, _out_path(args.out))
    return EXIT_OK


def _property_suite(n: int) -> list[tuple[str, bool, str]]:
    g = topology.build_direct(n)
    results = []
    deg_ok = all(len(a) == 2 * n for a in g.adj)
    results.append(("regularity", deg_ok,
                    f"all {g.num_vertices} vertices have degree {2 * n}"))
    results.append(("edge_count", len(g.edges()) == n * 4**n,
                    f"{len(g.edges())} edges (expect {n * 4**n})"))
    try:
        v0, v1 = topology.bipartition(g)
        bip_ok = len(v0) == len(v1) == 4**n // 2
        detail = f"|V0|={len(v0)} |V1|={len(v1)}, no monochromatic edge"
    except topology.ConfigurationError as exc:
        bip_ok, detail = False, str(exc)
    results.append(("bipartite", bip_ok, detail))
    partner_ok = all(
        set(g.adj[i]) == set(g.adj[g.partner_index(i)])
        for i in range(g.num_vertices)
    )
    results.append(("partner_neighborhoods", partner_ok,
                    f"N(v)=N(v') for all {g.num_vertices} vertices"))
    if n >= 2:
        try:
            split = topology.split_subcubes(g)
            counts = [len(split.cross_edges[k]) for k in range(4)]
            cross_ok = all(c == 4 ** (n - 1) for c in counts)
            detail = f"cross-edge counts {counts} (expect {4 ** (n - 1)})"
        except topology.ConfigurationError as exc:
            cross_ok, detail = False, str(exc)
        results.append(("cross_edges", cross_ok, detail))
    return results


def cmd_props(args) -> int:
    lines = []
    failed = False
    for n in args.n:
        for name, ok, detail in _property_suite(n):
            lines.append(f"n={n} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
            failed = failed or not ok
    _emit("\n".join(lines) + "\n", _out_path(args.out))
    return EXIT_FAIL if failed else EXIT_OK


def _run_solve(n, kind, param, bound, workers, force_brute, max_subsets):
    g = topology.build_direct(n)
    if kind == "plain":
        return solver.brute_force_min_cut(g, "plain", 0, bound, max_subsets)
    if n <= 2 or force_brute:
        return solver.brute_force_min_cut(g, kind, param, bound, max_subsets)
    if kind == "restricted":
        return solver.quotient_min_restricted_cut(
            g, param, bound, workers=workers, max_subsets=max_subsets)
    return solver.g_extra_min_cut(
        g, param, bound, workers=workers, max_subsets=max_subsets)


def cmd_solve(args) -> int:
    kind = args.kind
    if kind == "restricted" and args.h is None:
        print("--h is required for --kind restricted", file=sys.stderr)
        return EXIT_FAIL
    if kind == "extra" and args.g is None:
        print("--g is required for --kind extra", file=sys.stderr)
        return EXIT_FAIL
    if args.n >= 3 and args.bound is None:
        print("--bound is mandatory for n >= 3", file=sys.stderr)
        return EXIT_FAIL
    param = {"restricted": args.h, "extra": args.g, "plain": 0}[kind]
    bound = args.bound if args.bound is not None else 2 * args.n
    try:
        result = _run_solve(args.n, kind, param, bound, args.workers,
                            args.force_brute, args.max_subsets)
    except solver.BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(json.dumps(result.to_json(), indent=2) + "\n", _out_path(args.out))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = topology.build_direct(args.n)
    cert = constructions.verify_upper_bound(args.n, g)
    payload = cert.to_json()
    if args.n == 4:
        payload["anomaly_adjacency"] = constructions.anomaly_common_neighbors(g)
    _emit(json.dumps(payload, indent=2) + "\n", _out_path(args.out))
    expected = "invalid" if args.n == 4 else "valid"
    ok = cert.verdict == expected and cert.cut_matches_neighborhood
    if args.n == 4:
        ok = ok and payload["anomaly_adjacency"]["all_adjacent"]
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    if args.n > 2:
        print("oracle cross-check is exhaustive and limited to n <= 2",
              file=sys.stderr)
        return EXIT_FAIL
    g = topology.build_direct(args.n)
    q = solver.build_quotient(g)
    lines = []
    ok = True
    for h in (1, 2):
        if h >= 2 * args.n:
            continue
        brute = solver.brute_force_min_cut(g, "restricted", h, args.bound)
        quot = solver.quotient_min_restricted_cut(g, h, args.bound, quotient=q)
        agree = brute.value == quot.value
        ok = ok and agree
        lines.append(
            f"h={h}: brute={brute.value} quotient={quot.value} "
            f"{'AGREE' if agree else 'MISMATCH'}")
    report = solver.verify_lift_equivalence(g, q)
    clean = not report["mismatches"]
    ok = ok and clean
    lines.append(
        f"lift equivalence: {report['subsets_checked']} subsets, "
        f"{len(report['mismatches'])} mismatches")
    _emit("\n".join(lines) + "\n", _out_path(args.out))
    return EXIT_OK if ok else EXIT_FAIL


def _parse_range(text: str) -> list[int]:
    """"2,3" or "1-4" -> list of ints; empty string -> empty list."""
    if not text:
        return []
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_sweep(args) -> int:
    ns = _parse_range(args.ns)
    params = _parse_range(args.params)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS)
    writer.writeheader()
    hard_error = False
    for n in ns:
        if args.kind == "verify":
            start = time.perf_counter()
            cert = constructions.verify_upper_bound(n)
            writer.writerow({
                "n": n, "kind": "verify", "param": "",
                "value": "", "witness_size": cert.cut_size,
                "verdict": cert.verdict, "subsets_examined": "",
                "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
            })
            continue
        for param in params:
            row = {"n": n, "kind": args.kind, "param": param}
            try:
                r = _run_solve(n, args.kind, param, args.bound, args.workers,
                               False, args.max_subsets)
                row.update({
                    "value": r.value if r.value is not None else "",
                    "witness_size": len(r.witness) if r.witness else "",
                    "verdict": "found" if r.value is not None else "none",
                    "subsets_examined": r.coverage["subsets_examined"],
                    "elapsed_ms": r.elapsed_ms,
                })
            except (solver.BudgetExceededError, ValueError) as exc:
                row.update({"value": "", "witness_size": "",
                            "verdict": f"error: {exc}",
                            "subsets_examined": "", "elapsed_ms": ""})
                hard_error = True
            writer.writerow(row)
    _emit(buf.getvalue(), _out_path(args.out))
    return EXIT_FAIL if hard_error else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bhcut",
        description="Balanced-hypercube conditional-connectivity toolkit",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="export the adjacency of BH_n")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--method", choices=["direct", "recursive", "both"],
                   default="both")
    g.add_argument("--check-recursive", action="store_true",
                   help="cross-check the two generators even for --method direct")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    pr = sub.add_parser("props", help="run the structural property suite")
    pr.add_argument("--n", type=int, nargs="+", required=True)
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_props)

    so = sub.add_parser("solve", help="minimum conditional cut search")
    so.add_argument("--n", type=int, required=True)
    so.add_argument("--kind", choices=["plain", "restricted", "extra"],
                    required=True)
    so.add_argument("--h", type=int)
    so.add_argument("--g", type=int)
    so.add_argument("--bound", type=int,
                    help="max fault-set size (mandatory for n >= 3)")
    so.add_argument("--workers", type=int, default=1)
    so.add_argument("--force-brute", action="store_true")
    so.add_argument("--max-subsets", type=int,
                    default=solver.DEFAULT_MAX_SUBSETS)
    so.add_argument("--out")
    so.set_defaults(func=cmd_solve)

    ve = sub.add_parser("verify", help="certify the 12n-24 construction")
    ve.add_argument("--n", type=int, required=True)
    ve.add_argument("--out")
    ve.set_defaults(func=cmd_verify)

    orc = sub.add_parser("oracle",
                         help="brute-force vs quotient cross-check (n <= 2)")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--bound", type=int, default=6)
    orc.add_argument("--out")
    orc.set_defaults(func=cmd_oracle)

    sw = sub.add_parser("sweep", help="CSV sweep over a parameter grid")
    sw.add_argument("--ns", default="", help='e.g. "2,3" or "3-5"')
    sw.add_argument("--kind",
                    choices=["plain", "restricted", "extra", "verify"],
                    required=True)
    sw.add_argument("--params", default="", help='e.g. "1-4"')
    sw.add_argument("--bound", type=int, default=6)
    sw.add_argument("--workers", type=int, default=1)
    sw.add_argument("--max-subsets", type=int,
                    default=solver.DEFAULT_MAX_SUBSETS)
    sw.add_argument("--out")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (topology.ConfigurationError, analysis.EmptyGraphError,
            constructions.ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
