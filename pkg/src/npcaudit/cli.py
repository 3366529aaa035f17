"""
Command-line entry point: ``npc-audit {audit,link,disk,gen,distance}``.

Exit codes: 0 when every requested check passes, 1 on a definitive failure
(or a disk search that found nothing within its bounds, or an unreachable
distance), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .complex import (
    ComplexError,
    combinatorial_distance,
    combinatorial_link,
    is_full_in,
    is_flag,
    simplex,
)
from .disks import DiskError, boundary_curvature, find_minimal_spanning_disks, gauss_bonnet_total, is_cat0_disk
from .generators import GeneratorSpec, generate
from .io import dumps_complex, load_complex
from .metric import DEFAULT_TOL, TWO_PI, codim2_link_graph, codim2_simplices, edge_link_passes, metric_girth
from .polygons import find_empty_ngons, is_k_large, is_snpc


class UsageError(Exception):
    pass


def _ids(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated vertex ids, got {text!r}") from None


def _threads() -> int:
    raw = os.environ.get("NPC_AUDIT_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"NPC_AUDIT_THREADS must be a non-negative integer, got {raw!r}") from None
    if n < 0:
        raise UsageError("NPC_AUDIT_THREADS must be non-negative")
    # every scan here runs in-process and sequentially, so any cap is met
    return n


def _emit(payload: dict, text_lines: list, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _check(cid: str, passed: bool, witness, details: str, **extra) -> dict:
    out = {"id": cid, "pass": bool(passed), "witness": witness, "details": details}
    out.update(extra)
    return out


def run_audit(K, selected: dict, tol: float = DEFAULT_TOL, ambient=None) -> list[dict]:
    """Run the selected checks in the fixed order and return check records."""
    checks = []
    if "flag" in selected:
        ok, clique = is_flag(K)
        checks.append(
            _check("flag", ok, None if ok else {"clique": list(clique)},
                   "every clique spans a simplex" if ok else "clique without a simplex")
        )
    if "empty-gons" in selected:
        k = selected["empty-gons"]
        gons = find_empty_ngons(K, k)
        checks.append(
            _check("empty-gons", not gons, [g.to_dict() for g in gons] or None,
                   f"{len(gons)} empty n-gon(s) with n < {k}")
        )
    if "k-large" in selected:
        k = selected["k-large"]
        res = is_k_large(K, k)
        checks.append(_check("k-large", res.passed, res.witness_dict(), f"{k}-large" if res else f"not {k}-large"))
    if "snpc" in selected:
        res = is_snpc(K)
        witness = None
        if res.failures:
            s, lres = res.failures[0]
            witness = {"simplex": list(s), "link": lres.witness_dict()}
        checks.append(
            _check(
                "snpc",
                res.passed,
                witness,
                f"{len(res.failures)} simplex link(s) not 6-large (empty simplex included)",
                variants={"with_empty_simplex": res.passed, "nonempty_simplices_only": res.passed_nonempty},
            )
        )
    if "edge-links" in selected:
        results = [edge_link_passes(K, s, tol) for s in codim2_simplices(K)]
        bad = [r for r in results if not r]
        finite = [r.girth.length for r in results if r.girth.finite]
        shortest = f"{min(finite):.6f}" if finite else "inf"
        checks.append(
            _check(
                "edge-links",
                not bad,
                bad[0].to_dict() if bad else None,
                f"{len(results)} codimension-2 link(s) checked; shortest girth {shortest}; threshold 2pi - {tol:g}",
            )
        )
    if "full" in selected:
        ok, s = is_full_in(K, ambient)
        checks.append(
            _check("full", ok, None if ok else {"simplex": list(s)},
                   "full in ambient" if ok else "ambient simplex missing from subcomplex")
        )
    return checks


def cmd_audit(args) -> int:
    K = load_complex(args.file)
    selected = {}
    if args.flag:
        selected["flag"] = True
    if args.empty_gons is not None:
        selected["empty-gons"] = args.empty_gons
    if args.k_large is not None:
        selected["k-large"] = args.k_large
    if args.snpc:
        selected["snpc"] = True
    if args.edge_links:
        selected["edge-links"] = True
    ambient = None
    if args.full:
        ambient = load_complex(args.full)
        selected["full"] = True
    if not selected:
        selected = {"flag": True, "empty-gons": 6, "snpc": True, "edge-links": True}
    checks = run_audit(K, selected, args.tol, ambient)
    report = {"tool_version": __version__, "input": args.file, "checks": checks}
    lines = [f"{'PASS' if c['pass'] else 'FAIL'} {c['id']}: {c['details']}" for c in checks]
    for c in checks:
        if not c["pass"]:
            lines.append(f"  witness[{c['id']}] = {json.dumps(c['witness'])}")
    _emit(report, lines, args.format)
    return 0 if all(c["pass"] for c in checks) else 1


def cmd_link(args) -> int:
    K = load_complex(args.file)
    s = simplex(_ids(args.simplex))
    L = combinatorial_link(K, s)
    payload = {"simplex": list(s), "link": {"facets": [list(f) for f in L.sorted_facets()]}}
    lines = [f"link of {list(s)}: {json.dumps(payload['link']['facets'])}"]
    status = 0
    if args.metric:
        G = codim2_link_graph(K, s)
        g = metric_girth(G)
        passed = g.length >= TWO_PI - args.tol
        weights = sorted({round(w, 12) for w in G.edges.values()})
        payload["metric"] = {
            "edges": [[u, v, w] for (u, v), w in sorted(G.edges.items())],
            "girth": g.length if g.finite else "inf",
            "cycle": list(g.cycle) if g.finite else [],
            "threshold": round(TWO_PI, 9),
            "pass": passed,
        }
        lines.append("weights: " + ", ".join(f"{w:.6f}" for w in weights))
        lines.append(
            f"girth: {g.length:.6f}" + (f" cycle {list(g.cycle)}" if g.finite else "")
            + f" ({'pass' if passed else 'fail'}, threshold 2pi = {TWO_PI:.6f})"
        )
        status = 0 if passed else 1
    _emit(payload, lines, args.format)
    return status


def cmd_disk(args) -> int:
    K = load_complex(args.file)
    loop = _ids(args.loop)
    res = find_minimal_spanning_disks(K, loop, args.max_interior, args.max_area)
    payload = {"loop": list(loop), "status": res.status, "area": res.area, "disks": []}
    if res.found:
        head = f"loop {list(loop)}: found, area {res.area}, {len(res.solutions)} disk(s)"
    else:
        bound = f"<= {args.max_interior} interior vertices"
        if args.max_area is not None:
            bound += f", area <= {args.max_area}"
        head = f"loop {list(loop)}: not found within bounds ({bound})"
    lines = [head]
    for D, m in res.solutions:
        cat0, bad = is_cat0_disk(D)
        rec = D.to_dict()
        rec["map"] = {str(k): v for k, v in m.pairs}
        rec.update(
            area=D.area,
            gauss_bonnet_total=gauss_bonnet_total(D),
            cat0=cat0,
            boundary_curvature=boundary_curvature(D),
        )
        payload["disks"].append(rec)
        lines.append(
            f"  area {D.area}  gauss-bonnet {rec['gauss_bonnet_total']}  cat0={str(cat0).lower()}"
            f"  boundary-curvature {rec['boundary_curvature']}  faces {[m.image(f) for f in sorted(D.faces)]}"
        )
    _emit(payload, lines, args.format)
    return 0 if res.found else 1


GEN_PARAMS = {
    "cycle": ("n",),
    "simplex": ("d",),
    "wheel": ("k",),
    "octahedron": (),
    "counterexample": ("n",),
    "tetra-fan": ("k",),
    "random-flag": ("vertices", "p", "seed"),
}


def cmd_gen(args) -> int:
    params = {}
    for name in GEN_PARAMS[args.kind]:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"gen {args.kind} needs --{name}")
        params[name] = value
    K = generate(GeneratorSpec(args.kind, params))
    text = dumps_complex(K, args.name)
    summary = f"{len(K.facets)} facets, {len(K.vertices)} vertices"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"wrote {args.output}: {summary}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return 0


def cmd_distance(args) -> int:
    K = load_complex(args.file)
    d = combinatorial_distance(K, args.source, args.target)
    print("unreachable" if d is None else d)
    return 1 if d is None else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="npc-audit", description=__doc__.strip().splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("audit", help="run curvature checks on a complex file")
    a.add_argument("file")
    a.add_argument("--flag", action="store_true")
    a.add_argument("--empty-gons", type=int, nargs="?", const=6, metavar="K",
                   help="report empty n-gons with n < K (default 6)")
    a.add_argument("--k-large", type=int, metavar="K")
    a.add_argument("--snpc", action="store_true")
    a.add_argument("--edge-links", action="store_true", help="2pi girth test on every codimension-2 link")
    a.add_argument("--full", metavar="AMBIENT_FILE")
    a.add_argument("--tol", type=float, default=DEFAULT_TOL)
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_audit)

    lk = sub.add_parser("link", help="combinatorial (and metric) link of a simplex")
    lk.add_argument("file")
    lk.add_argument("--simplex", required=True, help="comma-separated vertex ids; empty for the empty simplex")
    lk.add_argument("--metric", action="store_true")
    lk.add_argument("--tol", type=float, default=DEFAULT_TOL)
    lk.add_argument("--format", choices=("text", "json"), default="text")
    lk.set_defaults(func=cmd_link)

    dk = sub.add_parser("disk", help="minimal spanning disks of a loop")
    dk.add_argument("file")
    dk.add_argument("--loop", required=True, help="comma-separated vertex ids; closing edge implied")
    dk.add_argument("--max-interior", type=int, default=2)
    dk.add_argument("--max-area", type=int, default=None)
    dk.add_argument("--format", choices=("text", "json"), default="text")
    dk.set_defaults(func=cmd_disk)

    g = sub.add_parser("gen", help="write a named complex as JSON")
    g.add_argument("kind", choices=sorted(GEN_PARAMS))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--vertices", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int)
    g.add_argument("--name")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("distance", help="combinatorial distance between two vertices")
    d.add_argument("file")
    d.add_argument("--from", dest="source", type=int, required=True)
    d.add_argument("--to", dest="target", type=int, required=True)
    d.set_defaults(func=cmd_distance)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        return args.func(args)
    except (UsageError, ComplexError, DiskError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: input too large", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
