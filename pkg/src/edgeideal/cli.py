"""Command-line front end.

Exit codes: 0 success, 2 bad input or failed precondition, 3 refused by the
subset cap, 1 internal invariant violation (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import acceptance
from .classifiers import SHELL_CAP, audit_chain
from .complex import SimplicialComplex, independence_complex, projective_plane
from .errors import CapExceeded, InputError, InvariantViolation, PreconditionError
from .formulas import BOUND_KINDS, pdim_bound, verify_bound
from .genfun import BettiPolynomial, genfun_forest
from .graph import Graph
from .hochster import BettiTable, betti_table, betti_table_component_ideal, betti_table_graph, default_workers, summarize
from .homology import FieldSpec, reduced_homology, torsion_probe
from .io import graph_to_dict, load_graph, to_edge_list, to_graph6


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _fields(text: str) -> list[FieldSpec]:
    return [FieldSpec.parse(t) for t in text.split(",") if t.strip()]


def _load_complex(source: str) -> SimplicialComplex:
    if source == "rp2":
        return projective_plane()
    p = Path(source)
    if not p.is_file():
        raise InputError(f"no complex file {source!r} (expected JSON with 'ground' and 'facets', or 'rp2')")
    try:
        return SimplicialComplex.from_dict(json.loads(p.read_text()))
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: {exc}") from None


def _target(args) -> tuple[Graph | None, SimplicialComplex]:
    """The graph (if any) and the complex a command operates on."""
    if args.complex:
        return None, _load_complex(args.complex)
    if not args.graph:
        raise InputError("give --graph or --complex")
    G = load_graph(args.graph)
    return G, independence_complex(G)


def _print_table(T: BettiTable, fmt: str) -> None:
    if fmt == "json":
        _emit({"table": T.to_dict(), "summary": summarize(T).to_dict()})
    elif fmt == "csv":
        sys.stdout.write(T.to_csv())
    else:
        sys.stdout.write(T.render())


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args) -> int:
    G = load_graph(args.spec)
    if args.format == "graph6":
        print(to_graph6(G))
    elif args.format == "json":
        _emit(graph_to_dict(G))
    else:
        sys.stdout.write(to_edge_list(G))
    return 0


def cmd_betti(args) -> int:
    k = FieldSpec.parse(args.field)
    opts = dict(workers=args.workers, n_cap=args.unsafe_n_cap)
    if args.complex:
        T = betti_table(_load_complex(args.complex), k, fold_reduce_per_subset=not args.no_fold, **opts)
    else:
        G = load_graph(args.graph) if args.graph else None
        if G is None:
            raise InputError("give --graph or --complex")
        if args.component_r is not None:
            T = betti_table_component_ideal(G, args.component_r, k, **opts)
        else:
            T = betti_table_graph(G, k, fold_reduce_per_subset=not args.no_fold, **opts)
    _print_table(T, args.format)
    return 0


def cmd_genfun(args) -> int:
    if not args.graph:
        raise InputError("give --graph")
    G = load_graph(args.graph)
    if args.method == "forest":
        poly = genfun_forest(G)
    else:
        T = betti_table_graph(G, FieldSpec.parse(args.field), workers=args.workers, n_cap=args.unsafe_n_cap)
        poly = BettiPolynomial.from_table(T)
    if args.format == "json":
        _emit(poly.to_dict())
    else:
        print(poly)
    return 0


def cmd_classify(args) -> int:
    _, D = _target(args)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - {"vd", "shellable", "cm", "seqcm"}
    if unknown:
        raise InputError(f"unknown checks {sorted(unknown)}; choose from vd, shellable, cm, seqcm")
    report = audit_chain(D, _fields(args.field), checks, shell_cap=args.shell_cap)
    _emit(report.to_dict())
    return 0


def cmd_bounds(args) -> int:
    if args.graph:
        G = load_graph(args.graph)
        report = verify_bound(G, args.kind, FieldSpec.parse(args.field), r=args.r, a=args.a, b=args.b,
                              workers=args.workers, n_cap=args.unsafe_n_cap)
    else:
        params = {k: v for k, v in (("n", args.n), ("d", args.d), ("r", args.r), ("a", args.a), ("b", args.b))
                  if v is not None}
        report = pdim_bound(args.kind, **params)
    _emit(report.to_dict())
    return 0


def cmd_homology(args) -> int:
    _, D = _target(args)
    out = {str(k): {str(d): b for d, b in sorted(reduced_homology(D, k).nonzero().items())}
           for k in _fields(args.field)}
    result = {"complex": D.to_dict(), "reduced_homology": out}
    if args.torsion_primes:
        primes = [int(p) for p in args.torsion_primes.split(",")]
        result["agrees_with_Q"] = torsion_probe(D, primes)
    _emit(result)
    return 0


def cmd_verify(args) -> int:
    names = list(acceptance.CHECKS) if args.check == "all" else [args.check]
    overrides = {"max_cells": args.max_cells, "count": args.count, "max_n": args.max_n, "seed": args.seed}
    results = []
    for name in names:
        fn = acceptance.CHECKS[name]
        accepted = inspect.signature(fn).parameters
        kw = {k: v for k, v in overrides.items() if v is not None and k in accepted}
        results.append(fn(**kw))
    bad = sum(len(r.mismatches) for r in results)
    if args.format == "json":
        _emit([r.to_dict() for r in results])
    else:
        for r in results:
            print(r.line())
            for m in r.mismatches:
                print(f"  mismatch: {m}")
            for note in r.notes:
                print(f"  note: {note}")
    print("OK: 0 mismatches" if not bad else f"FAIL: {bad} mismatches")
    return 0 if not bad else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgeideal", description="Betti numbers of edge ideals and Stanley-Reisner rings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *, complex_ok=True, table_formats=True):
        p.add_argument("--graph", help="graph file (.g6, .json, edge list) or inline spec such as cycle:5")
        if complex_ok:
            p.add_argument("--complex", help="simplicial complex JSON file, or 'rp2'")
        p.add_argument("--field", default="2", help="2, 3, 5, ... or Q (default: GF(2))")
        p.add_argument("--workers", type=int, default=default_workers(),
                       help="process pool size (default: $EDGEIDEAL_WORKERS or 1)")
        p.add_argument("--unsafe-n-cap", type=int, default=None,
                       help="raise the vertex cap of the 2^n subset sweep")
        if table_formats:
            p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p = sub.add_parser("construct", help="build a graph from a spec and print it")
    p.add_argument("spec")
    p.add_argument("--format", choices=("edgelist", "graph6", "json"), default="edgelist")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("betti", help="graded Betti table from Hochster's formula")
    common(p)
    p.add_argument("--no-fold", action="store_true", help="disable per-subset fold reduction")
    p.add_argument("--component-r", type=int, help="use the r-component ideal instead of the edge ideal")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("genfun", help="Betti generating function B(G; x, y)")
    common(p, complex_ok=False, table_formats=False)
    p.add_argument("--method", choices=("oracle", "forest"), default="oracle")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("classify", help="vertex decomposability, shellability, CM and sequential CM")
    common(p, table_formats=False)
    p.add_argument("--checks", default="vd,shellable,cm,seqcm")
    p.add_argument("--shell-cap", type=int, default=SHELL_CAP)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="projective-dimension bounds, optionally checked on a graph")
    common(p, complex_ok=False, table_formats=False)
    p.add_argument("--kind", choices=BOUND_KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--a", help="rational, e.g. 1/4")
    p.add_argument("--b", help="rational; write negatives as --b=-5/4")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("homology", help="reduced homology of Ind(G) or a given complex")
    common(p, table_formats=False)
    p.add_argument("--torsion-primes", help="comma-separated primes to compare against Q")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="run the acceptance checks against the oracle")
    p.add_argument("check", choices=(*acceptance.CHECKS, "all"))
    p.add_argument("--max-cells", type=int, help="largest partition size for the ferrers check")
    p.add_argument("--count", type=int, help="number of random cases")
    p.add_argument("--max-n", type=int, help="largest random graph")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_verify)
    return ap


def _parse_fraction(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if hasattr(args, "a"):
            args.a, args.b = _parse_fraction(args.a), _parse_fraction(args.b)
        return args.func(args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
