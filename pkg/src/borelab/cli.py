"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage errors (including
unknown diagram labels or invalid node flags).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .cartan import load_diagram
from .grading import GradedContext, analyze, catalog_involutions, involution
from .minuscule import enumerate_poset, maxima_parametrization, verify_all
from .report import render_dot, render_json, result_document


def _add_common(p: argparse.ArgumentParser, pi1: bool = True) -> None:
    p.add_argument("--type", required=True, metavar="LABEL",
                   help="affine diagram label, e.g. E8~1 or D5~2")
    if pi1:
        p.add_argument("--pi1", metavar="NODES",
                       help="comma-separated odd node numbers, e.g. 0,3")
        p.add_argument("--adjoint", action="store_true",
                       help="adjoint grading (single mark-1 odd node)")
        p.add_argument("--all", action="store_true",
                       help="run over every involution of the diagram")
        p.add_argument("--dedupe", action=argparse.BooleanOptionalAction,
                       default=True,
                       help="fold involutions equivalent under diagram symmetry")
        p.add_argument("--jobs", type=int, default=1, metavar="N")
        p.add_argument("--max-length", type=int, default=None, metavar="L",
                       help="truncate the enumeration at this length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelab",
        description="Posets of Borel-stable abelian subalgebras attached to "
                    "order-2 gradings, via affine Weyl group combinatorics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the gradings of a diagram")
    p.add_argument("--type", required=True, metavar="LABEL")
    p.add_argument("--adjoint", action="store_true",
                   help="include adjoint gradings in the listing")
    p.add_argument("--dedupe", action=argparse.BooleanOptionalAction, default=True)

    p = sub.add_parser("enumerate", help="enumerate a poset and summarize it")
    _add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("maxima", help="list the maximal elements with dimensions")
    _add_common(p)

    p = sub.add_parser("verify", help="run every structural check")
    _add_common(p)

    p = sub.add_parser("export", help="write result documents or DOT graphs")
    _add_common(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", metavar="PATH",
                   default=os.environ.get("BORELAB_OUT"),
                   help="output file, or directory with --all "
                        "(default: $BORELAB_OUT)")
    return parser


def _contexts(args: argparse.Namespace) -> list[GradedContext]:
    d = load_diagram(getattr(args, "type"))
    if getattr(args, "all", False):
        specs = catalog_involutions(d, include_adjoint=True, dedupe=args.dedupe)
        return [analyze(s) for s in specs]
    if args.pi1 is None:
        raise ValueError("either --pi1 or --all is required")
    odd = [int(x) for x in args.pi1.split(",") if x != ""]
    return [analyze(involution(d, odd, adjoint=args.adjoint))]


def _slug(ctx: GradedContext) -> str:
    nodes = "-".join(str(i) for i in ctx.odd)
    tail = "__adjoint" if ctx.spec.adjoint else ""
    return f"{ctx.d.label}__pi1-{nodes}{tail}"


def _cmd_catalog(args: argparse.Namespace) -> int:
    d = load_diagram(getattr(args, "type"))
    specs = catalog_involutions(d, include_adjoint=args.adjoint, dedupe=args.dedupe)
    for s in specs:
        print(s.describe())
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    out = []
    for ctx in _contexts(args):
        poset = enumerate_poset(ctx, max_length=args.max_length, jobs=args.jobs)
        if args.format == "json":
            out.append(render_json(result_document(poset)))
        else:
            dims = sorted(poset.elements[i].length for i in poset.maxima)
            lines = [
                f"{ctx.spec.describe()}",
                f"  elements: {len(poset)}   covers: {len(poset.edges)}"
                + ("" if poset.complete else "   (truncated)"),
                f"  maxima:   {len(poset.maxima)}   dimensions: {dims}",
            ]
            for w in ctx.walls:
                fam = ",".join(str(a) for a in ctx.family_indices(w))
                lines.append(
                    f"  wall {w.index} ({w.kind}, type {w.wall_type}): "
                    f"root {list(w.root)}  families at [{fam}]"
                )
            out.append("\n".join(lines) + "\n")
    text = "".join(out)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_maxima(args: argparse.Namespace) -> int:
    for ctx in _contexts(args):
        poset = enumerate_poset(ctx, max_length=args.max_length, jobs=args.jobs)
        print(ctx.spec.describe())
        for it in maxima_parametrization(poset):
            word = ".".join(str(x) for x in poset.elements[it.position].word)
            print(f"  {it.label:24s} {it.kind:9s} dim {it.dimension:3d}  word {word}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failed = False
    for ctx in _contexts(args):
        poset = enumerate_poset(ctx, max_length=args.max_length, jobs=args.jobs)
        print(ctx.spec.describe())
        for r in verify_all(poset):
            print(" ", r.line())
            failed = failed or not r.passed
    return 1 if failed else 0


def _cmd_export(args: argparse.Namespace) -> int:
    contexts = _contexts(args)
    multi = len(contexts) > 1
    if multi and not args.out:
        raise ValueError("--all export needs --out (a directory)")
    for ctx in contexts:
        poset = enumerate_poset(ctx, max_length=args.max_length, jobs=args.jobs)
        if args.format == "dot":
            text = render_dot(poset)
        else:
            text = render_json(result_document(poset, verify_all(poset)))
        if multi:
            os.makedirs(args.out, exist_ok=True)
            ext = "dot" if args.format == "dot" else "json"
            path = os.path.join(args.out, f"{_slug(ctx)}.{ext}")
            with open(path, "w") as fh:
                fh.write(text)
            print(path)
        elif args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return 0


_DISPATCH = {
    "catalog": _cmd_catalog,
    "enumerate": _cmd_enumerate,
    "maxima": _cmd_maxima,
    "verify": _cmd_verify,
    "export": _cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
