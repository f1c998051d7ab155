"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 node cap
exceeded, 4 internal crystal invariant violated (an engine bug).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .cartan import CartanError, CartanType, Weight, fundamental_weight, weyl_dim, weyl_orbit
from .lemma import (
    classify_quasi_minuscule,
    reproduce_g2_paper_data,
    sweep,
    verify_lemma,
)
from .paths import CrystalInvariantError, NodeCapExceeded, build_crystal
from .serialize import (
    emit_component_dot,
    emit_graph_dot,
    emit_graph_json,
    emit_report_json,
)
from .tensor import component, decompose, highest_weight_nodes, tensor_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4

log = logging.getLogger("qmcrystal")


class UsageError(Exception):
    pass


def _cartan(text: str) -> CartanType:
    try:
        return CartanType.parse(text)
    except CartanError as exc:
        raise UsageError(str(exc)) from exc


def _weight(ct: CartanType, text: str, what: str = "weight") -> Weight:
    try:
        coords = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from exc
    if len(coords) != ct.rank:
        raise UsageError(f"{what} has {len(coords)} coordinates, {ct} has rank {ct.rank}")
    return Weight(coords)


def _dominant(ct: CartanType, text: str, what: str = "weight") -> Weight:
    w = _weight(ct, text, what)
    if not w.is_dominant():
        raise UsageError(f"{what} {text} is not dominant")
    return w


def _write(data: bytes, out: Optional[str]):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_build(args) -> int:
    ct = _cartan(args.type)
    lam = _dominant(ct, args.hw, "--hw")
    g = build_crystal(ct, lam, args.node_cap)
    data = emit_graph_json(g) if args.format == "json" else emit_graph_dot(g)
    counts = {"nodes": len(g), "edges": len(g.f_edges)}
    _write(data, args.out)
    msg = f"{counts['nodes']} nodes, {counts['edges']} edges"
    if args.out:
        print(json.dumps(counts) if args.format == "json" else msg)
    else:
        print(msg, file=sys.stderr)
    return EXIT_OK


def cmd_tensor(args) -> int:
    ct = _cartan(args.type)
    a = _dominant(ct, args.a, "--a")
    b = _dominant(ct, args.b, "--b")
    A = build_crystal(ct, a, args.node_cap)
    B = A if b == a else build_crystal(ct, b, args.node_cap)
    if args.decompose:
        dec = decompose(A, B, args.node_cap)
        payload = {
            "cartan_type": str(ct), "a": a, "b": b, "total_nodes": dec.total_nodes,
            "summands": [{"highest_weight": w, "multiplicity": m, "dim": weyl_dim(ct, w)}
                         for w, m in dec.summands],
        }
        _write(emit_report_json("fusion", payload, True), args.out)
        return EXIT_OK
    target = _weight(ct, args.component, "--component")
    seeds = [x for x in highest_weight_nodes(A, B) if tensor_weight(A, B, x) == target]
    if not seeds:
        raise UsageError(f"no highest weight node of weight {args.component} in the product")
    if args.seed_index >= len(seeds):
        raise UsageError(f"--seed-index {args.seed_index} out of range ({len(seeds)} seeds)")
    comp = component(A, B, seeds[args.seed_index], args.node_cap)
    if args.format == "dot":
        _write(emit_component_dot(comp, ct), args.out)
        return EXIT_OK
    payload = {
        "cartan_type": str(ct), "a": a, "b": b, "seed": comp.seed,
        "multiplicity": len(seeds), "highest_weight": comp.highest_weight, "size": len(comp),
        "members": comp.members,
        "edges": [{"src": s, "label": i, "dst": d} for (s, i), d in comp.f_edges.items()],
        "zero_weight_members": comp.zero_weight_members,
    }
    _write(emit_report_json("component", payload, True), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "lemma":
        ct = _cartan(args.type)
        try:
            fundamental_weight(ct, args.index)
        except CartanError as exc:
            raise UsageError(str(exc)) from exc
        report = verify_lemma(ct, args.index, args.node_cap)
        failures = list(report.failures)
        if not report.hypothesis_holds:
            failures.insert(0, f"hypothesis fails: V(w_{args.index}) is not a summand of "
                               f"V(w_{args.index}) (x) V(w_{args.index}) for {ct}")
        passed = report.passed
        data = emit_report_json("lemma", report, passed, failures)
    elif args.target == "paper-g2":
        diff = reproduce_g2_paper_data()
        passed = diff.passed
        data = emit_report_json("paperdata", diff, passed,
                                [f"{m.item}: expected {m.expected}, got {m.actual}"
                                 for m in diff.mismatches])
    elif args.target == "quasiminuscule":
        ct = _cartan(args.type)
        rep = classify_quasi_minuscule(ct, _dominant(ct, args.hw, "--hw"), args.node_cap)
        passed = True
        data = emit_report_json("quasiminuscule", rep, True)
    else:
        entries = sweep(max_dim=args.max_dim)
        passed = all(e.passed for e in entries)
        failures = [f"{e.cartan_type} w_{e.index}" for e in entries if not e.passed]
        data = emit_report_json("sweep", entries, passed, failures)
    _write(data, args.out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_dim(args) -> int:
    ct = _cartan(args.type)
    print(weyl_dim(ct, _dominant(ct, args.hw, "--hw")))
    return EXIT_OK


def cmd_orbit(args) -> int:
    ct = _cartan(args.type)
    orbit = sorted(weyl_orbit(ct, _weight(ct, args.w, "--w")), key=lambda w: tuple(-x for x in w))
    if args.format == "json":
        print(json.dumps({"size": len(orbit), "orbit": [list(w.to_ints()) for w in orbit]}))
    else:
        print(len(orbit))
        for w in orbit:
            print(",".join(str(x) for x in w.to_ints()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmcrystal", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log one line per phase")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=None):
        sp.add_argument("--type", required=True, help="Cartan type, e.g. G2, F4, E8")
        sp.add_argument("--node-cap", type=int, default=None,
                        help="node cap (default $QMCRYSTAL_NODE_CAP or 1000000)")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=fmt, default=fmt[0])

    sp = sub.add_parser("build", help="build the crystal B(hw)")
    common(sp, ["json", "dot"])
    sp.add_argument("--hw", required=True, help="highest weight, comma-separated")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("tensor", help="tensor product of two crystals")
    common(sp, ["json", "dot"])
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--decompose", action="store_true")
    mode.add_argument("--component", metavar="WEIGHT", help="highest weight of the component")
    sp.add_argument("--seed-index", type=int, default=0,
                    help="which seed when the component weight has multiplicity > 1")
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("verify", help="run a verification")
    vsub = sp.add_subparsers(dest="target", required=True)
    lp = vsub.add_parser("lemma")
    common(lp)
    lp.add_argument("--index", type=int, required=True)
    qp = vsub.add_parser("quasiminuscule")
    common(qp)
    qp.add_argument("--hw", required=True)
    gp = vsub.add_parser("paper-g2")
    gp.add_argument("--out", default=None)
    swp = vsub.add_parser("sweep")
    swp.add_argument("--out", default=None)
    swp.add_argument("--max-dim", type=int, default=30)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dim", help="Weyl dimension of V(hw)")
    sp.add_argument("--type", required=True)
    sp.add_argument("--hw", required=True)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("orbit", help="Weyl group orbit of a weight")
    sp.add_argument("--type", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_orbit)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if getattr(args, "node_cap", None) is not None and args.node_cap < 1:
        print("qmcrystal: error: --node-cap must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        log.info("running %s", args.command)
        return args.func(args)
    except UsageError as exc:
        print(f"qmcrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CartanError as exc:
        print(f"qmcrystal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NodeCapExceeded as exc:
        print(f"qmcrystal: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CrystalInvariantError as exc:
        print(f"qmcrystal: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
