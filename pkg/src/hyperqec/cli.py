"""Command-line front end.

Exit status: 0 when the outcome is detected/true/success, 1 when it is
undetected/false, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import detection, gatecost, statesim
from .hypergraph import GraphError, load_graph, ring_code, serialize_graph

OK, NEGATIVE, USAGE = 0, 1, 2

NEEDS_ERRORS = {"check", "oracle"}


def _csv_vertices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperqec", description="Error-detection checks for hypergraph-state codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, graph_required=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", required=graph_required, help="graph file (JSON)")
        p.add_argument("--output", choices=("text", "json"), default="text")
        return p

    for name, help_ in (
        ("check", "decide detection of one error configuration"),
        ("enumerate", "check every error configuration of a given size"),
        ("radius", "largest k such that all configurations up to size k are detected"),
        ("cost", "CZ counts for hyperedges versus clique expansion"),
        ("state", "dump hypergraph-state amplitudes"),
        ("stabilizers", "verify the stabilizer of every vertex (qubits only)"),
        ("oracle", "brute-force Knill-Laflamme factorization check"),
    ):
        p = add(name, help_)
        p.add_argument("--modulus", type=int, help="override the graph file's modulus")
        if name in NEEDS_ERRORS:
            p.add_argument("--errors", type=_csv_vertices, required=True, help="comma-separated output vertices")
        if name == "enumerate":
            p.add_argument("--size", type=int, required=True)
            p.add_argument("--workers", type=int, default=None, help="process pool size")
        if name == "state":
            p.add_argument("--limit", type=int, default=64, help="maximum amplitudes to print")

    add("fixture", "write the built-in 15-output ring code", graph_required=False)
    return parser


def _emit(payload: dict, text: str, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _witness_text(witness) -> str:
    return ", ".join(f"{k}={v}" for k, v in witness.as_dict().items())


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"hyperqec {args.command}: {exc}\n")
        return USAGE


def _dispatch(args) -> int:
    if args.command == "fixture":
        text = serialize_graph(ring_code())
        if args.graph:
            with open(args.graph, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return OK

    g = load_graph(args.graph)
    d = args.modulus if args.modulus is not None else g.modulus
    fmt = args.output

    if args.command == "check":
        v = detection.is_detected(g, args.errors, d)
        payload = {"modulus": d, **v.to_dict()}
        system = detection.build_detection_system(g, args.errors, d)
        text = "detected" if v.detected else f"undetected; witness {_witness_text(v.witness)}"
        _emit(payload, text + "\n" + "\n".join(system.describe()), fmt)
        return OK if v.detected else NEGATIVE

    if args.command == "enumerate":
        report = detection.enumerate_detected(g, args.size, d, workers=args.workers)
        lines = [f"size {report.size}, modulus {report.modulus}: {report.detected}/{report.total} detected"]
        lines += [f"undetected {list(v.error_vertices)}; witness {_witness_text(v.witness)}" for v in report.undetected]
        _emit(report.to_dict(), "\n".join(lines), fmt)
        return OK if report.all_detected else NEGATIVE

    if args.command == "radius":
        r = detection.detection_radius(g, d)
        _emit({"graph": g.to_dict(), "modulus": d, "radius": r}, str(r), fmt)
        return OK

    if args.command == "cost":
        report = gatecost.compare(g)
        lines = [f"edge of size {k}: hyper {h}, clique {c}" for k, h, c in report.per_edge]
        lines.append(f"total hyper {report.total_hyper}, clique {report.total_clique}, advantage {report.advantage}")
        _emit(report.to_dict(), "\n".join(lines), fmt)
        return OK

    if args.command == "state":
        dump = statesim.amplitude_dump(statesim.hypergraph_state(g, d), limit=args.limit)
        lines = [f"|{row['basis']}>  {row['re']:+.12f} {row['im']:+.12f}i" for row in dump["amplitudes"]]
        if dump["truncated"]:
            lines.append(f"... ({d ** dump['num_sites']} amplitudes total)")
        _emit(dump, "\n".join(lines), fmt)
        return OK

    if args.command == "stabilizers":
        if d != g.modulus:
            g = _with_modulus(g, d)
        results = {v: statesim.verify_stabilizer(g, v) for v in g.vertices}
        payload = {"modulus": d, "stabilizers": {str(v): ok for v, ok in results.items()}}
        _emit(payload, "\n".join(f"{v}: {'true' if ok else 'false'}" for v, ok in results.items()), fmt)
        return OK if all(results.values()) else NEGATIVE

    if args.command == "oracle":
        rep = statesim.kl_factorization_check(g, args.errors, d)
        if rep.factorizes:
            text = f"factorizes (max deviation {rep.max_deviation:.3e})"
        else:
            a, b = rep.offending_pair
            text = f"does not factorize (max deviation {rep.max_deviation:.3e} at pair {list(a)} -> {list(b)})"
        _emit({"modulus": d, **rep.to_dict()}, text, fmt)
        return OK if rep.factorizes else NEGATIVE

    raise AssertionError(args.command)


def _with_modulus(g, d):
    from dataclasses import replace

    return replace(g, modulus=d)


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
