"""Command-line entry point: ``capcolor {detect,color,verify,gen,oracle,tighten}``.

Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 hypothesis
violated (skeleton has a triangle), 4 base bound exceeded, 5 time budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from pathlib import Path

from .blowup import BlowupMap, cycle_blowup, recognize_blowup
from .engine import BoundParams, Certificate, color_blowup
from .formats import ParseError, dumps, graph_to_json, load_graph_text, write_dimacs
from .graph import induced_subgraph
from .oracles import exact_chromatic, max_clique_size, max_stable_set_size
from .structure import classify, find_triangle, generate_skeleton_corpus
from .verify import MalformedCertificate, check_certificate, tightness_table

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_BASE, EXIT_TIME = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _read(path: str) -> str:
    try:
        return Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None


def _load_graph(path: str):
    text = _read(path)
    try:
        doc = json.loads(text) if text.lstrip().startswith("{") else None
        if isinstance(doc, dict) and "skeleton" in doc:
            return BlowupMap.from_json(doc).total_graph()
        return load_graph_text(text, path)
    except (ParseError, ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _load_blowup(path: str, recognize: bool) -> BlowupMap:
    text = _read(path)
    try:
        doc = json.loads(text) if text.lstrip().startswith("{") else None
        if isinstance(doc, dict) and "skeleton" in doc:
            return BlowupMap.from_json(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: bad blowup map: {exc}") from None
    if not recognize:
        raise CliError(EXIT_PARSE, f"{path}: --no-recognize needs a BlowupMap JSON document")
    return recognize_blowup(_load_graph(path))


def _params(args) -> BoundParams:
    try:
        return BoundParams(args.p, args.q)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def _emit(args, doc, human: str, tsv: str | None = None) -> None:
    if args.format == "json":
        text = dumps(doc)
    elif args.format == "tsv" and tsv is not None:
        text = tsv
    else:
        text = human.rstrip("\n") + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_detect(args) -> int:
    g = _load_graph(args.input)
    report = classify(g)
    doc = report.to_json()
    if args.format != "json":
        doc.pop("witnesses")
    flags = [k for k in ("triangle_free", "cap_free", "even_hole_free", "five_hole_free", "is_cube")]
    human = "\n".join(f"{k}: {getattr(report, k)}" for k in flags)
    tsv = "\t".join(flags) + "\n" + "\t".join(str(getattr(report, k)).lower() for k in flags) + "\n"
    _emit(args, doc, human, tsv)
    return EXIT_OK


def cmd_color(args) -> int:
    params = _params(args)
    b = _load_blowup(args.input, recognize=not args.no_recognize)
    support = [v for v in range(b.skeleton.n) if b.multiplicity[v] > 0]
    tri = find_triangle(induced_subgraph(b.skeleton, support)[0])
    if tri is not None:
        witness = [support[i] for i in tri]
        raise CliError(
            EXIT_HYPOTHESIS,
            f"hypothesis violated: skeleton has a triangle {witness}",
            {"error": "skeleton_triangle", "triangle": witness},
        )
    cert = color_blowup(b, params)
    human = (f"omega={cert.omega} bound={cert.bound} used={cert.used}"
             + (" BASE BOUND EXCEEDED" if cert.base_bound_exceeded else ""))
    _emit(args, cert.to_json(), human)
    return EXIT_BASE if cert.base_bound_exceeded else EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        cert = Certificate.from_json(json.loads(_read(args.certificate)))
        report = check_certificate(g, cert)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"{args.certificate}: {exc}") from None
    human = "\n".join([f"proper: {report.proper}", f"within_bound: {report.within_bound}",
                       f"omega_confirmed: {report.omega_confirmed}", *report.details])
    _emit(args, report.to_json(), human)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    if args.budget_n is not None and g.n > args.budget_n:
        raise CliError(EXIT_TIME, f"n={g.n} exceeds --budget-n {args.budget_n}")
    res = {"omega": max_clique_size(g), "alpha": max_stable_set_size(g), "chi": exact_chromatic(g)}
    doc = {k: {"value": r.value, "witness": list(r.witness)} for k, r in res.items()}
    human = " ".join(f"{k}={r.value}" for k, r in res.items())
    tsv = "omega\talpha\tchi\n" + "\t".join(str(r.value) for r in res.values()) + "\n"
    _emit(args, doc, human, tsv)
    return EXIT_OK


def cmd_gen(args) -> int:
    out = Path(args.out) if args.out else None
    if args.kind == "cycle-blowup":
        g, b = cycle_blowup(args.len, args.k)
        files = {
            f"C{args.len}_{args.k}.col": write_dimacs(g),
            f"C{args.len}_{args.k}.json": dumps(graph_to_json(g)),
            f"C{args.len}_{args.k}.blowup.json": dumps(b.to_json()),
        }
    else:
        corpus = generate_skeleton_corpus(
            args.seed, args.max_vertices, args.max_steps, min_hole=args.min_hole
        )
        files = {f"corpus_seed{args.seed}.json": dumps([e.to_json() for e in corpus])}
    if out is None:
        for name, text in files.items():
            if name.endswith(".json"):
                sys.stdout.write(text)
                break
        return EXIT_OK
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text)
    sys.stderr.write("".join(f"wrote {out / name}\n" for name in files))
    return EXIT_OK


def cmd_tighten(args) -> int:
    cap = args.budget_n if args.budget_n is not None else 24
    table = tightness_table(args.qq, args.k_max, cap=cap)
    human = "\n".join(
        f"q={r.q} k={r.k} n={r.n} omega={r.omega} chi={r.exact_chi} bound={r.bound} tight={r.tight}"
        for r in table.rows
    ) + ("\n(truncated)" if table.truncated else "")
    _emit(args, table.to_json(), human, table.to_tsv())
    return EXIT_OK if all(r.tight for r in table.rows) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv", "human"], default="json")
    common.add_argument("--budget-n", type=int, default=None, help="vertex cap for exact solvers")
    common.add_argument("--budget-time", type=int, default=None, help="wall-clock limit in seconds")
    common.add_argument("-o", "--output", default=None, help="write the document here instead of stdout")
    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--p", type=int, default=5)
    params.add_argument("--q", type=int, default=2)

    parser = argparse.ArgumentParser(prog="capcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="structural report for a graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("color", parents=[common, params], help="color a clique blowup")
    p.add_argument("input")
    p.add_argument("--no-recognize", action="store_true", help="require an explicit BlowupMap")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exact omega, alpha and chi")
    p.add_argument("input")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="generate graphs")
    p.add_argument("kind", choices=["cycle-blowup", "corpus"])
    p.add_argument("--len", type=int, default=5)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=18)
    p.add_argument("--max-steps", type=int, default=3)
    p.add_argument("--min-hole", type=int, default=5)
    p.add_argument("--out", default=None, help="output directory")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tighten", parents=[common], help="tightness table on odd-hole blowups")
    p.add_argument("qq", metavar="q", type=int)
    p.add_argument("k_max", type=int)
    p.set_defaults(func=cmd_tighten)
    return parser


def _on_alarm(signum, frame):
    raise CliError(EXIT_TIME, "time budget exceeded")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget_time is not None:
        if args.budget_time <= 0:
            parser.error("--budget-time must be positive")
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.budget_time)
    if args.budget_n is not None and args.budget_n <= 0:
        parser.error("--budget-n must be positive")
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"capcolor: {exc}\n")
        if exc.payload is not None:
            sys.stdout.write(dumps(exc.payload))
        return exc.code
    finally:
        if args.budget_time is not None:
            signal.alarm(0)


if __name__ == "__main__":
    sys.exit(main())
