"""Command-line surface: gen, verify, solve, formula, certify, oracle.

Exit codes: 0 success, 1 parse or usage error, 2 violation or refuted
decision, 3 budget exhausted, 4 certification failure.  Output files are
byte-deterministic; timestamps never appear in file content.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .certificates import (
    counterexample,
    counterexample_pair,
    reverify_certificate,
)
from .coloring import format_coloring, is_odd_coloring, parity_report, parse_coloring, proper_violations
from .embedding import embed_family, verify_embedding
from .errors import (
    CertificationError,
    InvalidColoringError,
    InvalidParameterError,
    InvalidRotationError,
    ParseError,
)
from .families import join_formula_case, union_formula, wheel_formula, wheel_formula_case
from .graphs import (
    Bipyramid,
    BipyramidUnion,
    Complete,
    Cycle,
    Empty,
    JoinCycleEmpty,
    Wheel,
    build,
    from_dimacs,
    to_dimacs,
)
from .solver import Budget, chromatic_strong_odd, decide_k, brute_force_so

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VIOLATION = 2
EXIT_BUDGET = 3
EXIT_CERT = 4

_FAMILIES = {
    "cycle": (Cycle, ("n",)),
    "empty": (Empty, ("m",)),
    "complete": (Complete, ("k",)),
    "wheel": (Wheel, ("n",)),
    "join-cycle-empty": (JoinCycleEmpty, ("n", "m")),
    "bipyramid": (Bipyramid, ("n",)),
    "g-graph": (Bipyramid, ("n",)),  # alternate spelling
    "bipyramid-union": (BipyramidUnion, ("m", "n")),
    "union-g": (BipyramidUnion, ("m", "n")),  # alternate spelling
}


def _parse_duration(text: str) -> float:
    scale = 1.0
    if text and text[-1] in "smh":
        scale = {"s": 1.0, "m": 60.0, "h": 3600.0}[text[-1]]
        text = text[:-1]
    try:
        value = float(text)
    except ValueError:
        raise InvalidParameterError(f"cannot parse duration {text!r}") from None
    if value <= 0:
        raise InvalidParameterError("duration must be positive")
    return value * scale


def _budget_from(args) -> Budget | None:
    max_nodes = getattr(args, "max_nodes", None)
    timeout = getattr(args, "timeout", None)
    if max_nodes is None and timeout is None:
        return None
    return Budget(max_nodes, _parse_duration(timeout) if timeout else None)


def _family_spec(args):
    kind = args.family
    if kind not in _FAMILIES:
        raise InvalidParameterError(f"unknown family {kind!r}; choose from {sorted(_FAMILIES)}")
    cls, params = _FAMILIES[kind]
    values = []
    for p in params:
        v = getattr(args, p, None)
        if v is None:
            raise InvalidParameterError(f"family {kind!r} needs --{p}")
        values.append(v)
    return cls(*values)


def _load_graph(path: str):
    return from_dimacs(Path(path).read_text(encoding="utf-8"))


def _cmd_gen(args) -> int:
    spec = _family_spec(args)
    g = build(spec)
    text = to_dimacs(g, include_labels=not args.no_labels)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output} ({g.n} vertices, {g.edge_count} edges)")
    else:
        sys.stdout.write(text)
    if args.embed:
        rot = embed_family(spec)
        faces, ok = verify_embedding(g, rot)
        if args.output:
            import json

            rot_path = args.output + ".rot.json"
            Path(rot_path).write_text(
                json.dumps([list(r) for r in rot.rotation]) + "\n", encoding="utf-8"
            )
            print(f"wrote {rot_path}")
        print(f"euler: {'ok' if ok else 'FAILED'} (V={g.n} E={g.edge_count} F={faces})")
        if not ok:
            return EXIT_VIOLATION
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    col = parse_coloring(Path(args.coloring).read_text(encoding="utf-8"), g.n)
    bad_edges = proper_violations(g, col)
    if bad_edges:
        print(f"improper: {len(bad_edges)} monochromatic edge(s)")
        for u, v in bad_edges:
            print(f"  edge ({u + 1}, {v + 1}) color {col[u]}")
        return EXIT_VIOLATION
    if args.mode == "proper":
        print("proper: ok")
        return EXIT_OK
    if args.mode == "odd":
        if is_odd_coloring(g, col):
            print("odd: ok")
            return EXIT_OK
        print("odd: violated (some vertex has no odd color in its neighborhood)")
        return EXIT_VIOLATION
    report = parity_report(g, col)
    if report.ok:
        print(f"strong-odd: ok ({len(col.palette)} colors)")
        return EXIT_OK
    print(f"strong-odd: violated ({len(report.violations)} even neighborhood class(es))")
    for e in report.violations:
        print(f"  vertex {e.vertex + 1} sees color {e.color} {e.count} times")
    return EXIT_VIOLATION


def _cmd_solve(args) -> int:
    if args.jobs < 1:
        raise InvalidParameterError("--jobs must be >= 1")
    g = _load_graph(args.graph)
    budget = _budget_from(args)
    if args.decide is not None:
        r = decide_k(g, args.decide, budget, order=args.order)
        print(f"answer: {r.answer}")
        print(f"nodes: {r.nodes}")
        print(f"elapsed: {r.seconds:.3f}s")
        if r.answer == "yes":
            print(f"colors: {len(r.witness.palette)}")
            if args.output:
                Path(args.output).write_text(format_coloring(r.witness), encoding="utf-8")
                print(f"wrote {args.output}")
            return EXIT_OK
        return EXIT_VIOLATION if r.answer == "no" else EXIT_BUDGET
    res = chromatic_strong_odd(g, budget, order=args.order)
    print(f"status: {res.status}")
    if res.status == "exact":
        print(f"value: {res.value}")
    else:
        print(f"lower: {res.lower}")
        print(f"upper: {res.upper}")
    print(f"nodes: {res.nodes}")
    print(f"elapsed: {res.seconds:.3f}s")
    if res.witness is not None and args.output:
        Path(args.output).write_text(format_coloring(res.witness), encoding="utf-8")
        print(f"wrote {args.output}")
    return EXIT_OK if res.status == "exact" else EXIT_BUDGET


def _cmd_formula(args) -> int:
    if args.kind == "wheel":
        if len(args.params) != 1:
            raise InvalidParameterError("formula wheel takes one parameter: n")
        value, case = wheel_formula_case(args.params[0])
    elif args.kind == "join":
        if len(args.params) != 2:
            raise InvalidParameterError("formula join takes two parameters: n m")
        value, case = join_formula_case(args.params[0], args.params[1])
    else:
        if len(args.params) != 2:
            raise InvalidParameterError("formula union takes two parameters: m n")
        m, n = args.params
        value = union_formula(m, n)
        case = f"wheel({m}) + wheel({n}) - 1 = {wheel_formula(m)} + {wheel_formula(n)} - 1"
    print(value)
    print(f"case: {case}")
    return EXIT_OK


def _write_bundle(cert, outdir: Path) -> None:
    m, n = cert.family["m"], cert.family["n"]
    stem = f"bipyramid_union_{m}_{n}"
    outdir.mkdir(parents=True, exist_ok=True)
    g = from_dimacs(cert.graph_dimacs)
    labeled = g.with_labels({v: role for v, role in cert.labels})
    (outdir / f"{stem}.cert.json").write_text(cert.to_json(), encoding="utf-8")
    (outdir / f"{stem}.col").write_text(to_dimacs(labeled), encoding="utf-8")
    (outdir / f"{stem}.coloring").write_text(cert.coloring, encoding="utf-8")
    print(f"wrote {outdir / (stem + '.cert.json')}")
    print(f"wrote {outdir / (stem + '.col')}")
    print(f"wrote {outdir / (stem + '.coloring')}")


def _cmd_certify(args) -> int:
    if args.recheck:
        ok, results = reverify_certificate(Path(args.recheck).read_text(encoding="utf-8"))
        for name, good in results:
            print(f"{name}: {'ok' if good else 'FAILED'}")
        if ok:
            print("certificate: ok")
            return EXIT_OK
        print("certificate: FAILED")
        return EXIT_CERT
    budget = _budget_from(args) if args.try_exact else None
    if args.try_exact and budget is None:
        raise InvalidParameterError("--try-exact needs --timeout and/or --max-nodes")
    if args.pair:
        cert = counterexample_pair(args.pair[0], args.pair[1], budget)
    elif args.family == "counterexample":
        if args.n is None:
            raise InvalidParameterError("certify --family counterexample needs --n")
        cert = counterexample(args.n, budget)
    else:
        raise InvalidParameterError("certify needs --pair M N, --family counterexample --n N, or --recheck PATH")
    if not args.output:
        raise InvalidParameterError("certify needs -o DIR to write the bundle")
    _write_bundle(cert, Path(args.output))
    print(f"claimed value: {cert.claimed_value} ({cert.claim_kind})")
    print("all checks passed")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    value, witness = brute_force_so(g)
    print(f"value: {value}")
    if args.output:
        Path(args.output).write_text(format_coloring(witness), encoding="utf-8")
        print(f"wrote {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongodd",
        description="Strong odd coloring toolkit: graph families, exact solver, verifiers, certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph as a DIMACS-style file")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--embed", action="store_true", help="also emit a rotation system and check Euler's formula")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--mode", choices=["proper", "odd", "strong-odd"], default="strong-odd")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="exact value or k-decision for a graph file")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exact", action="store_true")
    group.add_argument("--decide", type=int, metavar="K")
    p.add_argument("--timeout", help="wall-clock limit, e.g. 30, 1.5m, 2h")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--order", choices=["degree", "index"], default="degree")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker cap; the current search is sequential, so any value acts as 1")
    p.add_argument("-o", "--output", help="witness coloring file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("formula", help="closed-form value for wheel, join, or union families")
    p.add_argument("kind", choices=["wheel", "join", "union"])
    p.add_argument("params", type=int, nargs="+")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("certify", help="emit or recheck a counterexample certificate bundle")
    p.add_argument("--family", choices=["counterexample"])
    p.add_argument("--n", type=int)
    p.add_argument("--pair", type=int, nargs=2, metavar=("M", "N"))
    p.add_argument("--recheck", metavar="CERT_JSON")
    p.add_argument("-o", "--output", metavar="DIR")
    p.add_argument("--try-exact", action="store_true",
                   help="attempt a refutation at value-1 within the given budget")
    p.add_argument("--timeout")
    p.add_argument("--max-nodes", type=int)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("oracle", help="brute-force value for a graph file with at most 10 vertices")
    p.add_argument("graph")
    p.add_argument("-o", "--output", help="witness coloring file")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidParameterError, InvalidColoringError, InvalidRotationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
