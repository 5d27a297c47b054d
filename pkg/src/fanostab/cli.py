"""Command-line front end.

Exit codes: 0 success (or every claim holds), 1 a certificate or violation
was produced, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from itertools import combinations

from fanostab import census, constants, detect, stability
from fanostab.hypercore import GENERATORS, FormatError, Hypergraph3, generate, parse, serialize

EXIT_OK, EXIT_CERT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """Exact rational from "p/q" or a decimal literal; no float round trip."""
    try:
        val = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    return val


def _apexes(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"apexes must be comma-separated integers: {text!r}") from None
    if len(vals) != 4 or len(set(vals)) != 4:
        raise argparse.ArgumentTypeError("need four distinct apexes")
    return vals


def _read_hypergraph(path: str) -> Hypergraph3:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse(text)
    except FormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _random_hypergraph(n: int, p: Fraction, seed: int) -> Hypergraph3:
    rng = random.Random(seed)
    return Hypergraph3(n, [t for t in combinations(range(n), 3) if rng.random() < p])


# -- subcommands ------------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.kind == "random":
        if args.n is None:
            raise UsageError("random needs --n")
        if not 0 <= args.p <= 1:
            raise UsageError("--p must lie in [0, 1]")
        H = _random_hypergraph(args.n, args.p, args.seed)
    else:
        try:
            H = generate(args.kind, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(args, serialize(H))
    return EXIT_OK


def cmd_detect(args) -> int:
    H = _read_hypergraph(args.file)
    w = detect.contains_fano(H)
    if args.format == "csv":
        rows = [] if w is None else [list(e) for e in w.edges]
        _emit(args, _dump_csv(["a", "b", "c"], rows))
    else:
        _emit(args, _dump_json({"found": w is not None, "witness": None if w is None else w.to_json()}))
    return EXIT_OK if w is None else EXIT_CERT


def cmd_count(args) -> int:
    H = _read_hypergraph(args.file)
    if args.oracle:
        k, method = census.oracle_count_octahedra(H), "oracle"
    else:
        k, method = census.count_octahedra(H), "fast"
    chk = census.empirical_check(H, k)
    record = {"octahedra": k, "method": method, "n": H.n, "edges": len(H.edges),
              "alpha": str(chk["alpha"]), "applicable": chk["applicable"]}
    if chk["applicable"]:
        record.update(bound=str(chk["bound"]), boundHolds=chk["holds"],
                      guardN=str(chk["guard_n"]), guardMet=chk["guard_met"])
    if args.format == "csv":
        _emit(args, _dump_csv(["key", "value"], [[k_, record[k_]] for k_ in sorted(record)]))
    else:
        _emit(args, _dump_json(record))
    return EXIT_OK


def cmd_links(args) -> int:
    H = _read_hypergraph(args.file)
    if any(not 0 <= a < H.n for a in args.apexes):
        raise UsageError("apex out of range")
    fam = detect.link_structures(H, args.apexes)
    if args.format == "csv":
        _emit(args, _dump_csv(["u", "v", "multiplicity"], [[u, v, m] for (u, v), m in fam.reduced.pairs()]))
    else:
        _emit(args, _dump_json(fam.to_json()))
    return EXIT_OK


def cmd_stability(args) -> int:
    H = _read_hypergraph(args.file)
    try:
        if args.delta1 is not None:
            cfg = stability.StabilityConfig.from_delta1(
                args.delta1, mode=args.mode, drop_lower_order=args.drop_lower_order, seed=args.seed)
        else:
            cfg = stability.StabilityConfig(
                args.delta, mode=args.mode, drop_lower_order=args.drop_lower_order, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = stability.run_stability(H, cfg)
    payload = res.to_json()
    payload["config"] = {"delta": str(cfg.delta), "mode": cfg.mode,
                         "dropLowerOrder": cfg.drop_lower_order, "seed": cfg.seed}
    if args.format == "csv":
        if isinstance(res, stability.PartitionReport):
            rows = [[v, "A"] for v in res.A] + [[v, "B"] for v in res.B]
            rows.sort()
            _emit(args, _dump_csv(["vertex", "side"], rows))
        else:
            cert = payload["certificate"]
            _emit(args, _dump_csv(["key", "value"], [[k, json.dumps(cert[k], sort_keys=True)] for k in sorted(cert)]))
    else:
        _emit(args, _dump_json(payload))
    return EXIT_OK if isinstance(res, stability.PartitionReport) else EXIT_CERT


def cmd_constants(args) -> int:
    if args.action != "verify":
        raise UsageError("only 'constants verify' is supported")
    dmax = args.delta_max if args.delta_max is not None else constants.DELTA_MAX
    try:
        report = constants.verify_inequalities(dmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "table":
        _emit(args, report.table() + "\n")
    elif args.format == "csv":
        rows = [[r.id, str(r.holds).lower(), r.method, str(r.margin[0]), str(r.margin[1]), str(r.strict).lower()]
                for r in report.results.values()]
        _emit(args, _dump_csv(["id", "holds", "method", "margin_lo", "margin_hi", "strict"], rows))
    else:
        _emit(args, _dump_json(report.to_json()))
    return EXIT_OK if report.certified else EXIT_CERT


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fanostab", description="Fano-plane stability toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", help="write the report here instead of stdout")

    g = sub.add_parser("gen", help="write a canonical hypergraph")
    g.add_argument("kind", choices=sorted(GENERATORS) + ["random"])
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=parse_rational, default=Fraction(1, 2), help="edge probability for random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("detect", help="search for a sub-structure")
    d.add_argument("target", choices=["fano"])
    d.add_argument("file")
    common(d)
    d.set_defaults(func=cmd_detect)

    c = sub.add_parser("count", help="count sub-structures")
    c.add_argument("target", choices=["octahedra"])
    c.add_argument("file")
    c.add_argument("--oracle", action="store_true", help="use brute-force enumeration")
    common(c)
    c.set_defaults(func=cmd_count)

    lk = sub.add_parser("links", help="link multigraphs of four apexes")
    lk.add_argument("file")
    lk.add_argument("--apexes", type=_apexes, required=True)
    common(lk)
    lk.set_defaults(func=cmd_links)

    s = sub.add_parser("stability", help="extract the bipartition or a certificate")
    s.add_argument("file")
    dg = s.add_mutually_exclusive_group(required=True)
    dg.add_argument("--delta", type=parse_rational)
    dg.add_argument("--delta1", type=parse_rational, help="give delta_1 instead; delta = (3 delta_1 / 5)^2")
    s.add_argument("--mode", choices=stability.MODES, default="strict")
    s.add_argument("--drop-lower-order", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    common(s)
    s.set_defaults(func=cmd_stability)

    k = sub.add_parser("constants", help="certify the delta constant chain")
    k.add_argument("action", choices=["verify"])
    k.add_argument("--delta-max", type=parse_rational)
    common(k, ("json", "csv", "table"))
    k.set_defaults(func=cmd_constants)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fanostab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
