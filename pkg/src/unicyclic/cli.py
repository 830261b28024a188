"""Command-line interface: compute, build, formula, enumerate, search, verify."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import formulas as fm
from .enumeration import DEFAULT_CEILING, ClassFilter, EnumerationError, extremal_search, filtered_catalog
from .families import FamilyParameterError, FamilySpec, build_U
from .graph import GraphError, degree_distance, reverse_degree_distance, structural_profile, transmission, wiener
from .graph6 import Graph6Error, read_graph6, to_graph6
from .verify import VerifyError, claim_ids, format_table, verify_all, verify_claim

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep argparse's exit code 2 but route through our handler
        raise UsageError(message)


@contextmanager
def _open_out(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _rows_out(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows if len(rows) != 1 else rows[0], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    else:
        if not rows:
            return
        cols = list(rows[0])
        cells = [[str(r.get(c, "")) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


# compute


def _cmd_compute(args) -> int:
    src = open(args.input) if args.input else sys.stdin
    try:
        rows = []
        for lineno, g in read_graph6(src):
            try:
                report = structural_profile(g)
            except GraphError as exc:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            rows.append({"line": lineno, "graph6": to_graph6(g), **report.to_dict()})
    finally:
        if args.input:
            src.close()
    with _open_out(args.output) as out:
        _rows_out(rows, args.format, out)
    return EXIT_OK


# build


def _cmd_build(args) -> int:
    spec = FamilySpec(args.n, args.m, args.d, args.a, args.b, args.k)
    real = build_U(spec)
    g6 = to_graph6(real.graph)
    with _open_out(args.output) as out:
        if args.format == "json":
            json.dump({"spec": spec.label(), "graph6": g6, "landmarks": real.landmarks}, out, indent=2)
            out.write("\n")
        else:
            out.write(g6 + "\n")
            if args.landmarks:
                for name, v in real.landmarks.items():
                    sys.stderr.write(f"{name}={v}\n")
    return EXIT_OK


# formula


def _u_graph(p: dict):
    return build_U(FamilySpec(p["n"], p["m"], p["d"], p["a"], p["b"])).graph


def _wiener_direct(p: dict):
    return wiener(_u_graph(p))


def _transmission_direct(p: dict):
    real = build_U(FamilySpec(p["n"], p["m"], p["d"], p["a"], p["b"]))
    name = {"vhalf": f"v{p['m'] // 2}"}.get(p["role"], p["role"])
    return transmission(real.graph, real[name])


def _pair_direct(builder, invariant, count: int = 2):
    def direct(p: dict):
        first, second = builder(**p)[:count]
        return invariant(first) - invariant(second)

    return direct


def _rdd_direct(p: dict):
    return reverse_degree_distance(build_U(fm.rdd_family(p["case"], p["n"], p.get("p"))).graph)


def _dd_direct(p: dict):
    return degree_distance(build_U(fm.rdd_family(p["case"], p["n"], p.get("p"))).graph)


# name -> (evaluator, direct oracle for the formula's own parameters)
FORMULAS: dict[str, tuple[Callable, Optional[Callable]]] = {
    "wiener_closed": (fm.wiener_closed, _wiener_direct),
    "transmission_closed": (fm.transmission_closed, _transmission_direct),
    "delta_lemma3": (fm.delta_lemma3, None),
    "delta_lemma4": (fm.delta_lemma4, None),
    "delta_lemma5": (fm.delta_lemma5, _pair_direct(fm.lemma5_pair, degree_distance)),
    "delta_lemma7": (fm.delta_lemma7, None),
    "delta_lemma10": (fm.delta_lemma10, _pair_direct(fm.lemma10_pair, reverse_degree_distance)),
    "delta_lemma11": (fm.delta_lemma11, _pair_direct(fm.lemma11_pair, reverse_degree_distance)),
    "rdd_closed": (fm.rdd_closed, _rdd_direct),
    "dd_closed": (fm.dd_closed, _dd_direct),
}

# realization parameters accepted instead of the formula's own parameters
_REALIZED = {
    "delta_lemma3": (fm.lemma3_pair, degree_distance, [{"m", "a", "b", "i", "j", "t", "h"}]),
    "delta_lemma4": (fm.lemma4_pair, degree_distance, [{"m", "a", "b", "i", "j", "t", "h"}]),
    "delta_lemma7": (fm.lemma7_pair, reverse_degree_distance, [{"n", "m", "d"}, {"n", "m", "d", "a", "b"}]),
}


def _parse_params(text: str) -> dict:
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--params is not valid JSON: {exc}") from exc
    else:
        data = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            if "=" not in item:
                raise UsageError(f"--params entry {item!r} is not key=value")
            key, value = item.split("=", 1)
            data[key.strip()] = value.strip()
    out = {}
    for key, value in data.items():
        if key in ("role", "case", "parity"):
            out[key] = str(value)
        else:
            try:
                out[key] = int(value)
            except (TypeError, ValueError) as exc:
                raise UsageError(f"parameter {key}={value!r} is not an integer") from exc
    return out


def _value(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _cmd_formula(args) -> int:
    if args.name not in FORMULAS:
        raise UsageError(f"unknown formula {args.name!r}; choose from {', '.join(FORMULAS)}")
    evaluator, direct = FORMULAS[args.name]
    params = _parse_params(args.params)
    realized = _REALIZED.get(args.name)
    try:
        if realized and set(params) in realized[2]:
            builder, invariant, _ = realized
            built = builder(**params)
            first, second = built[0], built[1]
            fparams = built[2] if isinstance(built[2], dict) else {"gamma": built[2], "n": params["n"]}
            value = evaluator(**fparams)
            direct_value = invariant(first) - invariant(second)
            params = {**params, "formula_params": fparams}
        else:
            value = evaluator(**params)
            direct_value = direct(params) if direct else None
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.name}: {exc}") from exc
    row = {
        "formula": args.name,
        "params": params,
        "value": _value(value),
        "direct_value": _value(direct_value),
        "match": None if direct_value is None else value == direct_value,
    }
    with _open_out(args.output) as out:
        if args.format == "json":
            json.dump(row, out, indent=2)
            out.write("\n")
        else:
            _rows_out([{**row, "params": json.dumps(params)}], args.format, out)
    return EXIT_OK if row["match"] is not False else EXIT_FAIL


# enumerate and search


def _filter(args) -> ClassFilter:
    return ClassFilter(girth=args.girth, diameter=args.diameter, pendant_count=args.pendants, max_degree=args.max_degree)


def _cmd_enumerate(args) -> int:
    entries = filtered_catalog(args.n, _filter(args), ceiling=args.ceiling, strategy=args.strategy)
    with _open_out(args.output) as out:
        if args.format == "table" or args.format == "graph6":
            for e in entries:
                out.write(to_graph6(e.graph) + "\n")
        else:
            _rows_out([{"graph6": to_graph6(e.graph), **e.profile.to_dict()} for e in entries], args.format, out)
    return EXIT_OK


def _cmd_search(args) -> int:
    res = extremal_search(args.n, _filter(args), args.objective, args.direction, ceiling=args.ceiling)
    with _open_out(args.output) as out:
        if args.format == "json":
            json.dump(res.to_dict(), out, indent=2)
            out.write("\n")
        else:
            rows = [{"optimum": res.optimum, "graph6": g6, "key": k.hex()} for k, g6 in res.witnesses]
            _rows_out(rows, args.format, out)
    return EXIT_OK


# verify


def _cmd_verify(args) -> int:
    if args.all:
        reports = verify_all(args.n_max, ceiling=args.ceiling)
    else:
        reports = [verify_claim(c, args.n_max, ceiling=args.ceiling) for c in args.claim]
    failed = any(r.status == "fail" for r in reports)
    with _open_out(args.output) as out:
        if args.format == "json":
            json.dump([r.to_dict() for r in reports], out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            _rows_out(
                [{"claim": r.claim_id, "status": r.status, "n_max": r.n_max, "points": r.checked, "seconds": round(r.wall_time, 3)} for r in reports],
                "csv",
                out,
            )
        else:
            out.write(format_table(reports) + "\n")
            for r in reports:
                for ce in r.counterexamples[:3]:
                    out.write(f"  {r.claim_id}: {json.dumps(ce)}\n")
    return EXIT_FAIL if failed else EXIT_OK


def _add_filters(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", "--m", dest="girth", type=int)
    p.add_argument("--diameter", "--d", dest="diameter", type=int)
    p.add_argument("--pendants", "--p", dest="pendants", type=int)
    p.add_argument("--max-degree", dest="max_degree", type=int)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unicyclic", description="Degree distance tools for unicyclic graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("json", "csv", "table"), default="json"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--output", help="write here instead of standard output")

    p = sub.add_parser("compute", help="invariants of graph6 graphs")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("build", help="construct U^k_{n,m,d}(a,b)")
    for name in ("n", "m", "d", "a", "b"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--landmarks", action="store_true", help="also print landmarks to stderr")
    common(p, ("graph6", "json"), "graph6")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("formula", help="evaluate a closed form against direct computation")
    p.add_argument("--name", required=True, choices=sorted(FORMULAS))
    p.add_argument("--params", required=True, help="key=value,... or a JSON object")
    common(p)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("enumerate", help="list unicyclic graphs up to isomorphism")
    _add_filters(p)
    p.add_argument("--strategy", choices=("forest", "tree-edge"), default="forest")
    common(p, ("graph6", "json", "csv", "table"), "graph6")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="extremal graphs of a class")
    _add_filters(p)
    p.add_argument("--objective", choices=("D'", "rD'", "W", "dd", "rdd", "wiener"), default="D'")
    p.add_argument("--direction", choices=("min", "max"), default="min")
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="check the registered claims")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--claim", action="append", choices=claim_ids())
    group.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    common(p, default="table")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
    except (Graph6Error, FamilyParameterError, EnumerationError, VerifyError, GraphError) as exc:
        sys.stderr.write(f"error: {exc}\n")
    except (ArithmeticError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
