"""Command-line front end.

Exit status: 0 success, 1 a law failed, 2 the input did not parse,
3 the input parsed but broke an invariant.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import axiomcheck as A
from . import faa as F
from .delta import DeltaMap, DeltaValidationError, delta_from_obj, delta_to_obj
from .derivative import linearize, partial_n, total_n
from .polycat import (
    ArityError, ParseError, PolyMap, diff, format_polymap, parse_polymap,
    polymap_from_obj, polymap_to_obj, is_d_constant, is_d_linear,
)
from .semiring import SemiringError, parse_semiring
from .ultrametric import distance

EXIT_OK, EXIT_LAW, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3


class InputError(Exception):
    def __init__(self, status, message):
        self.status = status
        super().__init__(message)


def read_value(text, ring):
    """A PolyMap in text syntax, or a PolyMap / FaaSeq / DeltaMap in JSON."""
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise InputError(EXIT_PARSE, f"parse error: invalid JSON at position {exc.pos}: {exc.msg}")
        try:
            if "terms" in obj:
                return F.faaseq_from_obj(obj, ring)
            if "first" in obj:
                return delta_from_obj(obj, ring)
            return polymap_from_obj(obj, ring)
        except (ArityError, SemiringError, DeltaValidationError) as exc:
            raise InputError(EXIT_INVALID, f"invalid input: {exc}")
        except ValueError as exc:
            raise InputError(EXIT_PARSE, f"parse error: {exc}")
    try:
        return parse_polymap(s, ring)
    except ParseError as exc:
        raise InputError(EXIT_PARSE, f"parse error: {exc}")
    except (ArityError, SemiringError) as exc:
        raise InputError(EXIT_INVALID, f"invalid input: {exc}")


def _as_poly(v):
    if not isinstance(v, PolyMap):
        raise InputError(EXIT_INVALID, "invalid input: expected a polynomial map")
    return v


def _as_seq(v, truncation):
    if isinstance(v, PolyMap):
        return F.lift(v, truncation)
    if isinstance(v, F.FaaSeq):
        try:
            return F.validate(v)
        except F.FaaValidationError as exc:
            raise InputError(EXIT_INVALID, f"invalid sequence ({exc.invariant}): {exc}")
    raise InputError(EXIT_INVALID, "invalid input: expected a Faà di Bruno sequence")


def to_obj(v):
    if isinstance(v, PolyMap):
        return polymap_to_obj(v)
    if isinstance(v, F.FaaSeq):
        return F.faaseq_to_obj(v)
    if isinstance(v, DeltaMap):
        return delta_to_obj(v)
    if isinstance(v, list):
        return [to_obj(x) for x in v]
    if hasattr(v, "to_obj"):
        return v.to_obj()
    return v


def to_text(v):
    if isinstance(v, PolyMap):
        return format_polymap(v)
    if isinstance(v, F.FaaSeq):
        return "\n".join(f"{n}: {format_polymap(t)}" for n, t in enumerate(v.terms))
    if isinstance(v, DeltaMap):
        return f"({format_polymap(v.first)}, {format_polymap(v.second)})"
    if isinstance(v, list):
        return "\n\n".join(to_text(x) for x in v)
    return str(v)


def emit(v, fmt, out):
    if fmt == "json":
        out.write(json.dumps(to_obj(v), sort_keys=True) + "\n")
    else:
        out.write(to_text(v) + "\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="int", help="nat, int, rat or modp:<p> (default int)")
    common.add_argument("--order", type=int, default=1, help="derivative order (default 1)")
    common.add_argument("--truncation", type=int, default=4, help="sequence truncation N (default 4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--in", dest="inputs_from", action="append", default=[], metavar="PATH",
                        help="read an input from a file (repeatable; read after inline inputs)")

    p = argparse.ArgumentParser(prog="cdiffcat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("diff", "total derivative D[f]"),
        ("partial", "n-th derivative ∂ⁿ[f] (use --order)"),
        ("total", "iterated total derivative Dⁿ[f] (use --order)"),
        ("linearize", "L[f] = D[f] ∘ <0, 1>"),
        ("lift", "the sequence (∂⁰f, .., ∂ᴺf) (use --truncation)"),
        ("faa-compose", "compose two sequences: G then F are given, result is G ∘ F"),
        ("faa-diff", "differential of a sequence"),
        ("distance", "ultrametric distance between two sequences"),
        ("decompose", "homogeneous parts of a sequence"),
        ("validate", "check a map, sequence or Δ pair against its invariants"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("exprs", nargs="*", help="inline inputs")
    ck = sub.add_parser("check", parents=[common], help="run a law suite")
    ck.add_argument("suite", choices=("cd", "hd", "cofree", "algebra", "all"))
    ck.add_argument("--instance", choices=("polycat", "faa", "delta", "all"), default="all",
                    help="category instance for the cd suite")
    ck.add_argument("--samples", type=int, default=None, help="samples per law (default 100)")
    ck.add_argument("--mutation", choices=sorted(A.MUTATIONS), default=None,
                    help="corrupt the polynomial combinator (cd suite, polycat instance)")
    return p


def _inputs(args, ring, want):
    texts = list(args.exprs)
    for path in args.inputs_from:
        try:
            with open(path, encoding="utf-8") as fh:
                texts.append(fh.read())
        except OSError as exc:
            raise InputError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}")
    if len(texts) != want:
        raise InputError(EXIT_PARSE, f"parse error: expected {want} input(s), got {len(texts)}")
    return [read_value(t, ring) for t in texts]


def _run_check(args, ring):
    try:
        cfg = A.config_from(seed=args.seed, ring=ring, truncation=args.truncation, samples=args.samples)
    except ValueError as exc:
        raise InputError(EXIT_INVALID, f"invalid configuration: {exc}")
    reports = []
    if args.suite in ("cd", "all"):
        instances = ("polycat", "faa", "delta") if args.instance == "all" else (args.instance,)
        for inst in instances:
            mut = A.MUTATIONS[args.mutation] if args.mutation and inst == "polycat" else None
            reports += A.check_cd(inst, cfg, mut)
    if args.suite in ("hd", "all"):
        reports += A.check_hd(cfg)
    if args.suite in ("cofree", "all"):
        reports += A.check_cofree_criteria(cfg)
    if args.suite in ("algebra", "all"):
        reports += A.check_algebra_laws(cfg)
    return reports


def run(argv, out=sys.stdout, err=sys.stderr):
    args = build_parser().parse_args(argv)
    try:
        try:
            ring = parse_semiring(args.ring)
        except SemiringError as exc:
            raise InputError(EXIT_PARSE, f"parse error: {exc}")
        cmd = args.command

        if cmd == "check":
            reports = _run_check(args, ring)
            if args.format == "json":
                out.write(A.reports_to_json(reports) + "\n")
            else:
                out.write(A.reports_table(reports) + "\n")
            return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW

        if cmd in ("diff", "partial", "total", "linearize"):
            (f,) = _inputs(args, ring, 1)
            f = _as_poly(f)
            if args.order < 0:
                raise InputError(EXIT_INVALID, "invalid input: order must be non-negative")
            result = {"diff": lambda: diff(f),
                      "partial": lambda: partial_n(f, args.order),
                      "total": lambda: total_n(f, args.order),
                      "linearize": lambda: linearize(f)}[cmd]()
        elif cmd == "lift":
            (f,) = _inputs(args, ring, 1)
            result = F.lift(_as_poly(f), args.truncation)
        elif cmd == "faa-compose":
            g, f = (_as_seq(v, args.truncation) for v in _inputs(args, ring, 2))
            if g.dom != f.cod:
                raise InputError(EXIT_INVALID, f"invalid input: cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
            result = F.faa_compose(g, f)
        elif cmd == "faa-diff":
            (f,) = _inputs(args, ring, 1)
            f = _as_seq(f, args.truncation)
            if f.order < 1:
                raise InputError(EXIT_INVALID, "invalid input: faa-diff needs truncation >= 1")
            result = F.faa_diff(f)
        elif cmd == "distance":
            f, g = (_as_seq(v, args.truncation) for v in _inputs(args, ring, 2))
            try:
                result = distance(f, g)
            except ArityError as exc:
                raise InputError(EXIT_INVALID, f"invalid input: {exc}")
        elif cmd == "decompose":
            (f,) = _inputs(args, ring, 1)
            result = F.decompose(_as_seq(f, args.truncation))
        elif cmd == "validate":
            (v,) = _inputs(args, ring, 1)
            if isinstance(v, F.FaaSeq):
                _as_seq(v, args.truncation)
                msg = f"valid Faà di Bruno sequence {v.dom}->{v.cod} of order {v.order}"
            elif isinstance(v, DeltaMap):
                msg = f"valid Δ pair {v.dom}->{v.cod}"
            else:
                tags = []
                if is_d_linear(v):
                    tags.append("D-linear")
                if is_d_constant(v):
                    tags.append("D-constant")
                msg = f"valid map {v.dom}->{v.cod}" + (f" ({', '.join(tags)})" if tags else "")
            result = {"valid": True, "message": msg} if args.format == "json" else msg
        else:  # pragma: no cover - argparse restricts commands
            raise InputError(EXIT_PARSE, f"unknown command {cmd}")
    except InputError as exc:
        err.write(str(exc) + "\n")
        return exc.status
    emit(result, args.format, out)
    return EXIT_OK


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
