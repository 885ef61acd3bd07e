"""Command-line entry point: ``replab <command> ...``.

Exit status is 0 on success, 1 when a check finds a counterexample (or a
word contains a forbidden factor), and 2 on malformed input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import discovery, enumeration, morphisms, repro, tree
from .words import (AvoidanceSpec, ExponentThreshold, ReplabError, Word,
                    find_violation)


def _power(text: str) -> ExponentThreshold:
    try:
        return ExponentThreshold.parse(text)
    except ReplabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {v}")
    return v


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _emit(obj, fmt: str = "json", out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = obj if isinstance(obj, list) else [obj]
        keys = list(rows[0]) if rows else []
        writer.writerow(keys)
        for r in rows:
            writer.writerow([r[k] for k in keys])
        out.write(buf.getvalue())
    else:
        rows = obj if isinstance(obj, list) else [obj]
        for r in rows:
            if isinstance(r, dict):
                out.write(" ".join(f"{k}={r[k]}" for k in sorted(r)) + "\n")
            else:
                out.write(f"{r}\n")


def _spec(args) -> AvoidanceSpec:
    return AvoidanceSpec(args.min_square, args.power)


def _registry(args) -> dict:
    if args.registry:
        return morphisms.load_registry(args.registry)
    return morphisms.load_registry()


def _add_spec(p, required=True, default_l=None, default_power=None):
    p.add_argument("--min-square", type=_positive, required=required and default_l is None,
                   default=default_l, metavar="L", help="forbid squares yy with |y| >= L")
    p.add_argument("--power", type=_power, required=required and default_power is None,
                   default=default_power, metavar="STR",
                   help="power threshold: inf | N | N+ | P/Q | P/Q+ ('+' = strict)")


# --- commands ---------------------------------------------------------------

def cmd_detect(args) -> int:
    w = Word.parse(args.word)
    v = find_violation(w, _spec(args))
    _emit({"word": str(w), "l": args.min_square, "power": str(args.power),
           "avoids": v is None, "violation": None if v is None else v.as_dict()}, args.format)
    return 0 if v is None else 1


def cmd_tree(args) -> int:
    outcome = tree.explore(_spec(args), args.max_depth, workers=args.threads)
    _emit(outcome.as_dict(), args.format)
    return 0


def cmd_enumerate(args) -> int:
    table = enumeration.count_avoiding(_spec(args), args.max_n)
    _emit([{"n": n, "count": c} for n, c in table.rows()], args.format)
    return 0


def cmd_forbidden(args) -> int:
    fs = enumeration.minimal_forbidden(_spec(args), args.max_forbidden_len)
    sys.stdout.write(fs.to_text())
    return 0


def _read_forbidden(path: str) -> enumeration.ForbiddenSet:
    with open(path, encoding="utf-8") as fh:
        return enumeration.ForbiddenSet.of(line.strip() for line in fh if line.strip())


def cmd_growth_upper(args) -> int:
    if args.forbidden_file:
        fs = _read_forbidden(args.forbidden_file)
    else:
        if args.min_square is None or args.power is None:
            raise ReplabError("growth upper needs --forbidden-file or --min-square and --power")
        fs = enumeration.minimal_forbidden(_spec(args), args.max_forbidden_len)
    _emit(enumeration.growth_upper(fs).as_dict(), args.format)
    return 0


def cmd_growth_lower(args) -> int:
    width = args.width
    if args.morphism:
        width = morphisms.get(args.morphism, _registry(args)).width
    if width is None:
        raise ReplabError("growth lower needs --width or --morphism")
    est = enumeration.growth_lower_from_morphism(width, args.base)
    d = est.as_dict()
    d["width"] = width
    _emit(d, args.format)
    return 0


def cmd_morphism_list(args) -> int:
    reg = _registry(args)
    _emit([reg[k].as_dict() for k in sorted(reg)], args.format)
    return 0


def cmd_morphism_apply(args) -> int:
    m = morphisms.get(args.morphism, _registry(args))
    w = Word.parse(args.word, m.source_alphabet)
    _emit({"morphism": m.name, "word": str(w), "image": str(morphisms.apply(m, w))}, args.format)
    return 0


def cmd_morphism_verify(args) -> int:
    m = morphisms.get(args.morphism, _registry(args))
    if args.min_square is not None and args.power is not None:
        spec = _spec(args)
    elif args.morphism in morphisms.TARGETS:
        spec = morphisms.TARGETS[args.morphism]
    else:
        raise ReplabError(f"no default spec for {args.morphism!r}; pass --min-square and --power")
    verdict = morphisms.verify(m, spec, args.source_len)
    verdict["distinguishing_lengths"] = morphisms.distinguishing_lengths(m)
    _emit(verdict, args.format)
    return 0 if verdict["passed"] else 1


def cmd_morphism_generate(args) -> int:
    w = morphisms.generate_avoiding(args.morphism, args.length, _registry(args))
    _emit({"morphism": args.morphism, "length": len(w), "word": str(w)}, args.format)
    return 0


def cmd_discover_blocks(args) -> int:
    a = discovery.block_filter(_spec(args), args.k, args.max_blocks, args.max_len)
    _emit(a.as_dict(), args.format)
    return 0


def cmd_discover_avoided(args) -> int:
    m = morphisms.get(args.morphism, _registry(args))
    rep = discovery.infer_avoided_blocks(m, _spec(args), args.window)
    _emit(rep.as_dict(), args.format)
    return 0


def cmd_discover_propose(args) -> int:
    spec = _spec(args)
    analysis = discovery.block_filter(spec, args.k, args.alphabet, args.max_len)
    cands = discovery.propose_morphisms(spec, args.k, args.alphabet, analysis=analysis)
    # "morphisms" makes the output loadable with --registry
    _emit({"analysis": analysis.as_dict(), "morphisms": [c.as_dict() for c in cands]}, args.format)
    return 0


def cmd_repro(args) -> int:
    rows = repro.run_all(include_discovery=not args.skip_discovery)
    ok = all(r["passed"] for r in rows)
    if args.format == "json":
        # timings vary between runs; keep the report byte-stable
        for r in rows:
            r.pop("seconds")
        _emit({"passed": ok, "checks": rows}, "json")
    else:
        for r in rows:
            sys.stdout.write(f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']}  ({r['seconds']}s)\n")
    return 0 if ok else 1


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--registry", metavar="PATH",
                        help=f"morphism registry JSON (default: ${morphisms.REGISTRY_ENV} or bundled)")
    common.add_argument("--threads", type=_positive, default=1)

    parser = argparse.ArgumentParser(prog="replab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="find the first forbidden factor of a word")
    p.add_argument("--word", required=True)
    _add_spec(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("tree", parents=[common], help="explore the tree of avoiding words")
    _add_spec(p)
    p.add_argument("--max-depth", type=_positive, default=tree.DEFAULT_MAX_DEPTH)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("enumerate", parents=[common], help="count avoiding words by length")
    _add_spec(p)
    p.add_argument("--max-n", type=_non_negative, default=25)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("forbidden", parents=[common], help="list minimal forbidden words")
    _add_spec(p)
    p.add_argument("--max-forbidden-len", type=_positive, default=12)
    p.set_defaults(func=cmd_forbidden)

    growth = sub.add_parser("growth", help="growth-rate bounds").add_subparsers(dest="which", required=True)
    p = growth.add_parser("upper", parents=[common])
    _add_spec(p, required=False)
    p.add_argument("--max-forbidden-len", type=_positive, default=12)
    p.add_argument("--forbidden-file", metavar="PATH", help="newline-separated forbidden words")
    p.set_defaults(func=cmd_growth_upper)
    p = growth.add_parser("lower", parents=[common])
    p.add_argument("--width", type=_positive)
    p.add_argument("--morphism", metavar="NAME")
    p.add_argument("--base", type=float, default=enumeration.SQUAREFREE_TERNARY_GROWTH)
    p.set_defaults(func=cmd_growth_lower)

    morph = sub.add_parser("morphism", help="uniform morphisms").add_subparsers(dest="which", required=True)
    p = morph.add_parser("list", parents=[common])
    p.set_defaults(func=cmd_morphism_list)
    p = morph.add_parser("apply", parents=[common])
    p.add_argument("--morphism", required=True, metavar="NAME")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_morphism_apply)
    p = morph.add_parser("verify", parents=[common])
    p.add_argument("morphism", nargs="?", metavar="NAME")
    p.add_argument("--morphism", dest="morphism_opt", metavar="NAME")
    _add_spec(p, required=False)
    p.add_argument("--source-len", type=_positive, default=5)
    p.set_defaults(func=cmd_morphism_verify)
    p = morph.add_parser("generate", parents=[common])
    p.add_argument("--morphism", required=True, metavar="NAME")
    p.add_argument("--length", type=_non_negative, required=True)
    p.set_defaults(func=cmd_morphism_generate)

    disc = sub.add_parser("discover", help="morphism discovery heuristics").add_subparsers(
        dest="which", required=True)
    p = disc.add_parser("blocks", parents=[common])
    _add_spec(p)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--max-blocks", type=_positive, default=3)
    p.add_argument("--max-len", type=_positive, required=True)
    p.set_defaults(func=cmd_discover_blocks)
    p = disc.add_parser("avoided", parents=[common])
    p.add_argument("--morphism", required=True, metavar="NAME")
    _add_spec(p)
    p.add_argument("--window", type=_positive, default=2)
    p.set_defaults(func=cmd_discover_avoided)
    p = disc.add_parser("propose", parents=[common])
    _add_spec(p)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--alphabet", type=_positive, default=3)
    p.add_argument("--max-len", type=_positive, required=True)
    p.set_defaults(func=cmd_discover_propose)

    p = sub.add_parser("repro", parents=[common], help="recompute every published number")
    p.add_argument("--skip-discovery", action="store_true", help="skip the slow k=10 block search")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is cmd_morphism_verify:
        args.morphism = args.morphism or args.morphism_opt
        if not args.morphism:
            parser.error("morphism verify: a morphism name is required")
    try:
        return args.func(args)
    except ReplabError as exc:
        sys.stderr.write(f"replab: error: {exc}\n")
        return 2
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"replab: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
