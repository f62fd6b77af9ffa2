"""Command-line front end: `landscape <command> ...`.

Exit codes: 0 ok, 1 a checked identity failed, 2 unreadable input,
3 budget refusal, 4 precondition of the requested operation violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Optional

from . import _backend
from . import classify as C
from . import construct as K
from . import decompose as D
from . import moments as M
from . import search as S
from .cyclotomic import CycInt
from .gbf import BoolFn, DimensionError, GenBoolFn, from_hex, from_json_obj, to_hex
from .transforms import correlation_identities, gwht

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_BUDGET, EXIT_PRECONDITION = 0, 1, 2, 3, 4
_HEX = set("0123456789abcdefABCDEF")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- function files -------------------------------------------------------

def parse_function(text: str, source: str = "<input>") -> GenBoolFn:
    stripped = text.strip()
    body = stripped[2:] if stripped.lower().startswith("0x") else stripped
    try:
        if body and set(body) <= _HEX and not stripped.startswith(("{", '"')):
            return from_hex(stripped)
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}")
    except (ValueError, DimensionError) as exc:
        raise CliError(EXIT_PARSE, f"{source}: {exc}")
    try:
        return from_json_obj(obj)
    except (ValueError, DimensionError) as exc:
        raise CliError(EXIT_PARSE, f"{source}: {exc}")


def read_function(path: str) -> GenBoolFn:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror}")
    return parse_function(text, path)


def format_function(f, fmt: str) -> str:
    f = f.to_gen() if isinstance(f, BoolFn) else f
    if fmt == "hex":
        try:
            return to_hex(f)
        except ValueError as exc:
            raise CliError(EXIT_PRECONDITION, f"--format hex: {exc}")
    return json.dumps(f.to_json_obj())


def _emit(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- reports --------------------------------------------------------------

def _cyc_json(z: CycInt) -> dict:
    c = z.to_complex()
    return {"coeffs": list(z.coeffs), "display_only": [round(c.real, 6), round(c.imag, 6)]}


def _cyc_text(z: CycInt) -> str:
    c = z.to_complex()
    return f"{list(z.coeffs)}  ~ {c.real:.4f}{c.imag:+.4f}i (display only)"


def analyze_report(f: GenBoolFn) -> dict:
    spectrum = gwht(f)
    profile = C.landscape_profile(f, spectrum)
    report = {
        "function": f.to_json_obj(),
        "spectrum": [_cyc_json(z) for z in spectrum],
        "norm_sq": spectrum.norm_sq().tolist(),
        "landscape": profile is not None,
        "profile": profile.to_json_obj() if profile else None,
        "plateau_order": C.plateau_order_of(profile, f.n),
        "gbent": C.plateau_order_of(profile, f.n) == 0,
        "regularity": None,
        "components": None,
    }
    if profile is not None:
        report["regularity"] = C.regularity(f, spectrum, profile).to_json_obj()
    if f.k >= 2:
        w = D.check_components(f, spectrum)
        report["components"] = {
            "passes": w.passes,
            "counterexample": w.counterexample,
            "disagreements": w.disagreements,
            "closing_claim_violations": len(w.closing_claim_violations),
            "cases": dict(Counter(p.case for p in w.points)),
        }
    return report


def _analyze_text(r: dict, f: GenBoolFn) -> str:
    spectrum = gwht(f)
    lines = [f"n={f.n} k={f.k} values={f.values.tolist()}", "spectrum:"]
    lines += [f"  H({u}) = {_cyc_text(z)}" for u, z in enumerate(spectrum)]
    if r["profile"] is None:
        lines.append("landscape: no")
    else:
        p = r["profile"]
        lines.append(f"landscape: levels {p['levels']} has_zero={p['has_zero']} length={p['length']}")
    s = r["plateau_order"]
    if s is None:
        lines.append("plateaued: no")
    else:
        lines.append(f"plateaued: s={s}" + (" (gbent)" if s == 0 else ""))
    reg = r["regularity"]
    if reg is not None:
        lines.append(f"regular: {'yes' if reg['regular'] else 'no'}  dual={reg['dual']['values']}")
        if reg["exceptional_points"]:
            lines.append(f"  exceptional points: {reg['exceptional_points']}")
        if reg["irregular_points"]:
            lines.append(f"  irregular points: {reg['irregular_points']}")
    comp = r["components"]
    if comp is not None:
        lines.append(
            f"components: {'pass' if comp['passes'] else 'fail'}  cases={comp['cases']}"
            f"  disagreements={comp['disagreements']}"
        )
    return "\n".join(lines)


def _check_budget(f: GenBoolFn, budget: int) -> None:
    if f.size > budget:
        raise CliError(EXIT_BUDGET, f"function has {f.size} points, budget is {budget}")


# -- commands -------------------------------------------------------------

def cmd_analyze(args) -> int:
    f = read_function(args.input)
    _check_budget(f, args.budget)
    r = analyze_report(f)
    _emit(json.dumps(r) if args.json else _analyze_text(r, f), args.output)
    return EXIT_OK


def _perm(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise CliError(EXIT_PARSE, f"--perm: expected comma-separated integers, got {text!r}")


def _boolean(f: GenBoolFn, name: str) -> BoolFn:
    if f.k != 1:
        raise CliError(EXIT_PRECONDITION, f"{name} must be Boolean (k=1)")
    return f.to_boolfn()


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "lift":
        out = K.affine_lift(read_function(args.input), args.bit)
    elif kind == "pad":
        out = K.pad_plateaued(read_function(args.input), args.t)
    elif kind == "mm":
        tail = read_function(args.tail) if args.tail else None
        perm = _perm(args.perm) if args.perm else list(range(1 << (args.r // 2)))
        out = K.mm_bent(args.r, perm, tail)
    else:
        f1, f2 = read_function(args.f1), read_function(args.f2)
        g1 = _boolean(read_function(args.g1), "g1")
        g2 = _boolean(read_function(args.g2), "g2")
        spec = K.IndirectSumSpec(f1, f2, g1, g2)
        out = K.indirect_sum_generalized(spec, claim=args.claim, literal=args.literal)
    _emit(format_function(out, args.format), args.output)
    return EXIT_OK


def cmd_moments(args) -> int:
    f = read_function(args.input)
    _check_budget(f, args.budget)
    results = M.all_methods(f)
    report = {
        "methods": {name: r.to_json_obj() for name, r in results.items()},
        "agree": len({r.order for r in results.values()}) == 1,
        "fourth_moment": list(M.fourth_moment(f).coeffs),
        "identity_holds": M.derivative_moment_identity(f),
    }
    _emit(json.dumps(report), args.output)
    return EXIT_OK if report["identity_holds"] else EXIT_FAILED


def _search_filter(args) -> S.SearchFilter:
    levels = None
    if args.levels:
        try:
            levels = S.parse_levels(args.levels)
        except ValueError as exc:
            raise CliError(EXIT_PARSE, f"--levels: {exc}")
    regular = True if args.regular else (False if args.irregular else None)
    return S.SearchFilter(
        landscape_only=not args.all,
        length=args.length,
        levels=levels,
        plateau=args.plateau,
        gbent=args.gbent,
        regular=regular,
        exceptional=True if args.exceptional else None,
    )


def cmd_search(args) -> int:
    filt = _search_filter(args)
    if args.sample is not None:
        stream = S.sample(args.n, args.k, args.sample, args.seed, filt)
    else:
        stream = S.enumerate_functions(args.n, args.k, filt, budget=args.budget, jobs=args.jobs)
    hist = Counter()
    out = open(args.output, "w") if args.output and args.output != "-" else sys.stdout
    try:
        for f, profile in stream:
            hist[str(profile.length) if profile else "non-landscape"] += 1
            row = {"function": f.to_json_obj(), "profile": profile.to_json_obj() if profile else None}
            out.write(json.dumps(row) + "\n")
        out.write(json.dumps({"summary": {"count": sum(hist.values()),
                                          "length_histogram": dict(sorted(hist.items()))}}) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_identities(args) -> int:
    f = read_function(args.input)
    g = read_function(args.input2) if args.input2 else None
    _check_budget(f, args.budget)
    checks = correlation_identities(f, g)
    if f.k >= 2:
        checks["reconstruction"] = D.reconstruction_matches(f)
    ok = all(checks.values())
    _emit(json.dumps({"checks": checks, "all_hold": ok}), args.output)
    print("all identities hold" if ok else "IDENTITY FAILURE", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_decompose(args) -> int:
    f = read_function(args.input)
    _check_budget(f, args.budget)
    report = D.check_components(f).to_json_obj()
    report["reconstruction_matches"] = D.reconstruction_matches(f)
    report["corollary_holds"] = D.corollary_holds(f)
    _emit(json.dumps(report), args.output)
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="landscape", description=__doc__.splitlines()[0])
    p.add_argument("--backend", choices=["auto", "cython", "python"], default=None)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("-i", "--input", required=True, help="function file, or - for stdin")
        sp.add_argument("-o", "--output", default=None)
        sp.add_argument("--budget", type=int, default=S.DEFAULT_BUDGET)

    sp = sub.add_parser("analyze", help="spectrum, profile, regularity, component check")
    common(sp)
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("construct", help="build a function")
    sp.add_argument("kind", choices=["lift", "indirect", "mm", "pad"])
    sp.add_argument("-i", "--input", help="input function (lift, pad)")
    sp.add_argument("-o", "--output", default=None)
    sp.add_argument("--format", choices=["json", "hex"], default="json")
    sp.add_argument("--bit", type=int, default=1, help="lift: the a bit")
    sp.add_argument("--f1")
    sp.add_argument("--f2")
    sp.add_argument("--g1")
    sp.add_argument("--g2")
    sp.add_argument("--claim", choices=["i", "ii", "iii"], default=None)
    sp.add_argument("--literal", action="store_true",
                    help="indirect: use the integer g1+g2 as selector instead of g1 xor g2")
    sp.add_argument("--r", type=int, default=2, help="mm: number of variables")
    sp.add_argument("--perm", help="mm: comma-separated permutation")
    sp.add_argument("--tail", help="mm: tail function file")
    sp.add_argument("--t", type=int, default=0, help="pad: extra variables")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("moments", help="three plateau tests and the moment identity")
    common(sp)
    sp.set_defaults(func=cmd_moments)

    sp = sub.add_parser("search", help="enumerate or sample functions (JSON lines)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp, needs_input=False)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--sample", type=int, default=None, help="draw this many random functions")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--all", action="store_true", help="include non-landscape functions")
    sp.add_argument("--length", type=int)
    sp.add_argument("--levels", help="exact level set, e.g. 2:1,3:1")
    sp.add_argument("--plateau", type=int)
    sp.add_argument("--gbent", action="store_true")
    reg = sp.add_mutually_exclusive_group()
    reg.add_argument("--regular", action="store_true")
    reg.add_argument("--irregular", action="store_true")
    sp.add_argument("--exceptional", action="store_true")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("identities", help="correlation and reconstruction identities")
    common(sp)
    sp.add_argument("--input2", default=None)
    sp.set_defaults(func=cmd_identities)

    sp = sub.add_parser("decompose", help="component-function characterization")
    common(sp)
    sp.set_defaults(func=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        if args.backend:
            _backend.set_backend(args.backend)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except S.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (K.ConstructionError, DimensionError, ValueError) as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
