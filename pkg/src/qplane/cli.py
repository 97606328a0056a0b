"""Command-line front end: ``qplane VERB [--n N] [--format text|json] ...``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant failure.
"""

import argparse
import json
import os
import sys

from .cyclotomic import make_root
from .parser import ParseError, parse_element

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InvariantFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_n():
    raw = os.environ.get("QPLANE_N")
    if raw is None:
        return 3
    try:
        return int(raw)
    except ValueError:
        return raw  # rejected later as a usage error


def _common(p):
    p.add_argument("--n", type=int, default=None, help="order N of q (odd, >= 3); default 3 or $QPLANE_N")
    p.add_argument("--format", choices=("text", "json", "table"), default="text")


def build_parser():
    parser = _Parser(prog="qplane", description="Exact computations on the reduced quantum plane.")
    sub = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("normalize", help="print the normal form of an expression")
    _common(p)
    p.add_argument("expr")
    p.add_argument("--algebra", choices=("plane", "hopf", "dual", "wz"), default=None)

    p = sub.add_parser("act", help="left action h[m] on a plane element or form")
    _common(p)
    p.add_argument("--h", required=True)
    p.add_argument("--m", required=True)

    p = sub.add_parser("pair", help="pairing <h, f>")
    _common(p)
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)

    p = sub.add_parser("d", help="exterior derivative of a form")
    _common(p)
    p.add_argument("--u", required=True)

    p = sub.add_parser("wzmul", help="product of two forms")
    _common(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = sub.add_parser("decompose", help="indecomposable summands of M")
    _common(p)

    p = sub.add_parser("structure", help="blocks, radical and PIM chains of H")
    _common(p)
    p.add_argument("--no-chains", action="store_true")

    p = sub.add_parser("cohomology", help="cohomology dimensions of the WZ complex")
    _common(p)

    p = sub.add_parser("selftest", help="run the invariant suite")
    _common(p)
    return parser


def _field(args):
    n = args.n if args.n is not None else _default_n()
    try:
        return make_root(n)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid N: {exc}") from None


def _element(field, text, algebra):
    return parse_element(field, text, algebra)[1]


def _element_json(e):
    return {"text": str(e), "terms": [[list(k), str(c)] for k, c in e.items()]}


def _normalize(field, args):
    algebra, e = parse_element(field, args.expr, args.algebra)
    return {"algebra": algebra, **_element_json(e)}, str(e)


def _act(field, args):
    h = _element(field, args.h, "hopf")
    algebra, m = parse_element(field, args.m)
    if algebra == "plane":
        from .action import act
        out = act(h, m)
    elif algebra == "wz":
        from .wess_zumino import act_on_form
        out = act_on_form(h, m)
    else:
        raise UsageError(f"--m must be a plane element or a form, got {algebra}")
    return _element_json(out), str(out)


def _pair(field, args):
    from .dual import pair

    value = pair(_element(field, args.h, "hopf"), _element(field, args.f, "dual"))
    return {"text": str(value), "coefficients": value.to_json()}, str(value)


def _d(field, args):
    from .wess_zumino import differential

    out = differential(_element(field, args.u, "wz"))
    return _element_json(out), str(out)


def _wzmul(field, args):
    out = _element(field, args.u, "wz") * _element(field, args.v, "wz")
    return _element_json(out), str(out)


def _monomials(keys):
    from .printing import monomial_str

    return ", ".join(monomial_str("plane", k) or "1" for k in keys)


def _decompose(field, args):
    from .decomposition import DecompositionError, decompose

    try:
        d = decompose(field)
    except DecompositionError as exc:
        raise InvariantFailure(str(exc)) from None
    lines = ["M = " + " + ".join(
        f"N_{s.label}" if s.label < field.n else "N_irr" for s in d.summands)]
    lines.append("label  class  dim  invariant  basis | invariant basis")
    for s in d.summands:
        lines.append(f"{s.label:<6} {s.congruence_class:<6} {s.dim:<4} {len(s.invariant_basis):<10} "
                     f"{_monomials(s.basis)} | {_monomials(s.invariant_basis)}")
    return d.to_json(), "\n".join(lines)


def _structure(field, args):
    from .structure import StructureError, structure_report

    try:
        report = structure_report(field, with_chains=not args.no_chains)
    except StructureError as exc:
        raise InvariantFailure(str(exc)) from None
    parts = []
    for b in report["blocks"]:
        e, o = b["shape"]
        name = f"M_{e}" if o == 0 else f"M_{e}|{o}"
        parts.append(f"{name} dim {b['dim']}")
    lines = ["blocks: " + ", ".join(parts)]
    lines.append(f"radical dim: {report['radical_dim']}  (H/J dim {report['quotient_dim']})")
    for c in report.get("chains", []):
        lines.append(f"P_{c['top']} (block {c['block']}): " + " < ".join(map(str, c["dims"])))
    return report, "\n".join(lines)


def _cohomology(field, args):
    from .wess_zumino import cohomology_dims

    h = cohomology_dims(field)
    return {"h0": h[0], "h1": h[1], "h2": h[2]}, f"h0 = {h[0]}  h1 = {h[1]}  h2 = {h[2]}"


def _selftest(field, args):
    from .checks import run_checks

    results = run_checks(field)
    lines = [f"{'SKIP' if r.skipped else 'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}"
             for r in results]
    data = [{"name": r.name, "ok": r.ok, "skipped": r.skipped, "detail": r.detail}
            for r in results]
    failed = [r.name for r in results if not r.ok]
    return {"checks": data, "failed": failed}, "\n".join(lines), bool(failed)


VERBS = {
    "normalize": _normalize,
    "act": _act,
    "pair": _pair,
    "d": _d,
    "wzmul": _wzmul,
    "decompose": _decompose,
    "structure": _structure,
    "cohomology": _cohomology,
    "selftest": _selftest,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = _field(args)
        out = VERBS[args.verb](field, args)
    except UsageError as exc:
        print(f"qplane: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qplane: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantFailure as exc:
        print(f"qplane: invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    failed = False
    if len(out) == 3:
        data, text, failed = out
    else:
        data, text = out
    if args.format == "json":
        print(json.dumps({"n": field.n, "verb": args.verb, "result": data}, sort_keys=True))
    else:
        print(text)
    return EXIT_INVARIANT if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
