"""Command-line front end: ``dpsocle <subcommand> ... [--json] [--out FILE]``."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Sequence

from .diagrams import enumerate_signed, orbit_dimension, young_from_composition
from .errors import DpsError, HypothesisNotMet, InvalidInput, LimitExceeded
from .ranges import range_report
from .rational import fmt, fmt_seq, fractions, to_fraction
from .socle import (
    CONVENTIONS, DEFAULT_MAX_BLOCKS, DPSParam, SocleReport, complex_socle,
    decompose_top, merged_data, quaternionic_socle, real_gl_socle, socle_umn,
)
from .theta import DFMParam, SignedPair, associated_shape, gk_dimension, is_normal, phi_map
from .weyl import Composition, Permutation, assumption_a_typeA

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
MAX_SELFTEST_SIZE = 10


class _Parser(argparse.ArgumentParser):
    # accept "-3/2" and "-1,-2" as positionals rather than option flags
    _NEGATIVE = re.compile(r"^-\d[-\d/,]*$")

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = self._NEGATIVE

    def error(self, message):
        self.print_usage(sys.stderr)
        raise InvalidInput(message)


def dumps(obj) -> str:
    """Stable JSON: sorted keys, rationals already serialized as strings."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _seq(text: str) -> tuple:
    body = text.strip().strip("()[]")
    if not body or body == "-":
        return ()
    return fractions(t.strip() for t in body.split(","))


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InvalidInput(f"expected an integer, got {text!r}") from exc


def _pair(tokens: Sequence[str]) -> SignedPair:
    return SignedPair.parse(" ".join(tokens))


def _ints(seq) -> list[int]:
    out = []
    for x in seq:
        if x.denominator != 1:
            raise InvalidInput(f"expected integers, got {fmt(x)}")
        out.append(int(x))
    return out


def _not_met(group: str, inp: dict, exc: Exception) -> SocleReport:
    return SocleReport(group, inp, [], None, None,
                       {"hypothesis_met": False, "reason": str(exc)})


def _socle_text(report: SocleReport) -> str:
    lines = [f"group: {report.group}"]
    if report.extras.get("hypothesis_met") is False:
        lines.append(f"hypothesis not met: {report.extras['reason']}")
        return "\n".join(lines)
    if "assumption_a" in report.extras:
        flag = report.extras["assumption_a"]["assumption_a"]
        lines.append(f"assumption A: {str(flag).lower()}")
    lines.append(f"socle constituents: {len(report.constituents)}")
    for c in report.constituents:
        d = c.to_json()
        tail = f"  diagram {d['diagram']}" if d["diagram"] else ""
        lines.append(f"  {d['label']}{tail}")
    if report.gk_dim is not None:
        lines.append(f"GK dimension: {report.gk_dim}")
    if report.verma_embedding:
        v = report.verma_embedding
        lines.append(f"embedding: {v['source']} -> {v['target']}")
        lines.append(f"  source weight ({', '.join(v['source_weight'])})")
        lines.append(f"  target weight ({', '.join(v['target_weight'])})")
    for key in ("speh_labels", "exponents", "c_prime", "d"):
        if key in report.extras:
            lines.append(f"{key}: {report.extras[key]}")
    if report.extras.get("sign_twist_exists"):
        lines.append("sign twist chi: exists (" + report.extras["sign_twist_note"] + ")")
    if "note" in report.extras:
        lines.append(report.extras["note"])
    return "\n".join(lines)


def cmd_richardson(args):
    c = Composition.parse(args.c)
    y = young_from_composition(c)
    dim = orbit_dimension(y)
    return ({"c": list(c.parts), "young": list(y.rows), "orbit_dimension": dim},
            f"Y = {y}; dim O = {dim}")


def cmd_signed(args):
    c = Composition.parse(args.c)
    y = young_from_composition(c)
    diagrams = enumerate_signed(y, args.m, args.n)
    data = {"c": list(c.parts), "young": list(y.rows), "m": args.m, "n": args.n,
            "count": len(diagrams), "diagrams": [str(t) for t in diagrams]}
    text = "\n".join([f"S_{{{args.m},{args.n}}}(Y = {y}): {len(diagrams)} classes"]
                     + [f"  {t}" for t in diagrams])
    return data, text


def cmd_assvar(args):
    pair = _pair(args.pair)
    t = associated_shape(pair)
    data = {"pair": str(pair), "diagram": str(t), "shape": list(t.shape.rows),
            "gk_dim": gk_dimension(pair), "normal": is_normal(pair)}
    text = (f"pair {pair}\ndiagram {t or '(empty)'}\nGK dimension {data['gk_dim']}\n"
            f"normal: {str(data['normal']).lower()}")
    return data, text


def cmd_normal(args):
    c = Composition.parse(args.c)
    mapping = phi_map(args.m, args.n, c)
    rows = [{"pair": str(p), "diagram": str(t)} for p, t in mapping.items()]
    y = young_from_composition(c)
    data = {"m": args.m, "n": args.n, "c": list(c.parts), "young": list(y.rows), "phi": rows}
    text = "\n".join([f"O(c) for c = {c}, (m,n) = ({args.m},{args.n}): {len(rows)} normal pairs"]
                     + [f"  {r['pair']:<24} -> {r['diagram']}" for r in rows])
    return data, text


def cmd_range(args):
    pair_tokens = [t for t in args.items if t.startswith(("m=", "n="))]
    rest = [t for t in args.items if not t.startswith(("m=", "n="))]
    if len(rest) != 1:
        raise InvalidInput("range expects a pair 'm=.. n=..' and one h vector")
    report = range_report(DFMParam(_pair(pair_tokens), _seq(rest[0])))
    text = (f"pair {report['pair']} h=({','.join(report['h'])}): {report['label']}\n"
            f"good={report['good']} weakly_fair={report['weakly_fair']} mediocre={report['mediocre']}")
    if "note" in report:
        text += "\n" + report["note"]
    return report, text


def _dps(args) -> DPSParam:
    return DPSParam(args.m, args.n, Composition.parse(args.kappa), _seq(args.u),
                    to_fraction(args.h), _seq(args.v))


def cmd_decompose(args):
    p = _dps(args)
    tau = Permutation.parse(args.tau) if args.tau else None
    consts = decompose_top(p, tau, convention=args.convention, max_blocks=args.max_blocks)
    md = merged_data(p, args.convention)
    data = {"input": p.to_json(), "convention": args.convention,
            "merged": {"c": list(md.c), "h": fmt_seq(md.hvec)},
            "constituents": [c.to_json() for c in consts]}
    text = "\n".join(
        [f"merged c = {list(md.c)}, h = ({', '.join(fmt_seq(md.hvec))})",
         f"top-stratum constituents: {len(consts)}"]
        + [f"  {c.to_json()['label']}  diagram {c.diagram}" for c in consts])
    return data, text


def cmd_socle_u(args):
    kappa = Composition.parse(args.kappa)
    u, v = _ints(_seq(args.u)), _ints(_seq(args.v))
    h = _ints([to_fraction(args.h)])[0]
    try:
        report = socle_umn(args.m, args.n, kappa, u, h, v, convention=args.convention)
    except HypothesisNotMet as exc:
        report = _not_met(f"U({args.m},{args.n})",
                          {"m": args.m, "n": args.n, "kappa": list(kappa.parts),
                           "u": [str(x) for x in u], "h": str(h), "v": [str(x) for x in v]}, exc)
    return report.to_json(), _socle_text(report)


def cmd_socle_glc(args):
    report = complex_socle(Composition.parse(args.c))
    return report.to_json(), _socle_text(report)


def _gl_real_quat(fn, label, args):
    c = Composition.parse(args.c)
    try:
        report = fn(args.n, c)
    except HypothesisNotMet as exc:
        report = _not_met(f"GL({args.n},{label})", {"n": args.n, "c": list(c.parts)}, exc)
    return report.to_json(), _socle_text(report)


def cmd_socle_glr(args):
    return _gl_real_quat(real_gl_socle, "R", args)


def cmd_socle_glh(args):
    return _gl_real_quat(quaternionic_socle, "H", args)


def cmd_assumption_a(args):
    c = Composition.parse(args.c)
    rec = assumption_a_typeA(c)
    text = "\n".join([f"assumption A: {str(rec['assumption_a']).lower()}"]
                     + [f"  {k}: {str(rec[k]).lower()}" for k in ("palindrome", "involution", "duflo")])
    return {"c": list(c.parts), **rec}, text


def cmd_selftest(args):
    from .checks import run_selftest

    if args.max_size < 1 or args.max_size > MAX_SELFTEST_SIZE:
        raise LimitExceeded(f"--max-size must be between 1 and {MAX_SELFTEST_SIZE}")
    results = run_selftest(args.max_size)
    data = {"max_size": args.max_size, "passed": all(r.passed for r in results),
            "checks": [{"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail}
                       for r in results]}
    return data, "\n".join(r.line() for r in results)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dpsocle", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--out", help="also write the JSON report to this file")
    sub = parser.add_subparsers(dest="command", metavar="subcommand", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("richardson", cmd_richardson, "Young diagram Y(c) and Richardson orbit dimension")
    p.add_argument("c")
    p = add("signed", cmd_signed, "signed Young diagrams of shape Y(c) and signature (m,n)")
    p.add_argument("c")
    p.add_argument("m", type=_int)
    p.add_argument("n", type=_int)
    p = add("assvar", cmd_assvar, "associated variety of A_(m,n)[h] in the good range")
    p.add_argument("pair", nargs="+", help="e.g. 'm=1,0,1 n=0,1,0'")
    p = add("normal", cmd_normal, "normal pairs O(c) and the map Phi_c")
    p.add_argument("m", type=_int)
    p.add_argument("n", type=_int)
    p.add_argument("c")
    p = add("range", cmd_range, "good / weakly fair / mediocre classification")
    p.add_argument("items", nargs="+", help="'m=.. n=..' followed by h, e.g. 0,2")
    for name, fn, help_ in (
            ("decompose", cmd_decompose, "top-stratum constituents of nI^kappa_{m,n}[u;h;v]"),
            ("socle-u", cmd_socle_u, "socle for U(m,n)")):
        p = add(name, fn, help_)
        for arg in ("m", "n"):
            p.add_argument(arg, type=_int)
        for arg in ("kappa", "u", "h", "v"):
            p.add_argument(arg)
        p.add_argument("--convention", choices=CONVENTIONS, default="calibrated")
        if name == "decompose":
            p.add_argument("--tau", help="sorting permutation, e.g. [2,1,3]")
            p.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS)
    p = add("socle-glc", cmd_socle_glc, "socle for GL(n,C)")
    p.add_argument("c")
    p = add("socle-glr", cmd_socle_glr, "socle for GL(n,R)")
    p.add_argument("n", type=_int)
    p.add_argument("c")
    p = add("socle-glh", cmd_socle_glh, "socle for GL(n,H)")
    p.add_argument("n", type=_int)
    p.add_argument("c")
    p = add("assumption-a", cmd_assumption_a, "palindrome / involution / Duflo conditions")
    p.add_argument("c")
    p = add("selftest", cmd_selftest, "run the exhaustive invariant suite")
    p.add_argument("--max-size", type=int, default=8)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        data, text = args.func(args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DpsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = dumps(data)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    sys.stdout.write(payload if args.json else text + "\n")
    if args.command == "selftest" and not data["passed"]:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
