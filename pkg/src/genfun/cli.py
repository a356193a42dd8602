"""Command-line entry point: ``genfun <subcommand> ...``.

Exit codes: 0 when every check in the invocation holds, 1 when a check
fails, 2 for malformed input or usage, 3 for any other domain error.
Expression arguments may be ``-`` to read the text from stdin.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .deltaop import deltaop_apply, deltaop_eigencheck
from .diffop import diffop_apply, diffop_eigencheck
from .errors import GenfunError, NonConstantCoefficient, ParseError
from .examples import EXAMPLE_NAMES, build_example, run_demo
from .orthogonality import gram
from .parsing import parse_deltaop, parse_diffop, parse_ring_elem, parse_weight, parse_zpoly
from .ring import Ring, format_elem
from .series import sequence_from_series, series_from_prefactor_exp
from .translate import lemma1_check, translate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


@dataclass
class CommandConfig:
    subcommand: str
    ring: Ring
    options: dict = field(default_factory=dict)
    json: bool = False


def _read(text):
    if text == "-":
        return sys.stdin.read()
    return text


def _series(cfg: CommandConfig):
    o = cfg.options
    prefactor = parse_zpoly(_read(o["prefactor"]), cfg.ring)
    exponent = parse_zpoly(_read(o["exponent"]), cfg.ring)
    return series_from_prefactor_exp(prefactor, exponent, o["order"], ring=cfg.ring)


def _emit(cfg, payload: dict, text: str):
    if cfg.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_translate(cfg):
    L = parse_diffop(_read(cfg.options["op"]), cfg.ring)
    W = translate(L)
    _emit(cfg, {"diffop": L.to_json(), "deltaop": W.to_json(), "text": str(W)}, str(W))
    return EXIT_OK


def _cmd_series(cfg):
    s = _series(cfg)
    _emit(cfg, s.to_json(), "\n".join(f"z^{s.lo + k}: {format_elem(c)}" for k, c in enumerate(s.coeffs)))
    return EXIT_OK


def _cmd_apply(cfg):
    o = cfg.options
    s = _series(cfg)
    if o.get("delta"):
        W = parse_deltaop(_read(o["delta"]), cfg.ring)
        a = sequence_from_series(s)
        nmax = o["nmax"] if o.get("nmax") is not None else len(a) - 1 - max(W.max_shift, 0)
        values = [deltaop_apply(W, a, n) for n in range(nmax + 1)]
        _emit(cfg, {"terms": [format_elem(v) for v in values]},
              "\n".join(f"n={n}: {format_elem(v)}" for n, v in enumerate(values)))
    else:
        L = parse_diffop(_read(o["op"]), cfg.ring)
        out = diffop_apply(L, s)
        _emit(cfg, out.to_json(),
              "\n".join(f"z^{out.lo + k}: {format_elem(c)}" for k, c in enumerate(out.coeffs)))
    return EXIT_OK


def _cmd_verify_eigen(cfg):
    o = cfg.options
    L = parse_diffop(_read(o["op"]), cfg.ring)
    lam = parse_ring_elem(_read(o["eigenvalue"]), cfg.ring)
    s = _series(cfg)
    sides = ("left", "right") if o["side"] == "both" else (o["side"],)
    W = translate(L)
    a = sequence_from_series(s)
    reports = []
    lines = []
    for side in sides:
        rep = diffop_eigencheck(L, s, lam, side)
        nmax = o["order"] - max(W.max_shift, 0)
        drep = deltaop_eigencheck(W, a, lam, side, nmax)
        reports.append({"side": side, "diffop": rep.to_json(), "deltaop": drep.to_json()})
        for kind, r in (("differential", rep), ("difference", drep)):
            lo, hi = r.checked_range
            line = f"{kind} eigen equation ({side}) on {lo}..{hi}: {'holds' if r.holds else 'FAILS'}"
            if r.first_failure:
                n, lhs, rhs = r.first_failure
                line += f" at {n}: {format_elem(lhs)} != {format_elem(rhs)}"
            lines.append(line)
    ok = all(r["diffop"]["holds"] and r["deltaop"]["holds"] for r in reports)
    _emit(cfg, {"holds": ok, "reports": reports}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_verify_lemma1(cfg):
    L = parse_diffop(_read(cfg.options["op"]), cfg.ring)
    rep = lemma1_check(L, _series(cfg))
    lo, hi = rep.range_checked
    text = f"coefficientwise identity on {lo}..{hi}: {'holds' if rep.holds else 'FAILS'}"
    for n, a, b in rep.mismatches:
        text += f"\n  z^{n}: {format_elem(a)} != {format_elem(b)}"
    _emit(cfg, rep.to_json(), text)
    return EXIT_OK if rep.holds else EXIT_FAIL


def _cmd_gram(cfg):
    o = cfg.options
    if o.get("example"):
        b = build_example(o["example"], max(o["max_n"], 6))
        seq, weight = b.sequence(), b.weight
        if o.get("weight"):
            weight = parse_weight(o["weight"])
        if weight is None:
            raise ParseError("this example has no weight; pass --weight", o["example"], 0)
    else:
        o.setdefault("order", o["max_n"])
        o["order"] = max(o["order"] or 0, o["max_n"])
        seq = sequence_from_series(_series(cfg))
        weight = parse_weight(o.get("weight") or "num=1;den=1")
    rep = gram(seq, o["max_n"], weight, tol=o["tol"], workers=o.get("workers"))
    _emit(cfg, rep.to_json(), rep.table())
    return EXIT_OK if rep.orthogonal else EXIT_FAIL


def _cmd_demo(cfg):
    name = cfg.options["name"]
    claims = run_demo(name, cfg.options["order"])
    ok = all(c.passed for c in claims)
    payload = {
        "example": name,
        "passed": ok,
        "claims": [{"claim": c.label, "passed": c.passed, "detail": c.detail} for c in claims],
    }
    lines = [f"[{'PASS' if c.passed else 'FAIL'}] {c.label}" + (f"  ({c.detail})" if c.detail else "")
             for c in claims]
    lines.append(f"{name}: {'all claims verified' if ok else 'FAILURES present'}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {
    "translate": _cmd_translate,
    "series": _cmd_series,
    "apply": _cmd_apply,
    "verify-eigen": _cmd_verify_eigen,
    "verify-lemma1": _cmd_verify_lemma1,
    "gram": _cmd_gram,
    "demo": _cmd_demo,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genfun", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp):
        sp.add_argument("--ring", default="rational", help="rational | polyx | matrix:d")
        sp.add_argument("--json", action="store_true")

    def series_args(sp, required=True):
        sp.add_argument("--prefactor", required=required, help="polynomial in z (and x)")
        sp.add_argument("--exponent", default="0", help="polynomial in z with zero constant term")
        sp.add_argument("--order", type=int, required=required)

    sp = sub.add_parser("translate", help="print the difference operator of a differential operator")
    common(sp)
    sp.add_argument("--op", required=True)

    sp = sub.add_parser("series", help="expand prefactor*exp(exponent)")
    common(sp)
    series_args(sp)

    sp = sub.add_parser("apply", help="apply an operator to a series or its coefficient sequence")
    common(sp)
    series_args(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--op", help="differential operator")
    g.add_argument("--delta", help="difference operator")
    sp.add_argument("--nmax", type=int)

    sp = sub.add_parser("verify-eigen", help="check an eigenfunction and the translated eigensequence")
    common(sp)
    series_args(sp)
    sp.add_argument("--op", required=True)
    sp.add_argument("--lambda", dest="eigenvalue", required=True)
    sp.add_argument("--side", choices=("left", "right", "both"), default="left")

    sp = sub.add_parser("verify-lemma1", help="compare L(psi) with the translated operator coefficientwise")
    common(sp)
    series_args(sp)
    sp.add_argument("--op", required=True)

    sp = sub.add_parser("gram", help="Gram matrix and orthogonality verdict")
    common(sp)
    series_args(sp, required=False)
    sp.add_argument("--example", choices=EXAMPLE_NAMES)
    sp.add_argument("--weight", help="num=<poly>;den=<poly>")
    sp.add_argument("--max-n", dest="max_n", type=int, default=8)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--workers", type=int)

    sp = sub.add_parser("demo", help="verify every claim attached to a worked example")
    sp.add_argument("name", choices=EXAMPLE_NAMES)
    sp.add_argument("--order", type=int, default=14)
    sp.add_argument("--json", action="store_true")
    return p


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    opts = {k: v for k, v in vars(args).items() if k not in ("subcommand", "ring", "json")}
    try:
        ring = Ring.parse(getattr(args, "ring", "rational"))
    except ValueError as exc:
        raise ParseError(str(exc), args.ring, 0) from None
    if opts.get("order") is not None and opts["order"] < 1 and args.subcommand != "series":
        raise ParseError("order must be at least 1", str(opts["order"]), 0)
    if opts.get("tol") is not None and opts["tol"] <= 0:
        raise ParseError("tol must be positive", str(opts["tol"]), 0)
    if args.subcommand == "gram" and not opts.get("example") and not opts.get("prefactor"):
        raise ParseError("gram needs --example or --prefactor", "", 0)
    return CommandConfig(args.subcommand, ring, opts, bool(getattr(args, "json", False)))


def run(cfg: CommandConfig) -> int:
    return _COMMANDS[cfg.subcommand](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except (ParseError, NonConstantCoefficient) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GenfunError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
