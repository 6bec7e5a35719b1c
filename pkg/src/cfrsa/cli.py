"""Command-line front end.  Every command prints one JSON document.

Exit status: 0 on success, 1 when an attack finds nothing, 2 on usage errors.
Integers in the output are decimal strings so no consumer truncates them.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction

from . import approx, attacks, cf, keygen, sweeps

ATTACKS = {
    "wiener": attacks.wiener_attack,
    "wiener-f": attacks.wiener_f_attack,
    "vvt": attacks.vvt_attack,
    "variant": attacks.variant_attack,
}


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Decimal or ``0x`` hexadecimal integer."""
    t = text.strip().lower()
    try:
        if t.startswith(("0x", "-0x")):
            return int(t, 16)
        return int(t, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _ints(obj):
    """Recursively turn ints into decimal strings (bools and counts stay JSON)."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_ints(v) for v in obj]
    return obj


def _emit(doc, out):
    out.write(json.dumps(doc, sort_keys=True) + "\n")


def outcome_doc(pub: attacks.RsaPublicKey, o: attacks.AttackOutcome) -> dict:
    return {
        "found": True,
        "method": o.method,
        "n": str(pub.n),
        "e": str(pub.e),
        "d": str(o.d),
        "k": str(o.k),
        "p": str(o.p),
        "q": str(o.q),
        "phi": str(o.phi),
        "steps": o.steps,
        "witness": {
            "m": o.witness.m,
            "family": o.witness.family,
            "coefficients": _ints(o.witness.coefficients),
        },
        "family_steps": dict(o.family_steps),
        "notes": list(o.notes),
    }


def cmd_cf(args, out):
    if args.den == 0:
        raise UsageError("--den must be nonzero")
    x = cf.cf_expand(Fraction(args.num, args.den))
    _emit({
        "quotients": _ints(x.quotients),
        "convergents": [{"p": str(p), "q": str(q)} for p, q in x.convergents],
    }, out)
    return 0


def cmd_approx(args, out):
    if args.alpha_den == 0 or args.c_den == 0:
        raise UsageError("denominators must be nonzero")
    q = approx.ApproxQuery(Fraction(args.alpha_num, args.alpha_den),
                           Fraction(args.c_num, args.c_den), args.bmax)
    sols = approx.enumerate_solutions(q)
    _emit({
        "alpha": str(q.alpha),
        "c": str(q.c),
        "b_max": str(q.b_max),
        "solutions": [
            {"a": str(s.a), "b": str(s.b), "m": s.m, "r": str(s.r), "s": str(s.s),
             "sign": "+" if s.sign > 0 else "-"}
            for s in sols
        ],
    }, out)
    return 0


def cmd_attack(args, out):
    pub = attacks.RsaPublicKey(args.n, args.e)
    cfg = attacks.AttackConfig(regime=args.regime, d_bound=args.d_bound,
                               D_bound=args.D_bound, test_mode=args.test)
    if args.method in ("vvt", "variant") and args.d_bound is None and args.D_bound is None:
        raise UsageError(f"attack {args.method} needs --d-bound or --D-bound")
    try:
        o = ATTACKS[args.method](pub, cfg)
    except attacks.ShortExpansion as exc:
        _emit({"found": False, "method": args.method, "reason": str(exc)}, out)
        return 1
    if o is None:
        _emit({"found": False, "method": args.method, "reason": "not found"}, out)
        return 1
    _emit(outcome_doc(pub, o), out)
    return 0


def cmd_keygen(args, out):
    spec = keygen.KeyGenSpec(
        modulus_bits=args.bits, d=args.d, d_bits=args.d_bits, D_target=args.D_target,
        D_max=args.D_max, balance=args.balance, seed=args.seed,
    )
    key = keygen.gen_key(spec)
    _emit({f: str(getattr(key, f)) for f in ("n", "e", "d", "p", "q", "k", "phi")}, out)
    return 0


def cmd_sweep(args, out):
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            sweeps.write_csv(sweeps.sweep_rows(args.n, args.p, args.q, args.d_from,
                                               args.d_to, args.kind), fh)
    stats = sweeps.sweep(args.n, args.p, args.q, args.d_from, args.d_to,
                         (args.kind,), workers=args.workers)[args.kind]
    doc = {"kind": args.kind, "n": str(args.n), "d_from": str(args.d_from),
           "d_to": str(args.d_to)}
    doc.update(stats.summary())
    _emit(doc, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfrsa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", help="continued fractions")
    cf_sub = p_cf.add_subparsers(dest="action", required=True)
    p = cf_sub.add_parser("expand", help="partial quotients and convergents of num/den")
    p.add_argument("--num", type=parse_int, required=True)
    p.add_argument("--den", type=parse_int, required=True)
    p.set_defaults(func=cmd_cf)

    p_ap = sub.add_parser("approx", help="solutions of |alpha - a/b| < c/b^2")
    ap_sub = p_ap.add_subparsers(dest="action", required=True)
    p = ap_sub.add_parser("enum")
    p.add_argument("--alpha-num", type=parse_int, required=True)
    p.add_argument("--alpha-den", type=parse_int, required=True)
    p.add_argument("--c-num", type=parse_int, required=True)
    p.add_argument("--c-den", type=parse_int, default=1)
    p.add_argument("--bmax", type=parse_int, required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("attack", help="recover a small secret exponent")
    p.add_argument("method", choices=sorted(ATTACKS))
    p.add_argument("--n", type=parse_int, required=True)
    p.add_argument("--e", type=parse_int, required=True)
    bound = p.add_mutually_exclusive_group()
    bound.add_argument("--d-bound", type=parse_int)
    bound.add_argument("--D-bound", type=parse_fraction)
    p.add_argument("--regime", choices=sorted(attacks.REGIMES), default="balanced")
    p.add_argument("--test", choices=("phi", "modpow", "both"), default="both")
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("keygen", help="deterministic test key")
    p.add_argument("--bits", type=parse_int, required=True)
    dspec = p.add_mutually_exclusive_group(required=True)
    dspec.add_argument("--d-bits", type=parse_int)
    dspec.add_argument("--d", type=parse_int)
    dspec.add_argument("--D-target", type=parse_fraction)
    dspec.add_argument("--D-max", type=parse_fraction)
    p.add_argument("--seed", type=parse_int, default=0)
    p.add_argument("--balance", type=int, choices=(2, 8), default=2)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sweep", help="coefficient statistics over a range of d")
    p.add_argument("kind", choices=sweeps.KINDS)
    for name in ("--n", "--p", "--q", "--d-from", "--d-to"):
        p.add_argument(name, type=parse_int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="also write per-d rows to this file")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"cfrsa: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
