"""Command-line front end.  Output is deterministic JSON on stdout.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bgg import build_bgg_complex, cousin_shape
from .charring import CharError, expand_truncated
from .qsl2 import verify_cogeneration, verify_kernel_closure
from .report import VerificationReport
from .reps_chars import quasi_verma_char, simple_sl2_char, verify_sl2_filtration_identities, weyl_char
from .root_data import RootDataError, build_root_datum
from .semiinf import (
    SemiinfCharParams,
    calibrate_rank1,
    chformula,
    chformula_general,
    expand,
    nilcone_cech_oracle_rank1,
)
from .serialize import dumps, formal_to_json, rational_to_json
from .verify import SUITES, VerifyConfig, run_suite, run_verify_all
from .weyl import GroupTooLarge, from_word, generate_group


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _labels(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _parse_word(datum, text: str):
    text = text.strip()
    if text in ("", "e"):
        return from_word(datum, ())
    if re.fullmatch(r"(s\d+)+", text):
        word = [int(x) for x in re.findall(r"\d+", text)]
    else:
        word = list(_ints(text))
    if any(not 1 <= i <= datum.rank for i in word):
        raise UsageError(f"word {text!r} uses generators outside 1..{datum.rank}")
    return from_word(datum, word)


def _datum(label: str):
    return build_root_datum(label)


def _weight(datum, values) -> tuple[int, ...]:
    if len(values) != datum.rank:
        raise UsageError(f"{datum.label} needs {datum.rank} weight coordinates, got {len(values)}")
    return tuple(values)


# ------------------------------------------------------------ handlers

def cmd_roots(args) -> tuple[object, int]:
    d = _datum(args.type)
    return {
        "type": d.label,
        "rank": d.rank,
        "cartan": [list(r) for r in d.cartan.cartan_matrix],
        "symmetrizer": list(d.cartan.symmetrizer),
        "rho": list(d.rho),
        "num_positive_roots": d.num_positive_roots,
        "positive_roots": [list(a) for a in d.positive_roots],
        "positive_roots_simple_coords": [list(c) for c in d.positive_root_coords],
    }, 0


def cmd_weyl(args) -> tuple[object, int]:
    d = _datum(args.type)
    W = generate_group(d)
    out = {
        "type": d.label,
        "order": len(W),
        "longest": list(W.longest.word),
        "length_generating_function": W.length_generating_function(),
    }
    if args.elements:
        out["elements"] = [list(w.word) for w in W]
    return out, 0


def cmd_char(args) -> tuple[object, int]:
    if args.kind == "simple-sl2":
        if args.ell is None or len(args.weight) != 1:
            raise UsageError("simple-sl2 needs --ell and a single --weight")
        ch = simple_sl2_char(args.ell, args.weight[0])
        out = {"kind": "simple_sl2", "ell": args.ell, "weight": list(args.weight),
               "character": rational_to_json(ch)}
        if args.truncate is not None:
            out["expansion"] = formal_to_json(expand_truncated(ch, build_root_datum("A1"), args.truncate))
        return out, 0
    d = _datum(args.type)
    lam = _weight(d, args.weight)
    if args.kind == "weyl":
        wc = weyl_char(d, lam)
        return {"kind": "weyl", "type": d.label, "weight": list(lam), "dimension": wc.dimension,
                "character": formal_to_json(wc.polynomial), "rational": rational_to_json(wc.rational)}, 0
    w = _parse_word(d, args.w)
    ch = quasi_verma_char(d, w, lam)
    out = {"kind": "quasi_verma", "type": d.label, "weight": list(lam), "w": list(w.word),
           "character": rational_to_json(ch)}
    if args.truncate is not None:
        out["expansion"] = formal_to_json(expand_truncated(ch, d, args.truncate))
    return out, 0


def cmd_bgg(args) -> tuple[object, int]:
    d = _datum(args.type)
    lam = _weight(d, args.weight)
    cx = cousin_shape(d, lam) if args.cousin else build_bgg_complex(d, lam)
    out = cx.to_json()
    if args.out:
        Path(args.out).write_text(dumps(out, pretty=True) + "\n")
    return out, 0


def cmd_qsl2(args) -> tuple[object, int]:
    rep = VerificationReport("qsl2")
    m_max = args.mmax if args.mmax is not None else args.mu + 9
    rep.extend(verify_cogeneration(args.mu, m_max, args.ell))
    rep.extend(verify_kernel_closure(args.mu, args.mu + 10, args.mu + 10, args.ell))
    return rep.to_json(), 0 if rep.passed else 1


def cmd_semiinf(args) -> tuple[object, int]:
    if args.kind == "oracle-rank1":
        c = nilcone_cech_oracle_rank1(args.ell, args.truncate)
        return {"ell": args.ell, "truncation": args.truncate, "character": formal_to_json(c),
                "calibration": calibrate_rank1(args.ell, args.truncate)}, 0
    d = _datum(args.type)
    lam = _weight(d, args.lam)
    w = _parse_word(d, args.general_w) if args.general_w is not None else None
    p = SemiinfCharParams(d, args.ell, lam, w, args.truncate)
    rc = chformula_general(p) if w is not None else chformula(p)
    out = {"type": d.label, "ell": args.ell, "lambda": list(lam), "truncation": args.truncate,
           "character": formal_to_json(expand(p, rc))}
    if w is not None:
        out["w"] = list(w.word)
    if p.caveat:
        out["caveat"] = p.caveat
    return out, 0


def cmd_verify(args) -> tuple[object, int]:
    if args.kind == "sl2":
        rep = VerificationReport("sl2")
        rep.extend(verify_sl2_filtration_identities(args.ell, args.kmax))
    elif args.kind == "list":
        return {"suites": list(SUITES)}, 0
    else:
        cfg = VerifyConfig(
            types=args.types,
            ells=list(args.ells) if args.ells is not None else None,
            kmax=args.kmax,
            truncation=args.truncate,
            bless=args.bless,
        )
        rep = run_suite(args.name, cfg) if args.kind == "suite" else run_verify_all(cfg)
    return rep.to_json(), 0 if rep.passed else 1


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    # SUPPRESS keeps a subcommand's parser from resetting a flag given earlier
    g.add_argument("--json", dest="pretty", action="store_false", default=argparse.SUPPRESS,
                   help="compact JSON (default)")
    g.add_argument("--pretty", dest="pretty", action="store_true", default=argparse.SUPPRESS,
                   help="indented JSON")

    ap = argparse.ArgumentParser(prog="quasibgg", description=__doc__.splitlines()[0], parents=[fmt])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[fmt], help="root datum of a Cartan type")
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("weyl", parents=[fmt], help="Weyl group summary")
    p.add_argument("--type", required=True)
    p.add_argument("--elements", action="store_true", help="list every element in ShortLex order")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("char", parents=[fmt], help="module characters")
    p.add_argument("kind", choices=["quasi-verma", "weyl", "simple-sl2"])
    p.add_argument("--type", default="A1")
    p.add_argument("--weight", type=_ints, required=True)
    p.add_argument("--w", default="e", help="Weyl element, e.g. s1s2 or 1,2")
    p.add_argument("--ell", type=int)
    p.add_argument("--truncate", type=int)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("bgg", parents=[fmt], help="quasi-BGG complex shape")
    p.add_argument("action", choices=["build"])
    p.add_argument("--type", required=True)
    p.add_argument("--weight", type=_ints, required=True)
    p.add_argument("--cousin", action="store_true", help="index layers by Schubert cells")
    p.add_argument("--out", "--json-out", dest="out", help="also write the JSON to this file")
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("qsl2", parents=[fmt], help="divided-power identities in M_A(mu)")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--mmax", type=int)
    p.add_argument("--ell", type=int)
    p.set_defaults(func=cmd_qsl2)

    p = sub.add_parser("semiinf", parents=[fmt], help="semiinfinite character formulas")
    p.add_argument("kind", choices=["chformula", "oracle-rank1"])
    p.add_argument("--type", default="A1")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_ints, default=None)
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--general-w", dest="general_w")
    p.set_defaults(func=cmd_semiinf)

    p = sub.add_parser("verify", parents=[fmt], help="verification suites")
    vs = p.add_subparsers(dest="kind", required=True)
    q = vs.add_parser("sl2", parents=[fmt])
    q.add_argument("--ell", type=int, required=True)
    q.add_argument("--kmax", type=int, default=4)
    vs.add_parser("list", parents=[fmt])
    for name in ("all", "suite"):
        q = vs.add_parser(name, parents=[fmt])
        if name == "suite":
            q.add_argument("name", choices=list(SUITES))
        q.add_argument("--types", "--type", dest="types", type=_labels)
        q.add_argument("--ells", "--ell", dest="ells", type=_ints)
        q.add_argument("--kmax", type=int, default=4)
        q.add_argument("--truncate", type=int, default=10)
        q.add_argument("--bless", action="store_true", help="regenerate golden files")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "semiinf" and args.kind == "chformula" and args.lam is None:
        args.lam = (0,) * build_root_datum(args.type).rank if _valid_type(args.type) else ()
    try:
        out, code = args.func(args)
    except (UsageError, CharError, RootDataError, ValueError, KeyError) as exc:
        print(f"quasibgg: error: {exc}", file=sys.stderr)
        return 2
    except GroupTooLarge as exc:
        print(f"quasibgg: resource bound: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(out, pretty=getattr(args, "pretty", False)) + "\n")
    return code


def _valid_type(label: str) -> bool:
    try:
        build_root_datum(label)
    except RootDataError:
        return False
    return True


if __name__ == "__main__":
    sys.exit(main())
