"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import alexander as alx
from .algebra import FieldElem, LaurentPoly, parse_laurent
from .obstruction import (
    CONVENTIONS,
    ObstructionInvariantError,
    ParameterError,
    kernel_distinctness_certificate,
    obstruct_triviality,
    parse_pq,
)
from .slopes import (
    SlopeError,
    SlopeParam,
    discrepancy_10_7,
    epsilon_sequence,
    format_signs,
    grid_walk_oracle,
    omega_word,
    slope_relator,
)
from .verify import VerifyConfig, format_line, run_all, summary

log = logging.getLogger("lkobstruct")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _slope(text: str) -> SlopeParam:
    try:
        return SlopeParam.parse(text)
    except SlopeError as exc:
        raise InputError(str(exc)) from None


def _pq(text: str):
    try:
        return parse_pq(text)
    except ParameterError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# Subcommands build a JSON-able payload plus its text rendering.


def cmd_slope_word(args) -> tuple:
    s = _slope(args.slope)
    eps = epsilon_sequence(s)
    payload = {
        "slope": str(s),
        "c": s.c,
        "d": s.d,
        "epsilon": format_signs(eps),
        "omega": str(omega_word(s)),
        "relator": str(slope_relator(s)),
    }
    lines = [
        f"slope   : {s}",
        f"epsilon : {payload['epsilon'] or '(empty)'}",
        f"omega   : {payload['omega']}",
        f"relator : {payload['relator']}",
    ]
    status = EXIT_OK
    if args.oracle:
        oracle = grid_walk_oracle(s)
        block = {
            "signs": format_signs(oracle),
            "full_agreement": oracle == eps,
            "multiset_agreement": sorted(oracle) == sorted(eps),
        }
        lines += ["", "grid-walk oracle",
                  f"  signs     : {block['signs'] or '(empty)'}",
                  f"  agreement : {'full' if block['full_agreement'] else ('multiset only' if block['multiset_agreement'] else 'NONE')}"]
        if s == SlopeParam(10, 7):
            info = discrepancy_10_7()
            block["printed_word"] = info["printed_word"]
            block["printed_signs"] = info["printed"]
            block["printed_differs_at"] = info["differing_positions"]
            block["oracle_supports"] = info["oracle_supports"]
            lines += [f"  WARN printed word {info['printed_word']} ({info['printed']})",
                      f"       differs from the formula at positions {info['differing_positions']};",
                      f"       the grid walk supports the {info['oracle_supports']}"]
        if not block["multiset_agreement"]:
            status = EXIT_VERIFY
        payload["oracle"] = block
    return payload, "\n".join(lines), status


def cmd_obstruct(args) -> tuple:
    t = _pq(args.pq)
    s = _slope(args.slope)
    conventions = CONVENTIONS if args.convention == "both" else (args.convention,)
    status = EXIT_OK
    reports, texts = [], []
    for conv in conventions:
        try:
            r = obstruct_triviality(s, t, convention=conv)
        except ObstructionInvariantError as exc:
            r = obstruct_triviality(s, t, convention=conv, strict=False)
            status = EXIT_VERIFY
            log.error("%s", exc)
        reports.append(r.to_dict())
        texts.append(r.render())
    payload = reports[0] if len(reports) == 1 else {"reports": reports}
    text = "\n\n".join(texts)
    if args.compare:
        s2 = _slope(args.compare)
        cert = kernel_distinctness_certificate(s, s2, t)
        payload = {"report": payload, "certificate": cert}
        text += "\n\nkernel comparison\n" + "\n".join(f"  {k}: {v}" for k, v in cert.items())
    return payload, text, status


def cmd_kernels(args) -> tuple:
    if args.k1 < 0 or args.k2 < 0:
        raise InputError("k1, k2 must be nonnegative")
    cert = alx.kernels_distinct(args.k1, args.k2)
    status = EXIT_OK if cert.pairing_distinct == cert.line_distinct == (args.k1 != args.k2) else EXIT_VERIFY
    return cert.to_dict(), cert.render(), status


def _module_arg(text: str):
    parts = [p for p in text.split(",")]
    try:
        polys = [parse_laurent(p) for p in parts]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(polys) == 2:
        return alx.ModuleVector(FieldElem.from_laurent(polys[0]), FieldElem.from_laurent(polys[1]))
    if len(polys) == 4:
        return tuple(polys)
    raise InputError("module elements are 'f,g' in (a1,a2) or 'a1,b1,a2,b2' coordinates")


def cmd_blanchfield(args) -> tuple:
    x, y = _module_arg(args.x), _module_arg(args.y)
    val = alx.blanchfield_pair(x, y)
    show = lambda v: str(v) if isinstance(v, alx.ModuleVector) else "(" + ", ".join(map(str, v)) + ")"
    payload = {"x": show(x), "y": show(y), "value": str(val), "zero": val.is_zero()}
    text = f"Bl({payload['x']}, {payload['y']}) = {payload['value']}   (mod Q[t^+-1])"
    return payload, text, EXIT_OK


def cmd_satellite(args) -> tuple:
    if args.w == 0:
        raise InputError("winding number must be nonzero")
    try:
        P = alx.named_presentation(args.pattern)
        C = alx.named_presentation(args.companion)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    M = alx.litherland_sum(P, C, args.w)
    ideal = alx.order_ideal(M)
    expected = (alx.order_ideal(P) * alx.order_ideal(C).substitute_power(args.w)).normalize_unit(over_q=True)
    payload = {
        "pattern": args.pattern,
        "companion": args.companion,
        "w": args.w,
        "presentation": alx.format_matrix(M),
        "order_ideal": str(ideal),
        "product_formula": str(expected),
        "consistent": ideal == expected,
    }
    rows = ["  [" + ", ".join(r) + "]" for r in payload["presentation"]]
    text = "\n".join([f"presentation of A({args.pattern} pattern) + A({args.companion})[t^{args.w}]:", *rows,
                      f"order ideal     : ({ideal})",
                      f"product formula : ({expected})",
                      f"consistent      : {payload['consistent']}"])
    return payload, text, EXIT_OK if payload["consistent"] else EXIT_VERIFY


def cmd_verify_all(args) -> tuple:
    cfg = VerifyConfig(sweep_cmax=args.sweep_cmax, sweep_pmax=args.sweep_pmax, kmax=args.kmax,
                       parallelism=args.parallelism)
    for name, val in (("sweep_cmax", cfg.sweep_cmax), ("sweep_pmax", cfg.sweep_pmax), ("kmax", cfg.kmax)):
        if val < 1:
            raise InputError(f"--{name.replace('_', '-')} must be positive")
    results = run_all(cfg)
    payload = summary(results)
    lines = []
    for r in results:
        lines.append(format_line(r))
        lines += [f"        {k}: {json.dumps(v)}" for k, v in r.details.items()]
    lines.append(f"{payload['passed']} passed, {payload['warned']} warned, {payload['failed']} failed")
    return payload, "\n".join(lines), EXIT_OK if payload["ok"] else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--parallelism", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report to a file")

    p = argparse.ArgumentParser(prog="lkobstruct", description=__doc__)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--out", default=None, help="write the report to a file")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("slope-word", parents=[common], help="epsilon signs, omega and relator for a slope")
    s.add_argument("--slope", required=True, help="c/d with c even, e.g. 10/7")
    s.add_argument("--oracle", action="store_true", help="also run the grid-walk oracle")
    s.set_defaults(func=cmd_slope_word)

    s = sub.add_parser("obstruct", parents=[common], help="triviality obstruction in Z_p * Z_q")
    s.add_argument("--pq", required=True, help="p,q with p > q > 1 coprime")
    s.add_argument("--slope", required=True)
    s.add_argument("--convention", choices=CONVENTIONS + ("both",), default="proof")
    s.add_argument("--compare", metavar="SLOPE", help="emit the kernel comparison certificate against SLOPE")
    s.set_defaults(func=cmd_obstruct)

    s = sub.add_parser("kernels", parents=[common], help="compare P_k1 and P_k2 via the Blanchfield pairing")
    s.add_argument("--k1", type=int, required=True)
    s.add_argument("--k2", type=int, required=True)
    s.set_defaults(func=cmd_kernels)

    s = sub.add_parser("blanchfield", parents=[common], help="Blanchfield pairing on the square-knot module")
    s.add_argument("--x", required=True, help="'f,g' in (a1,a2) or 'a1,b1,a2,b2' coordinates")
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_blanchfield)

    s = sub.add_parser("satellite", parents=[common], help="Litherland direct sum of presentations")
    s.add_argument("--pattern", default="trefoil", choices=sorted(alx.NAMED_KNOTS))
    s.add_argument("--companion", default="trefoil", choices=sorted(alx.NAMED_KNOTS))
    s.add_argument("--w", type=int, required=True, help="winding number (nonzero)")
    s.set_defaults(func=cmd_satellite)

    s = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    s.add_argument("--sweep-cmax", type=int, default=20)
    s.add_argument("--sweep-pmax", type=int, default=11)
    s.add_argument("--kmax", type=int, default=100)
    s.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.parallelism < 1:
        parser.error("--parallelism must be positive")
    try:
        payload, text, status = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = json.dumps(payload, indent=2) if args.format == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return status


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
