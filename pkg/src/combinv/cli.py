"""Command-line front end: build matrices, verify identities, run bijections.

All state lives in flags, and output is byte-deterministic for fixed
arguments.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brick, involutions, kostka, refine, rimhook
from .core import format_rational, sort_comp
from .framework import (
    IndexedMatrix,
    build_A,
    build_B,
    local_lhs,
    square_fold_B,
    square_restrict_A,
    verify_inversion,
    verify_local,
)

_SYSTEMS = {
    "kostka": kostka.kostka_system,
    "rimhook": rimhook.rimhook_system,
    "refine": refine.refine_system,
    "refine-weighted": refine.weighted_system,
    "brick": brick.obt_system,
}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def parse_shape(text: str) -> tuple[int, ...]:
    """Comma-separated parts; empty string is the empty shape."""
    if text.strip() in ("", "()"):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError("bad shape %r" % text) from exc
    if any(p < 1 for p in parts):
        raise UsageError("parts must be positive in %r" % text)
    return parts


def _emit_matrix(matrix: IndexedMatrix, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(matrix.to_json(), out)
        out.write("\n")
    elif fmt == "csv":
        out.write(matrix.to_csv())
    else:
        out.write(matrix.to_ascii() + "\n")


def _cmd_matrix(args, out) -> int:
    system = _SYSTEMS[args.app]()
    if args.side == "A":
        matrix = build_A(system, args.n)
    elif args.side == "B":
        matrix = build_B(system, args.n)
    elif args.side == "Asq":
        matrix = square_restrict_A(build_A(system, args.n))
    elif args.side == "Bsq":
        matrix = square_fold_B(build_B(system, args.n))
    else:
        raise UsageError("unknown side %r" % args.side)
    _emit_matrix(matrix, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    system = _SYSTEMS[args.app]()
    inversion = verify_inversion(system, args.n)
    report = verify_local(system, args.n) if args.n >= 1 else None
    local_ok = report.passed if report else True
    out.write(
        "inversion n=%d: %s\n" % (args.n, "pass" if inversion else "FAIL")
    )
    if report:
        out.write(
            "local identities n=%d: %s (%d pairs)\n"
            % (args.n, "pass" if local_ok else "FAIL", report.pairs_checked)
        )
        for lam, mu, value in report.failures:
            out.write("  violation at %r, %r: %s\n" % (lam, mu, format_rational(value)))
    return 0 if inversion and local_ok else 1


def _cmd_local(args, out) -> int:
    lam = parse_shape(args.lam)
    mu = parse_shape(args.mu)
    system = _SYSTEMS[args.app]()
    value = local_lhs(system, lam, mu)
    shared = []
    for length in range(1, sum(lam) + 1):
        common = set(system.succ_a(lam, length)) & set(system.succ_b(mu, length))
        for gamma in sorted(common, reverse=True):
            term = system.weight_a(lam, gamma) * system.weight_b(mu, gamma)
            shared.append({"gamma": list(gamma), "term": format_rational(term)})
    json.dump({"G": shared, "total": format_rational(value)}, out)
    out.write("\n")
    return 0


def _enumerate_ssyt(shape, content):
    return [{"object": f.to_json()} for f in kostka.enumerate_ssyt(shape, content)]


def _enumerate_srht(shape, content):
    found = kostka.srht_find(shape, content)
    return [] if found is None else [{"object": found[0].to_json(), "sign": found[1]}]


def _enumerate_rht(shape, content):
    return [
        {"object": f.to_json(), "sign": sign}
        for f, sign in rimhook.enumerate_rht(shape, content)
    ]


def _enumerate_cbt(shape, content):
    found = refine.cbt_find(shape, content)
    return [] if found is None else [{"object": found[0].to_json(), "sign": found[1]}]


def _enumerate_obt(shape, content):
    kind = list(sort_comp(content))
    return [
        {"object": f.to_json(), "type": kind}
        for f in brick.enumerate_obt(shape, content)
    ]


_ENUMERATORS = {
    "ssyt": _enumerate_ssyt,
    "srht": _enumerate_srht,
    "rht": _enumerate_rht,
    "cbt": _enumerate_cbt,
    "obt": _enumerate_obt,
}


def _cmd_enumerate(args, out) -> int:
    shape = parse_shape(args.shape)
    content = parse_shape(args.content)
    try:
        objects = _ENUMERATORS[args.kind](shape, content)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for obj in objects:
        json.dump(obj, out)
        out.write("\n")
    return 0


def _cmd_pair(args, out) -> int:
    lam = parse_shape(args.lam)
    mu = parse_shape(args.mu)
    if args.app == "kostka":
        pairing = kostka.kostka_pair(lam, mu)
    elif args.app == "rimhook":
        pairing = rimhook.rimhook_pair(lam, mu)
    else:
        raise UsageError("pair supports kostka and rimhook")
    json.dump(
        {
            "kind": pairing.kind,
            "members": [
                {"gamma": list(g), "sign": s} for g, s in pairing.members
            ],
        },
        out,
    )
    out.write("\n")
    return 0


def _cmd_involute(args, out) -> int:
    try:
        with open(args.input) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    trace: list | None = [] if args.trace else None
    try:
        if args.app == "kostka":
            obj = involutions.KostkaPair.from_json(data)
            image = involutions.kostka_involution(obj, trace)
        elif args.app == "rimhook":
            obj = involutions.RhtTriple.from_json(data)
            image = involutions.rht_involution(obj, trace)
        else:
            raise UsageError("involute supports kostka and rimhook")
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    result = {"fixed": image is None}
    if image is not None:
        result.update(image.to_json())
    if trace is not None:
        result["trace"] = trace
    json.dump(result, out)
    out.write("\n")
    return 0


def _cmd_abacus(args, out) -> int:
    lam = parse_shape(args.partition)
    if args.beads < len(lam):
        raise UsageError("need at least one bead per part")
    abacus = rimhook.abacus_from_partition(lam, args.beads)
    result = {"abacus": abacus.to_json(), "partition": list(lam)}
    if args.move:
        source, target = args.move
        try:
            moved, sign = rimhook.abacus_move_bead(abacus, source, target)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        result["moved"] = {
            "abacus": moved.to_json(),
            "partition": list(moved.partition()),
            "sign": sign,
        }
    json.dump(result, out)
    out.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combinv",
        description="combinatorial matrix families with exact verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", help="print a matrix of one family")
    matrix.add_argument("--app", required=True, choices=sorted(_SYSTEMS))
    matrix.add_argument("--n", required=True, type=int)
    matrix.add_argument("--side", default="A", choices=["A", "B", "Asq", "Bsq"])
    matrix.add_argument("--format", default="ascii", choices=["json", "csv", "ascii"])
    matrix.set_defaults(func=_cmd_matrix)

    verify = sub.add_parser("verify", help="check inversion and local identities")
    verify.add_argument("--app", required=True, choices=sorted(_SYSTEMS))
    verify.add_argument("--n", required=True, type=int)
    verify.set_defaults(func=_cmd_verify)

    local = sub.add_parser("local", help="evaluate one local identity")
    local.add_argument("--app", required=True, choices=sorted(_SYSTEMS))
    local.add_argument("--lambda", dest="lam", required=True)
    local.add_argument("--mu", required=True)
    local.set_defaults(func=_cmd_local)

    enumerate_ = sub.add_parser("enumerate", help="stream combinatorial objects")
    enumerate_.add_argument("--kind", required=True, choices=sorted(_ENUMERATORS))
    enumerate_.add_argument("--shape", required=True)
    enumerate_.add_argument("--content", required=True)
    enumerate_.set_defaults(func=_cmd_enumerate)

    pair = sub.add_parser("pair", help="resolve a local cancellation pair")
    pair.add_argument("--app", required=True, choices=["kostka", "rimhook"])
    pair.add_argument("--lambda", dest="lam", required=True)
    pair.add_argument("--mu", required=True)
    pair.set_defaults(func=_cmd_pair)

    involute = sub.add_parser("involute", help="apply a sign-reversing involution")
    involute.add_argument("--app", required=True, choices=["kostka", "rimhook"])
    involute.add_argument("--input", required=True)
    involute.add_argument("--trace", action="store_true")
    involute.set_defaults(func=_cmd_involute)

    abacus = sub.add_parser("abacus", help="bead words and bead moves")
    abacus.add_argument("--partition", required=True)
    abacus.add_argument("--beads", required=True, type=int)
    abacus.add_argument("--move", nargs=2, type=int, metavar=("FROM", "TO"))
    abacus.set_defaults(func=_cmd_abacus)

    return parser


def run(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
