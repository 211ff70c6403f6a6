"""Command-line front end.

Every subcommand prints a JSON payload on stdout (bitrade optionally CSV)
and exits 0 on success, 2 on a violated precondition or a provably
nonexistent request, and 3 on an internal assertion failure.  Output is
deterministic for fixed arguments, including --seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bitrade import build_bitrade, validate_homogeneous
from .census import census
from .construct import distance3_pair, even_char_theta, max_degree_orthomorphism
from .errors import PreconditionError, SearchExhaustedError
from .gf import FieldSpec, build_field, field_from_json
from .ortho import (cyclotomic_profile, is_irregular, is_orthomorphism,
                    is_permutation, map_table)
from .polyops import interpolate, reduced_poly, tabulate


def _parse_modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise PreconditionError(
            "--modulus wants comma-separated integers, constant term first")


def _build_from_args(args) -> FieldSpec:
    modulus = _parse_modulus(args.modulus) if args.modulus else None
    return build_field(args.p, args.r, modulus, args.gamma)


def _add_field_args(sub) -> None:
    sub.add_argument("p", type=int, help="field characteristic, a prime")
    sub.add_argument("r", type=int, help="extension degree")
    sub.add_argument("--modulus", metavar="C0,C1,...,CR",
                     help="monic irreducible modulus, constant term first")
    sub.add_argument("--gamma", type=int, default=None,
                     help="primitive element code (default: smallest)")


def _map_payload(t) -> dict:
    return {"field": t.field.to_json(), "values": list(t.values)}


def cmd_field(args) -> dict:
    fs = _build_from_args(args)
    return {"field": fs.to_json(), "q": fs.q}


def cmd_pair(args) -> dict:
    fs = _build_from_args(args)
    pair = distance3_pair(fs, seed=args.seed)
    return {
        "field": fs.to_json(),
        "f": _map_payload(pair.f),
        "g": _map_payload(pair.g),
        "distance": pair.distance,
        "provenance": pair.provenance,
        "f_poly": interpolate(pair.f).to_json(),
        "g_poly": interpolate(pair.g).to_json(),
    }


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise PreconditionError(f"cannot read JSON input: {e}")
    if not isinstance(doc, dict):
        raise PreconditionError("input JSON must be an object")
    return doc


def cmd_verify(args) -> dict:
    doc = _load_json(args.map if args.map else args.poly)
    try:
        fs = field_from_json(doc["field"])
        if args.map:
            t = map_table(fs, doc["values"])
            degree = interpolate(t).degree
        else:
            poly = reduced_poly(fs, doc["coeffs"])
            t = tabulate(poly)
            degree = poly.degree
    except PreconditionError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise PreconditionError(f"malformed input document: {e!r}")
    ortho = is_orthomorphism(t)
    return {
        "permutation": is_permutation(t),
        "orthomorphism": ortho,
        "reduced_degree": degree,
        "cyclotomic_min_index": cyclotomic_profile(t).min_index,
        "irregular": is_irregular(t) if ortho else None,
    }


def cmd_bitrade(args):
    fs = _build_from_args(args)
    pair = distance3_pair(fs, seed=args.seed)
    b = build_bitrade(pair.f, pair.g)
    assert validate_homogeneous(b), "constructed bitrade failed validation"
    if args.format == "csv":
        return b.to_csv()
    payload = b.to_json()
    payload["homogeneous"] = True
    return payload


def cmd_census(args) -> dict:
    fs = _build_from_args(args)
    report = census(fs, jobs=args.jobs)
    out = {"field": fs.to_json()}
    out.update(report.to_json())
    return out


def cmd_irregular(args) -> dict:
    fs = _build_from_args(args)
    q = fs.q
    if fs.p == 2 and q > 4:
        # multiply-by-a with one shifted 4-block; scan (a, c) ascending for
        # the first witness that survives the brute-force check
        for a in range(2, q):
            for c in range(1, q):
                if c in (1, a, a ^ 1):
                    continue
                t = even_char_theta(fs, a, c)
                if is_irregular(t):
                    payload = _map_payload(t)
                    payload["branch"] = "even-theta"
                    payload["params"] = {"a": a, "c": c}
                    payload["irregular"] = True
                    return payload
        raise AssertionError(f"even-q scan found no irregular witness for q={q}")
    if q > 7 and q % 3 != 1:
        poly = max_degree_orthomorphism(fs, seed=args.seed)
        t = tabulate(poly)
        assert is_irregular(t), "maximal-degree orthomorphism is not irregular"
        payload = _map_payload(t)
        payload["branch"] = "max-degree"
        payload["degree"] = poly.degree
        payload["irregular"] = True
        return payload
    raise PreconditionError(
        f"no irregular-orthomorphism construction applies to q={q}: "
        "need even q > 4, or q > 7 with q not 1 mod 3")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthokit",
        description="Orthomorphism constructions, verification, bitrades and "
                    "censuses over finite fields.")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("field", help="build a field and print its description")
    _add_field_args(s)
    s.set_defaults(func=cmd_field)

    s = subs.add_parser("pair", help="orthomorphism pair at Hamming distance 3")
    _add_field_args(s)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_pair)

    s = subs.add_parser("verify", help="check a map or polynomial from JSON")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--map", metavar="FILE",
                     help="JSON {field, values}; '-' reads stdin")
    grp.add_argument("--poly", metavar="FILE",
                     help="JSON {field, coeffs}; '-' reads stdin")
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("bitrade", help="3-homogeneous bitrade from a distance-3 pair")
    _add_field_args(s)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_bitrade)

    s = subs.add_parser("census", help="exhaustive orthomorphism census (q <= 13)")
    _add_field_args(s)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = subs.add_parser("irregular", help="construct and verify an irregular orthomorphism")
    _add_field_args(s)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_irregular)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (PreconditionError, SearchExhaustedError, ZeroDivisionError) as e:
        print(json.dumps({"error": type(e).__name__, "reason": str(e)},
                         indent=2, sort_keys=True))
        return 2
    except AssertionError as e:
        print(f"internal assertion failed: {e}", file=sys.stderr)
        return 3
    if isinstance(out, str):
        print(out)
    else:
        print(json.dumps(out, indent=2, sort_keys=True))
    return 0
