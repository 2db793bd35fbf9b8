"""Command line interface.

Subcommands: cosets, bound, decode, check, ratio-grid.  Machine output is
JSON on stdout (CSV for grids); --human switches to aligned text where
available.  Exit codes: 0 = ran (including decode failures reported in the
JSON), 1 = usage or parse error, 2 = internal invariant violation.

Code spec files are JSON documents with keys q, n, and exactly one of
coset_reps / defining_set (negative exponents allowed, canonicalized mod
n), plus an optional name.  A defining_set that is not closed under
multiplication by q is closed with a warning on stderr.

Received words are strings of base-q digits with the coefficient of x^0
first (use comma-separated digits when q > 10).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cyclic, decoder, fixtures, nzl
from .cyclic import SearchCapExceeded, TooManyCodewords
from .gf import NotCoprime


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 instead of argparse's 2
        raise UsageError(message)


def load_code_spec(path: str) -> cyclic.CyclicCodeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise UsageError("code spec must be a JSON object")
    for key in ("q", "n"):
        if not isinstance(doc.get(key), int):
            raise UsageError(f"code spec needs integer '{key}'")
    q, n = doc["q"], doc["n"]
    has_reps = "coset_reps" in doc
    has_def = "defining_set" in doc
    if has_reps == has_def:
        raise UsageError("exactly one of coset_reps / defining_set is required")
    name = doc.get("name")
    if has_reps:
        reps = doc["coset_reps"]
    else:
        wanted = {i % n for i in doc["defining_set"]}
        closed: set[int] = set()
        reps_set: set[int] = set()
        for i in sorted(wanted):
            if i not in closed:
                c = cyclic.cyclotomic_coset(n, q, i)
                closed |= c
                reps_set.add(min(c))
        if closed != wanted:
            print(
                f"warning: defining_set was not closed under multiplication by {q}; "
                f"closed it ({sorted(closed - wanted)} added)",
                file=sys.stderr,
            )
        reps = sorted(reps_set)
    try:
        return cyclic.build_code(q, n, reps, name=name)
    except (ValueError, NotCoprime) as err:
        raise UsageError(str(err))


def _code_json(code: cyclic.CyclicCodeSpec) -> dict:
    return {
        "name": code.name,
        "q": code.q,
        "n": code.n,
        "k": code.k,
        "coset_reps": list(code.coset_reps),
        "defining_set": list(code.defining_set),
    }


def _cert_json(cert: nzl.NzlCertificate) -> dict:
    loc = cert.locator
    return {
        "e": cert.e,
        "w": cert.w,
        "t_l": cert.t_l,
        "mu": cert.mu,
        "d_star": cert.d_star,
        "locator": {
            "kind": loc.kind,
            "u": loc.u,
            "n_l": loc.n_l,
            "defining_set": list(loc.defining_set),
            "d_l": loc.d_l,
            "support": list(loc.support),
            "coeffs": None if loc.coeffs is None else list(loc.coeffs),
        },
    }


def cmd_cosets(args) -> int:
    try:
        cosets = cyclic.coset_partition(args.n, args.q)
    except (ValueError, NotCoprime) as err:
        raise UsageError(str(err))
    if args.json:
        print(json.dumps({"n": args.n, "q": args.q, "cosets": [sorted(c) for c in cosets]}, indent=2))
    else:
        for c in cosets:
            members = sorted(c)
            print(f"C_{min(members)} = {{{', '.join(map(str, members))}}}")
    return 0


def cmd_bound(args) -> int:
    code = load_code_spec(args.spec)
    want_all = not (args.bch or args.ht or args.nzl or args.oracle)
    record: dict = {"code": _code_json(code)}
    if args.bch or want_all:
        w = cyclic.bch_bound(code)
        record["bch"] = {"value": w.value, "witness": {"b": w.b, "m1": w.m1}}
    if args.ht or want_all:
        try:
            w = cyclic.ht_bound(code)
            record["ht"] = {
                "value": w.value,
                "witness": {"b1": w.b1, "m1": w.m1, "m2": w.m2, "d0": w.d0, "nu": w.nu},
            }
        except SearchCapExceeded as err:
            record["ht"] = {"value": None, "skipped": str(err)}
    if args.nzl or want_all:
        cert, comparison = nzl.best_bound(
            code,
            max_n_l=args.max_nl,
            max_u=args.max_u,
            search_w=args.search_w,
        )
        if not nzl.verify_certificate(code.defining_set, code.n, cert):
            print("internal error: emitted certificate failed re-verification", file=sys.stderr)
            return 2
        record["nzl"] = {"d_star": comparison["d_star"], "certificate": _cert_json(cert)}
    if args.oracle or want_all:
        try:
            wit = cyclic.min_distance_oracle(code, cap=args.cap)
            record["oracle"] = {"d": wit.d, "capped": False}
        except TooManyCodewords:
            record["oracle"] = {"d": None, "capped": True}
    if args.human:
        name = code.name or f"({code.q}; {code.n}, {code.k})"
        print(f"code       {name}")
        print(f"defining   {list(code.defining_set)}")
        for key in ("bch", "ht", "nzl", "oracle"):
            if key in record:
                entry = record[key]
                value = entry.get("value", entry.get("d_star", entry.get("d")))
                print(f"{key:<10} {value}")
    else:
        print(json.dumps(record, indent=2))
    return 0


def _parse_word(text: str, q: int, n: int) -> list[int]:
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text.strip())
    try:
        word = [int(p) for p in parts]
    except ValueError:
        raise UsageError("received word must be base-q digits")
    if len(word) != n:
        raise UsageError(f"received word must have exactly {n} digits")
    if any(not 0 <= d < q for d in word):
        raise UsageError(f"digits must lie in [0, {q})")
    return word


def cmd_decode(args) -> int:
    code = load_code_spec(args.spec)
    word = _parse_word(args.received, code.q, code.n)
    if args.spc:
        locator = nzl.spc_locator(args.spc, code.q)
        cert = nzl.mu_search(code.defining_set, code.n, locator, search_w=args.search_w)
    elif args.trivial:
        locator = nzl.trivial_locator()
        cert = nzl.mu_search(code.defining_set, code.n, locator, search_w=args.search_w)
    else:
        cert, _ = nzl.best_bound(
            code, max_n_l=args.max_nl, max_u=args.max_u, search_w=args.search_w
        )
        locator = cert.locator
    ctx = decoder.build_context(code, locator, cert)
    result = decoder.decode(ctx, word)
    doc = {
        "status": result.status,
        "reason": result.reason,
        "d_star": cert.d_star,
        "correctable": (cert.d_star - 1) // 2,
        "positions": list(result.positions),
        "values": {str(p): v for p, v in result.values.items()},
        "corrected": None if result.corrected is None else list(result.corrected),
    }
    print(json.dumps(doc, indent=2))
    return 0


def cmd_check(args) -> int:
    results = fixtures.run_fixtures(only=args.only)
    if not results:
        raise UsageError(f"no fixture matches {args.only!r}")
    failed = [r for r in results if not r.ok]
    if args.json:
        print(
            json.dumps(
                [
                    {"name": r.name, "ok": r.ok, "expected": repr(r.expected), "computed": repr(r.computed)}
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            mark = "pass" if r.ok else "FAIL"
            line = f"{r.name:<{width}}  {mark}"
            if not r.ok:
                line += f"  expected {r.expected!r}, computed {r.computed!r}"
            print(line)
        print(f"{len(results) - len(failed)}/{len(results)} fixtures pass")
    return 1 if failed else 0


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition(":")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"range must look like LO:HI, got {text!r}")


def _parse_m_rule(text: str):
    # accepted forms: "nu+K" or "nu+K1..nu+K2"
    def offset(part: str) -> int:
        part = part.strip()
        if not part.startswith("nu+"):
            raise UsageError(f"m rule terms must look like nu+K, got {part!r}")
        try:
            return int(part[3:])
        except ValueError:
            raise UsageError(f"bad m rule term {part!r}")

    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = offset(lo_s), offset(hi_s)
        if lo < 2 or hi < lo:
            raise UsageError("m rule offsets must satisfy 2 <= K1 <= K2")
        return lambda nu: range(nu + lo, nu + hi + 1)
    k = offset(text)
    if k < 2:
        raise UsageError("m rule offset must be at least 2")
    return lambda nu: [nu + k]


def cmd_ratio_grid(args) -> int:
    nu_range = _parse_range(args.nu_range)
    d0_range = _parse_range(args.d0_range)
    if len(d0_range) == 0 or len(nu_range) == 0 or d0_range[0] < 2 or nu_range[0] < 0:
        raise UsageError("need nu >= 0 and d0 >= 2 with nonempty ranges")
    m_rule = _parse_m_rule(args.m_rule)
    if args.out == "-":
        nzl.ratio_grid_csv(nu_range, d0_range, m_rule, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            nzl.ratio_grid_csv(nu_range, d0_range, m_rule, fh)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="cycbound", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="list the cyclotomic cosets mod n over GF(q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_cosets)

    p = sub.add_parser("bound", help="compute distance bounds for a code spec file")
    p.add_argument("spec", help="path to a JSON code spec")
    p.add_argument("--bch", action="store_true")
    p.add_argument("--ht", action="store_true")
    p.add_argument("--nzl", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--max-nl", type=int, default=12, help="largest locator length (default 12)")
    p.add_argument("--max-u", type=int, default=4, help="largest locator extension degree (default 4)")
    p.add_argument("--search-w", action=argparse.BooleanOptionalAction, default=None,
                   help="search unit steps w (default: on for n <= 255)")
    p.add_argument("--cap", type=int, default=1 << 24, help="oracle codeword cap (default 2^24)")
    p.add_argument("--human", action="store_true", help="aligned text instead of JSON")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("spec", help="path to a JSON code spec")
    p.add_argument("--received", required=True,
                   help="base-q digit string, coefficient of x^0 first (commas for q > 10)")
    p.add_argument("--spc", type=int, default=None, help="use a single-parity-check locator of this length")
    p.add_argument("--trivial", action="store_true", help="use the trivial locator (classical decoding)")
    p.add_argument("--max-nl", type=int, default=12)
    p.add_argument("--max-u", type=int, default=4)
    p.add_argument("--search-w", action=argparse.BooleanOptionalAction, default=None)
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("check", help="run the built-in reference fixtures")
    p.add_argument("--only", default=None, help="run only fixtures whose name contains this substring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("ratio-grid", help="emit the bound/HT ratio grid as CSV")
    p.add_argument("--nu-range", default="1:6", help="LO:HI (default 1:6)")
    p.add_argument("--d0-range", default="2:20", help="LO:HI (default 2:20)")
    p.add_argument("--m-rule", default="nu+2", help="nu+K or nu+K1..nu+K2 (default nu+2)")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.set_defaults(fn=cmd_ratio_grid)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except AssertionError as err:
        print(f"internal invariant violation: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
