"""Batch front end: human-readable verification tables or JSON certificates.

Every subcommand re-runs its checks from scratch and reports one line per
claim.  Exit status is 0 exactly when every claim passes, 1 on an internal
failure (the failing claim is still reported), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .hitting import is_minimal_transversal, tau
from .incidence import check_commutation, verify_kantor
from .relational import check_profile_inequalities, profile_sequence, structure_from_json
from .setfuncs import SetFunction, product, singleton_ones
from .subsets import SetFamily, Subset
from .witnesses import (
    gadget_lower,
    gadget_tau1n,
    lower_bound_formula,
    search_best,
    tau_upper_expr,
    two_squares,
    verify,
)
from .words import (
    InvStructure,
    LEAD_BOTTOM,
    LayeredGround,
    Word,
    code_blind_function,
    lead,
    leading_product_check,
    max_shuffle,
    shuffle_product,
    word_indicator,
)


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, Subset):
        return sorted(value.elements())
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


def _claim(results: list, claim: str, expected, computed) -> bool:
    expected = _jsonable(expected)
    computed = _jsonable(computed)
    results.append(
        {"claim": claim, "expected": expected, "computed": computed, "pass": expected == computed}
    )
    return expected == computed


def _cmd_kantor(args, results: list) -> None:
    for ell in range(1, args.max_l + 1):
        for n in range(0, ell // 2 + 1):
            for m in range(0, ell - 2 * n + 1):
                if n + m == 0:
                    continue
                _claim(
                    results,
                    f"inclusion matrix ({n} -> {n + m}) on {ell} points has full row rank",
                    True,
                    verify_kantor(ell, n, m),
                )


def _cmd_tau1n(args, results: list) -> None:
    for n in range(1, args.n + 1):
        pair = gadget_tau1n(n)
        cert = verify(pair, formula_expected=2 * n)
        _claim(results, f"degree (1,{n}) pair multiplies to zero", True, cert.match is not None)
        _claim(results, f"tau of the (1,{n}) gadget", 2 * n, cert.transversal.size)


def _cmd_gadget(args, results: list) -> None:
    pair = gadget_lower(args.m, args.n)
    expected = lower_bound_formula(args.m, args.n)
    cert = verify(pair, formula_expected=expected)
    _claim(results, f"block gadget ({args.m},{args.n}) multiplies to zero", True, True)
    _claim(results, f"tau of the ({args.m},{args.n}) block gadget", expected, cert.transversal.size)
    _claim(results, "certificate matches the closed formula", True, cert.match)


def _cmd_two_squares(args, results: list) -> None:
    pair = two_squares()
    cert = verify(pair, formula_expected=7)
    _claim(results, "two-squares pair multiplies to zero", True, True)
    _claim(results, "tau of the two-squares support", 7, cert.transversal.size)
    family = SetFamily(8, set(pair.f.support()) | set(pair.g.support()))
    full = (1 << 8) - 1
    cos = [
        x
        for x in range(8)
        if is_minimal_transversal(Subset(8, full ^ (1 << x)), family)
    ]
    _claim(results, "number of minimal co-singleton transversals", 8, len(cos))
    for x in cos:
        _claim(
            results,
            f"all points except {x} form a minimal transversal",
            sorted(set(range(8)) - {x}),
            sorted(Subset(8, full ^ (1 << x)).elements()),
        )


def _cmd_search(args, results: list) -> None:
    cert = search_best(args.m, args.n, args.l, strategy=args.strategy, seed=args.seed)
    if cert is None:
        _claim(results, "search found a verified zero-divisor pair", True, False)
        return
    _claim(results, "search found a verified zero-divisor pair", True, True)
    _claim(
        results,
        f"best tau found on {args.l} points at degrees ({args.m},{args.n})",
        cert.transversal.size,
        cert.transversal.size,
    )
    if cert.formula_expected is not None:
        _claim(results, "best certificate matches the closed formula", True, cert.match)


def _cmd_bound(args, results: list) -> None:
    expr = tau_upper_expr(args.m, args.n)
    rendered = expr.render()
    _claim(results, f"upper bound for tau({args.m},{args.n})", rendered, rendered)
    lo, hi = min(args.m, args.n), max(args.m, args.n)
    if lo == 0:
        _claim(results, "exact value (degree zero case)", 0, expr.exact_value)
    elif lo == 1:
        _claim(results, "exact value (linear case)", 2 * hi, expr.exact_value)


def _cmd_profile(args, results: list) -> None:
    with open(args.input, "r", encoding="utf-8") as fh:
        structure = structure_from_json(fh.read())
    upto = structure.base_size if args.max_n is None else min(args.max_n, structure.base_size)
    seq = tuple(profile_sequence(structure)[: upto + 1])
    _claim(results, f"profile values for degrees 0..{upto}", list(seq), list(seq))
    report = check_profile_inequalities(structure)
    for chk in report.checks:
        if chk["n"] > upto or chk["n"] + chk.get("m", 1) > upto:
            continue
        _claim(
            results,
            f"{chk['kind']} inequality at n={chk['n']}"
            + (f", m={chk['m']}" if "m" in chk else ""),
            True,
            chk["lhs"] <= chk["rhs"],
        )


def _cmd_words(args, results: list) -> None:
    u, v = Word([3, 1]), Word([3])
    _claim(results, "radix order puts longer words above", True, v < u)
    _claim(
        results,
        "largest interleaving of (2,1)-letter and (2)-letter words",
        [3, 3, 1],
        list(max_shuffle(u, v)),
    )
    sq = shuffle_product(word_indicator(Word([1])), word_indicator(Word([1])))
    _claim(results, "square of a one-letter indicator", {"(1, 1)": "2"},
           {str(tuple(w)): str(val) for w, val in sq.coeffs.items()})
    layered = LayeredGround(1, 2, 4)
    zero = SetFunction(layered.flat_size, 2, {})
    _claim(results, "lead of the zero function is the bottom marker", True,
           lead(zero, layered) == LEAD_BOTTOM)
    f = code_blind_function(layered, 2, seed=args.seed, need_pure_column_support=True)
    g = code_blind_function(layered, 2, seed=args.seed + 1)
    rep = leading_product_check(f, g, InvStructure.from_pair(layered, f, g))
    for name, ok in rep.checks.items():
        _claim(results, f"leading-term property: {name}", True, ok)


def _cmd_commutation(args, results: list) -> None:
    e = singleton_ones(args.l)
    _claim(
        results,
        f"derivation and scaling commute for the all-ones weight on {args.l} points",
        True,
        check_commutation(e, args.n),
    )
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.trials):
        coeffs = {}
        for x in range(args.l):
            val = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            if val:
                coeffs[Subset(args.l, 1 << x)] = val
        ok = ok and check_commutation(SetFunction(args.l, 1, coeffs), args.n)
    _claim(
        results,
        f"derivation and scaling commute for {args.trials} random weights",
        True,
        ok,
    )


_DISPATCH = {
    "kantor": _cmd_kantor,
    "tau1n": _cmd_tau1n,
    "gadget": _cmd_gadget,
    "two-squares": _cmd_two_squares,
    "search": _cmd_search,
    "bound": _cmd_bound,
    "profile": _cmd_profile,
    "words": _cmd_words,
    "commutation": _cmd_commutation,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as canonical JSON")
    parser = argparse.ArgumentParser(
        prog="agealg",
        description="verify transversal certificates and algebra identities",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kantor", parents=[common], help="rank sweep for inclusion matrices")
    p.add_argument("--max-l", type=int, required=True)

    p = sub.add_parser("tau1n", parents=[common], help="degree-(1,n) gadgets and their tau values")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("gadget", parents=[common], help="block gadget certificate for general degrees")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    sub.add_parser("two-squares", parents=[common], help="the eight-point worked example")

    p = sub.add_parser("search", parents=[common], help="search supports for large-tau pairs")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", choices=("gadget", "random", "all"), default="all")

    p = sub.add_parser("bound", parents=[common], help="symbolic upper bound from the recurrence")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("profile", parents=[common], help="profile table and growth inequalities")
    p.add_argument("--input", required=True)
    p.add_argument("--max-n", type=int, default=None)

    p = sub.add_parser("words", parents=[common], help="shuffle, lead, and invariance demonstration")
    p.add_argument("--demo", action="store_true", help="run the worked property demonstration")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("commutation", parents=[common], help="derivation/scaling commutation sweep")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    return parser


def run(argv: list[str]) -> tuple[int, dict]:
    """Parse argv, execute the subcommand, and build the report."""
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {
        k: v for k, v in vars(args).items() if k not in ("command", "json") and v is not None
    }
    seed = getattr(args, "seed", 0)
    results: list[dict] = []
    start = time.monotonic()
    code = 0
    try:
        _DISPATCH[args.command](args, results)
    except Exception as ex:  # noqa: BLE001 - reported, not swallowed
        results.append(
            {
                "claim": f"internal failure: {ex}",
                "expected": "no exception",
                "computed": f"{type(ex).__name__}: {ex}",
                "pass": False,
            }
        )
        code = 1
    if code == 0 and not all(r["pass"] for r in results):
        code = 1
    report = {
        "command": args.command,
        "inputs": _jsonable(inputs),
        "results": results,
        "seed": seed,
        "elapsed_ms": int((time.monotonic() - start) * 1000),
    }
    return code, report


def dumps_report(report: dict) -> str:
    """Canonical serialization; parsing and re-dumping is byte-identical."""
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    code, report = run(argv)
    if want_json:
        print(dumps_report(report))
        return code
    print(f"{report['command']}  (seed {report['seed']}, {report['elapsed_ms']} ms)")
    for r in report["results"]:
        mark = "ok " if r["pass"] else "FAIL"
        print(f"  [{mark}] {r['claim']}: expected {r['expected']}, computed {r['computed']}")
    passed = sum(1 for r in report["results"] if r["pass"])
    print(f"{passed}/{len(report['results'])} claims pass")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
