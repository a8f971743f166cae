"""Command-line driver.

Subcommands: info, variety, multiplet, hdim, twist, prolong, verify.  All
outputs have a --json form with a versioned, fully sorted schema so repeated
runs are byte-identical.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cache as cache_mod
from .algebras import check_conformal_type, derivations_deg0
from .fixtures import FIXTURES, verify
from .groebner import (
    StepBudgetExceeded,
    hilbert_series,
    ideal_gb,
    ideal_gb_polys,
    krull_dim,
)
from .multiplets import component_fields, hdim, multiplet_module
from .prolongation import tanaka_prolongation
from .resolutions import is_gorenstein, koszul_tor, minimal_free_resolution
from .specfile import SpecError, parse_spec
from .twisting import catalog_twist_vector, twist_pipeline

SCHEMA = 1


def _load_algebra(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_spec(text).build()


def _emit(payload: dict, as_json: bool, render_text) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        render_text(payload)


def _q_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_info(args) -> int:
    alg = _load_algebra(args.spec)
    g0 = derivations_deg0(alg)
    report = check_conformal_type(alg, g0)
    payload = {
        "schema": SCHEMA,
        "name": alg.name,
        "odd_dim": alg.k,
        "even_dim": alg.d,
        "g0_dim": g0.dim,
        "rho2_image_dim": report.rho2_image_dim,
        "r_symmetry_dim": report.r_symmetry_dim,
        "conformal_type": {
            "surjective_bracket": report.surjective,
            "expected_image_dim": report.expected_image_dim,
            "has_invariant_metric": report.has_invariant_metric,
            "conformal": report.conformal,
        },
        "ideal_generators": sorted(str(q) for q in alg.quadrics() if not q.is_zero()),
    }

    def text(p):
        print(f"algebra {p['name']}: odd {p['odd_dim']} | even {p['even_dim']}")
        print(f"derivations: dim {p['g0_dim']}, even-action image {p['rho2_image_dim']},"
              f" R-symmetry {p['r_symmetry_dim']}")
        ct = p["conformal_type"]
        print(f"conformal type: {ct['conformal']}"
              f" (bracket surjective: {ct['surjective_bracket']},"
              f" invariant metric: {ct['has_invariant_metric']})")
        print("ideal generators:")
        for q in p["ideal_generators"]:
            print(f"  {q}")

    _emit(payload, args.json, text)
    return 0


def cmd_variety(args) -> int:
    alg = _load_algebra(args.spec)
    descriptor = {
        "analysis": "variety",
        "schema": SCHEMA,
        "gamma": [[_q_str(x) for x in row] for a in alg.gamma for row in a],
        "dims": [alg.k, alg.d],
    }

    def compute():
        gb = ideal_gb(alg.ring(), alg.quadrics())
        hs = hilbert_series(gb)
        dim_y = krull_dim(gb)
        cm, gor = is_gorenstein(alg.ring(), alg.quadrics())
        return {
            "groebner_basis": sorted(str(p) for p in ideal_gb_polys(gb)),
            "hilbert_numerator": [[d, c] for d, c in sorted(hs.numerator.items())],
            "dim_variety": dim_y,
            "hdim": alg.d - alg.k + dim_y,
            "cohen_macaulay": cm,
            "gorenstein": gor,
        }

    value = cache_mod.cached(args.cache_dir, descriptor, compute, args.verify_cache)
    payload = {"schema": SCHEMA, "name": alg.name, **value}

    def text(p):
        print(f"nilpotence variety of {p['name']}")
        print(f"dim Y = {p['dim_variety']}, hdim = {p['hdim']}")
        print(f"Cohen-Macaulay: {p['cohen_macaulay']}, Gorenstein: {p['gorenstein']}")
        num = " + ".join(f"{c}*t^{d}" if d else str(c) for d, c in p["hilbert_numerator"])
        print(f"Hilbert numerator: {num}")
        print("Groebner basis:")
        for g in p["groebner_basis"]:
            print(f"  {g}")

    _emit(payload, args.json, text)
    return 0


def cmd_multiplet(args) -> int:
    alg = _load_algebra(args.spec)
    kind = args.kind
    descriptor = {
        "analysis": f"multiplet:{kind}",
        "schema": SCHEMA,
        "gamma": [[_q_str(x) for x in row] for a in alg.gamma for row in a],
        "dims": [alg.k, alg.d],
        "window": args.window,
    }

    def compute():
        mod = multiplet_module(alg, kind)
        _, betti = minimal_free_resolution(mod.module)
        table = component_fields(mod, betti)
        out = {
            "kind": kind,
            "betti": [[i, j, m] for (i, j), m in sorted(betti.entries.items())],
            "complete": betti.complete,
            "table": [[r, c, v] for (r, c), v in sorted(table.cells.items())],
        }
        if args.window is not None:
            oracle = koszul_tor(mod.module, (0, args.window))
            out["koszul_betti"] = [
                [i, j, m] for (i, j), m in sorted(oracle.entries.items())
            ]
            out["koszul_agrees"] = all(
                oracle.entries.get(key) == betti.entries.get(key)
                for key in set(oracle.entries) | set(
                    k for k in betti.entries if k[1] <= args.window
                )
            )
        return out

    value = cache_mod.cached(args.cache_dir, descriptor, compute, args.verify_cache)
    payload = {"schema": SCHEMA, "name": alg.name, **value}

    def text(p):
        print(f"{p['kind']} multiplet of {p['name']}")
        print("Betti table (index, degree, multiplicity):")
        for i, j, m in p["betti"]:
            print(f"  {i} {j} {m}")
        print("component fields (row, column, dimension):")
        rows = {}
        for r, c, v in p["table"]:
            rows.setdefault(r, {})[c] = v
        cols = sorted({c for _, c, _ in p["table"]})
        print("      " + " ".join(f"{c:>6}" for c in cols))
        for r in sorted(rows):
            cells = " ".join(f"{rows[r].get(c, '.'):>6}" for c in cols)
            print(f"  {r:>3}: {cells}")
        if "koszul_agrees" in p:
            print(f"Koszul oracle agrees: {p['koszul_agrees']}")

    _emit(payload, args.json, text)
    return 0


def cmd_hdim(args) -> int:
    alg = _load_algebra(args.spec)
    value = hdim(alg, cross_check=args.cross_check)
    payload = {
        "schema": SCHEMA,
        "name": alg.name,
        "hdim": value,
        "cross_checked": bool(args.cross_check),
    }
    _emit(payload, args.json, lambda p: print(p["hdim"]))
    return 0


def cmd_twist(args) -> int:
    alg = _load_algebra(args.spec)
    try:
        q = [Fraction(part) for part in args.q.split(",")]
    except ValueError:
        q = catalog_twist_vector(alg, args.q)
    report = twist_pipeline(alg, q, targets=tuple(args.analyses or ()))
    res = report.result
    payload = {
        "schema": SCHEMA,
        "name": alg.name,
        "q": [_q_str(x) for x in res.q],
        "twisted": {
            "odd_dim": res.twisted.k,
            "even_dim": res.twisted.d,
            "ideal_generators": sorted(
                str(p) for p in res.twisted.quadrics() if not p.is_zero()
            ),
        },
        "hdim_source": report.hdim_source,
        "hdim_twisted": report.hdim_twisted,
        "hdim_invariant": report.hdim_invariant,
    }
    analyses_payload = {}
    for name, data in sorted(report.analyses.items()):
        if name in ("conf", "kaehler", "canonical"):
            analyses_payload[name] = {
                "betti": [[i, j, m] for (i, j), m in sorted(data["betti"].entries.items())],
                "table": [[r, c, v] for (r, c), v in sorted(data["table"].cells.items())],
            }
        elif name == "variety":
            analyses_payload[name] = {
                "hilbert_numerator": [
                    [d, c] for d, c in sorted(data["hilbert"].numerator.items())
                ],
                "gb_size": data["gb_size"],
            }
        elif name == "conformal_type":
            analyses_payload[name] = {
                "conformal": data.conformal,
                "surjective_bracket": data.surjective,
            }
    if analyses_payload:
        payload["analyses"] = analyses_payload

    def text(p):
        print(f"twist of {p['name']} by q = ({', '.join(p['q'])})")
        t = p["twisted"]
        print(f"twisted algebra: odd {t['odd_dim']} | even {t['even_dim']}")
        print(f"hdim: {p['hdim_source']} -> {p['hdim_twisted']}"
              f" (invariant: {p['hdim_invariant']})")
        for g in t["ideal_generators"]:
            print(f"  {g}")
        for name, data in sorted(p.get("analyses", {}).items()):
            print(f"[{name}] {json.dumps(data, sort_keys=True)}")

    _emit(payload, args.json, text)
    return 0


def cmd_prolong(args) -> int:
    alg = _load_algebra(args.spec)
    res = tanaka_prolongation(alg, max_degree=args.cap)
    payload = {
        "schema": SCHEMA,
        "name": alg.name,
        "dims": [[m, v] for m, v in sorted(res.dims.items())],
        "status": res.status,
        "total_even": res.total_even(),
        "total_odd": res.total_odd(),
    }

    def text(p):
        dims = ", ".join(f"{m}: {v}" for m, v in p["dims"])
        print(f"prolongation of {p['name']} ({p['status']})")
        print(f"dims {{{dims}}}")
        print(f"total {p['total_even']} even | {p['total_odd']} odd")

    _emit(payload, args.json, text)
    return 0


def cmd_verify(args) -> int:
    outcomes = verify(tier=args.tier, case_name=args.case)
    if args.case is not None and not outcomes:
        print(f"no fixture named {args.case!r}", file=sys.stderr)
        return 2
    payload = {
        "schema": SCHEMA,
        "tier": args.tier,
        "cases": [
            {
                "name": o.name,
                "passed": o.passed,
                "expected": o.expected,
                "got": o.got,
                "citation": o.citation,
                "tier": o.tier,
            }
            for o in outcomes
        ],
        "passed": all(o.passed for o in outcomes),
    }

    def text(p):
        for case in p["cases"]:
            mark = "ok  " if case["passed"] else "FAIL"
            print(f"{mark} {case['name']} [{case['tier']}] - {case['citation']}")
            if not case["passed"]:
                print(f"     expected {case['expected']}")
                print(f"     got      {case['got']}")
        n = len(p["cases"])
        good = sum(1 for c in p["cases"] if c["passed"])
        print(f"{good}/{n} fixtures passed")

    _emit(payload, args.json, text)
    return 0 if payload["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superconf",
        description="Exact superspace invariants from a supertranslation algebra",
    )
    parser.add_argument("--json", action="store_true", help="stable JSON output")
    parser.add_argument(
        "--cache-dir",
        default=cache_mod.default_cache_dir(),
        help="content-addressed cache directory (env SUPERCONF_CACHE_DIR)",
    )
    parser.add_argument(
        "--verify-cache",
        action="store_true",
        help="recompute on cache hits and compare byte for byte",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dimensions, derivations, conformal-type report")
    p.add_argument("spec")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("variety", help="Groebner basis, Hilbert series, flags")
    p.add_argument("spec")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("multiplet", help="Betti table and component fields")
    p.add_argument("kind", help="conf | kaehler | canonical | form:k")
    p.add_argument("spec")
    p.add_argument("--window", type=int, default=None,
                   help="also run the Koszul oracle up to this degree")
    p.set_defaults(func=cmd_multiplet)

    p = sub.add_parser("hdim", help="homological dimension")
    p.add_argument("spec")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_hdim)

    p = sub.add_parser("twist", help="twisted algebra and downstream analyses")
    p.add_argument("spec")
    p.add_argument("--q", required=True,
                   help="comma-separated rationals, or a catalog name like 'holomorphic'")
    p.add_argument("--analyses", nargs="*", default=None,
                   choices=["conf", "kaehler", "canonical", "variety", "conformal_type"])
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("prolong", help="maximal transitive prolongation")
    p.add_argument("spec")
    p.add_argument("--cap", type=int, default=4)
    p.set_defaults(func=cmd_prolong)

    p = sub.add_parser("verify", help="replay the paper-table fixtures")
    p.add_argument("--tier", choices=["fast", "all"], default="fast")
    p.add_argument("--case", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return 2
    except StepBudgetExceeded as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
