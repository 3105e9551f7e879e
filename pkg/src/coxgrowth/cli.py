"""Command-line front end.

Exit codes: 0 success (and all checks passed), 1 computational mismatch
in verify/check/selftest, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .ratfun import RatFun, IntPoly, expand, poly_str, factored_den_str
from . import rootsystem, cones
from .finite import get_table, matrix_M, matrix_N, identity_checks_finite
from .affine import get_affine
from .series import get_pipeline


def _parse_ids(s):
    if s is None:
        return None
    s = s.replace(",", " ").strip()
    if not s:
        return []
    return [int(x) for x in s.split()]


def _subset_key(rs, mask):
    return ",".join(str(i) for i in rs.ids_of(mask))


def _ratfun_text(r):
    if r.is_polynomial():
        return poly_str(r.num)
    return f"({poly_str(r.num)}) / {factored_den_str(r.den)}"


def _fmt(r, fmt):
    if isinstance(r, IntPoly):
        r = RatFun(r)
    if fmt == "json":
        return r.to_json()
    if fmt == "latex":
        return r.to_latex()
    return _ratfun_text(r)


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        _emit_text(obj)


def _emit_text(obj, indent=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{indent}{k}:")
                _emit_text(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if _is_flat(v):
                print(f"{indent}{v}")
            else:
                _emit_text(v, indent)
    else:
        print(f"{indent}{obj}")


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


# ---------------------------------------------------------------------------
# subcommands


def cmd_cartan(args):
    rs = rootsystem.build_label(args.label)
    out = {
        "type": rs.label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "det": rs.det_c,
        "positive_roots": len(rs.positive_roots),
        "highest_root": list(rs.highest_root),
        "r": list(rs.two_rho),
        "w": [list(w) for w in rs.cone_gens],
    }
    _emit(out, args.format)
    return 0


def cmd_finite(args):
    rs = rootsystem.build_label(args.type)
    sp = rs.full_mask if args.subset is None else rs.mask_of(
        _parse_ids(args.subset))
    table = get_table(rs, sp)
    if args.what == "poincare":
        _emit({"type": rs.label, "subset": rs.ids_of(sp),
               "order": table.order,
               "poincare": _fmt(table.poincare(), args.format)},
              args.format)
        return 0
    if args.what == "pmatrix":
        k = rs.mask_of(_parse_ids(args.K or ""))
        m = matrix_M(rs, k, sp)
        out = {"type": rs.label, "K": rs.ids_of(k),
               "rows": [rs.ids_of(q) for q in m.rows],
               "cols": [rs.ids_of(j) for j in m.cols],
               "entries": [[_fmt(e, args.format) for e in row]
                           for row in m.entries]}
        _emit(out, args.format)
        return 0
    if args.what == "hmatrix":
        j = rs.mask_of(_parse_ids(args.J or ""))
        m = matrix_N(rs, j, sp)
        out = {"type": rs.label, "J": rs.ids_of(j),
               "rows": [rs.ids_of(r) for r in m.rows],
               "cols": [rs.ids_of(k) for k in m.cols],
               "entries": [[_fmt(e, args.format) for e in row]
                           for row in m.entries]}
        _emit(out, args.format)
        return 0
    # check
    report = identity_checks_finite(rs, sp)
    failed = [n for n, ok, _ in report if not ok]
    for name, ok, detail in report:
        print(f"{'PASS' if ok else 'FAIL'} {name}"
              + (f": {detail}" if detail and not ok else ""))
    return 1 if failed else 0


def cmd_fq(args):
    rs = rootsystem.build_label(args.type)
    if args.Q is None:
        masks = rs.subsets()
    else:
        masks = [rs.mask_of(_parse_ids(args.Q))]
    out = {"type": rs.label, "w": [list(w) for w in rs.cone_gens],
           "f": {}}
    for q in masks:
        pts = cones.parallelepiped_points(rs, cones.indices_outside(rs, q))
        out["f"][_subset_key(rs, q)] = {
            "Q": rs.ids_of(q),
            "parallelepiped": [list(p) for p in pts],
            "series": _fmt(cones.f_q(rs, q), args.format),
        }
    _emit(out, args.format)
    return 0


def cmd_series(args):
    rs = rootsystem.build_label(args.type)
    pl = get_pipeline(rs)
    j = rs.mask_of(_parse_ids(args.J))
    k = rs.mask_of(_parse_ids(args.K))
    if args.Q is not None:
        q = rs.mask_of(_parse_ids(args.Q))
        r = pl.p_full(q, j, k)
    else:
        r = pl.double_coset_series(j, k)
    out = {"type": rs.label, "J": rs.ids_of(j), "K": rs.ids_of(k),
           "series": r.to_json()}
    if args.Q is not None:
        out["Q"] = rs.ids_of(rs.mask_of(_parse_ids(args.Q)))
    if args.expand is not None:
        out["expansion"] = expand(r, args.expand)
    if args.format == "json":
        _emit(out, "json")
    else:
        out["series"] = _fmt(r, args.format)
        _emit(out, args.format)
    return 0


def cmd_matrix(args):
    rs = rootsystem.build_label(args.type)
    pl = get_pipeline(rs)
    m = pl.matrix_M_affine()
    out = {"type": rs.label,
           "rows": [rs.ids_of(q) for q in m.rows],
           "cols": [rs.ids_of(j) for j in m.cols],
           "entries": [[_fmt(e, args.format) for e in row]
                       for row in m.entries]}
    _emit(out, args.format)
    return 0


def cmd_oracle(args):
    rs = rootsystem.build_label(args.type)
    aff = get_affine(rs)
    j = rs.mask_of(_parse_ids(args.J))
    k = rs.mask_of(_parse_ids(args.K))
    bins, total = aff.oracle_series(j, k, args.max_length)
    out = {"type": rs.label, "J": rs.ids_of(j), "K": rs.ids_of(k),
           "max_length": args.max_length,
           "bins": {_subset_key(rs, q): c for q, c in sorted(bins.items())},
           "total": total}
    _emit(out, args.format)
    return 0


def cmd_verify(args):
    rs = rootsystem.build_label(args.type)
    pl = get_pipeline(rs)
    report = pl.verify_against_oracle(args.max_length)
    failed = False
    for name, ok, detail in report:
        print(f"{'PASS' if ok else 'FAIL'} {name}"
              + (f": {detail}" if detail and not ok else ""))
        failed = failed or not ok
    return 1 if failed else 0


def cmd_check(args):
    rs = rootsystem.build_label(args.type)
    failed = False
    for name, ok, detail in identity_checks_finite(rs):
        print(f"{'PASS' if ok else 'FAIL'} finite {name}"
              + (f": {detail}" if detail and not ok else ""))
        failed = failed or not ok
    pl = get_pipeline(rs)
    for name, ok, detail in pl.affine_identity_checks(args.degree):
        print(f"{'PASS' if ok else 'FAIL'} affine {name}"
              + (f": {detail}" if detail and not ok else ""))
        failed = failed or not ok
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# fixture self-test


def _load_fixtures():
    base = resources.files("coxgrowth").joinpath("fixtures")
    out = {}
    for entry in sorted(base.iterdir()):
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = json.loads(entry.read_text())
    return out


def _mask_from_key(rs, key):
    return rs.mask_of([int(x) for x in key.split(",")] if key else [])


def check_fixture(name, fx):
    """Recompute everything a fixture pins down.  Returns a list of
    (item, ok) pairs."""
    rs = rootsystem.build_label(fx["label"])
    results = []

    if "cone_gens" in fx:
        want = [tuple(w) for w in fx["cone_gens"]]
        results.append(("cone-generators", list(rs.cone_gens) == want))
    if "weights" in fx:
        got = [rs.two_rho_weight(w) for w in rs.cone_gens]
        results.append(("generator-weights", got == fx["weights"]))
    for key, pts in fx.get("pi_points", {}).items():
        q = _mask_from_key(rs, key)
        got = cones.parallelepiped_points(rs, cones.indices_outside(rs, q))
        want = sorted(tuple(p) for p in pts)
        results.append((f"parallelepiped[{key or 'empty'}]", got == want))
    if fx.get("all_pi_trivial"):
        ok = cones.all_parallelepipeds_trivial(rs)
        results.append(("parallelepipeds-trivial", ok))
        ok = all(cones.f_q(rs, q) == cones.f_q_closed_form(rs, q)
                 for q in rs.subsets())
        results.append(("closed-form-f", ok))
    for key, val in fx.get("f", {}).items():
        q = _mask_from_key(rs, key)
        want = RatFun.from_json(val)
        results.append((f"f[{key or 'empty'}]",
                        cones.f_q(rs, q) == want))
    if "M_S" in fx:
        pl = get_pipeline(rs)
        subs = rs.subsets()
        ok = True
        for i, qk in enumerate(fx["M_S"]["rows"]):
            for jdx, jk in enumerate(fx["M_S"]["cols"]):
                want = RatFun.from_json(fx["M_S"]["entries"][i][jdx])
                got = pl.p_affine_S(_mask_from_key(rs, qk),
                                    _mask_from_key(rs, jk))
                if got != want:
                    ok = False
        assert [_mask_from_key(rs, k) for k in fx["M_S"]["rows"]] == subs
        results.append(("full-series-matrix", ok))
    for key, data in fx.get("M_K", {}).items():
        k = _mask_from_key(rs, key)
        table = get_table(rs)
        ok = True
        for i, qk in enumerate(data["rows"]):
            for jdx, jk in enumerate(data["cols"]):
                want = RatFun.from_json(data["entries"][i][jdx])
                got = RatFun(table.p_poly(_mask_from_key(rs, qk),
                                          _mask_from_key(rs, jk), k))
                if got != want:
                    ok = False
        results.append((f"coset-matrix[{key or 'empty'}]", ok))
    return results


def run_selftest(verbose=True):
    fixtures = _load_fixtures()
    all_ok = True
    for name, fx in fixtures.items():
        for item, ok in check_fixture(name, fx):
            all_ok = all_ok and ok
            if verbose:
                print(f"{'PASS' if ok else 'FAIL'} {name}:{item}")
    for label in ["A2", "C2", "G2"]:
        rs = rootsystem.build_label(label)
        for item, ok, _ in identity_checks_finite(rs):
            all_ok = all_ok and ok
            if verbose:
                print(f"{'PASS' if ok else 'FAIL'} {label}:finite-{item}")
    rs = rootsystem.build_label("A2")
    for item, ok, _ in get_pipeline(rs).affine_identity_checks(12):
        all_ok = all_ok and ok
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'} A2:affine-{item}")
    return all_ok


def cmd_selftest(args):
    return 0 if run_selftest() else 1


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="growth",
        description="Exact growth series of double-coset representatives "
                    "in finite and affine Weyl groups.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_fmt(sp):
        sp.add_argument("--format", choices=["text", "json", "latex"],
                        default="text")

    sp = sub.add_parser("cartan", help="root system data for a type label")
    sp.add_argument("label")
    add_fmt(sp)
    sp.set_defaults(func=cmd_cartan)

    sp = sub.add_parser("finite", help="finite Weyl group series")
    sp.add_argument("--type", required=True)
    sp.add_argument("--subset", help="generator ids of the parabolic")
    sp.add_argument("--what", default="poincare",
                    choices=["poincare", "pmatrix", "hmatrix", "check"])
    sp.add_argument("--K", help="generator ids for pmatrix rows")
    sp.add_argument("--J", help="generator ids for hmatrix rows")
    add_fmt(sp)
    sp.set_defaults(func=cmd_finite)

    sp = sub.add_parser("fq", help="dominant translation series f_Q")
    sp.add_argument("--type", required=True)
    sp.add_argument("--Q", help="generator ids (omit for all subsets)")
    add_fmt(sp)
    sp.set_defaults(func=cmd_fq)

    sp = sub.add_parser("series", help="affine double-coset series")
    sp.add_argument("--type", required=True)
    sp.add_argument("--J", required=True)
    sp.add_argument("--K", required=True)
    sp.add_argument("--Q")
    sp.add_argument("--expand", type=int)
    add_fmt(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("matrix", help="full matrix of affine series")
    sp.add_argument("--type", required=True)
    add_fmt(sp)
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("oracle", help="brute-force enumeration bins")
    sp.add_argument("--type", required=True)
    sp.add_argument("--J", required=True)
    sp.add_argument("--K", required=True)
    sp.add_argument("--max-length", type=int, required=True)
    add_fmt(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify",
                        help="compare assembled series with enumeration")
    sp.add_argument("--type", required=True)
    sp.add_argument("--max-length", type=int, required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check", help="run the identity suites")
    sp.add_argument("--type", required=True)
    sp.add_argument("--degree", type=int, default=20)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("selftest", help="recompute the bundled fixtures")
    sp.set_defaults(func=cmd_selftest)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (rootsystem.InvalidTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
