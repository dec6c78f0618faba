"""Command-line front end.  Every command prints one JSON document on stdout.

Exit codes: 0 when the command succeeded (and any checked property holds),
1 when a checked property fails (the JSON carries the counterexample),
2 on malformed input or a precondition that does not hold.
"""

import argparse
import json
import sys

from semiinf import affine_weyl as aw
from semiinf import orders, plot, rees, verify
from semiinf import schubert as sb
from semiinf import tuples as tp
from semiinf.rootsystem import SUPPORTED_TYPES, DomainError, UsageError, build_root_system

SCHEMA_VERSION = verify.SCHEMA_VERSION


class Failed(Exception):
    """Carries a JSON payload for exit code 1."""

    def __init__(self, payload):
        super().__init__("property violated")
        self.payload = payload


def _load(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{what} is not valid JSON: {e.msg}") from None


def _element(rs, text):
    return aw.from_json(rs, _load(text, "element"))


def _weyl_tuple(rs, text):
    kind, t = tp.tuple_from_json(rs, _load(text, "tuple"))
    return tp.weyl_tuple(rs, t, (0,) * len(rs.chambers)) if kind == "coords" else t


def _affine_root_json(rs, a):
    return {"root": list(rs.roots[a.root]), "level": a.level}


def _root_index(rs, text):
    try:
        coeffs = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"root must be comma-separated integers, got {text!r}") from None
    return rs.root_from_coeffs(coeffs)


def _psi(rs, text):
    try:
        pid = int(text)
    except ValueError:
        raise UsageError(f"psi must be an integer id, got {text!r}") from None
    if not 0 <= pid < len(rs.psis):
        raise UsageError(f"psi id must be in 0..{len(rs.psis) - 1}")
    return rs.psis[pid]


def _relation(rs, text):
    """Parse --rel into (kind, data)."""
    if text == "bruhat":
        return "bruhat", None
    kind, _, arg = text.partition(":")
    if kind == "chamber":
        return "chamber", rs.chamber_by_word(arg)
    if kind == "psi":
        return "psi", _psi(rs, arg)
    if kind == "alpha":
        return "alpha", _root_index(rs, arg)
    raise UsageError(f"unknown relation {text!r}; use bruhat, chamber:<word>, psi:<id> or alpha:<root>")


# -- commands ---------------------------------------------------------------------

def cmd_root_describe(args):
    return build_root_system(args.type).describe()


def cmd_element(args):
    rs = build_root_system(args.type)
    w = _element(rs, args.element)
    return {
        "element": aw.to_json(rs, w),
        "length": aw.length(rs, w),
        "reduced_word": list(aw.reduced_word(rs, w)),
        "chamber": rs.chamber_label(aw.chamber_of(rs, w).index),
    }


def cmd_order_cmp(args):
    rs = build_root_system(args.type)
    w1, w2 = _element(rs, args.w1), _element(rs, args.w2)
    kind, data = _relation(rs, args.rel)
    if kind == "bruhat":
        return {"leq": aw.bruhat_leq(rs, w1, w2), "witness_chain": []}
    if kind == "chamber":
        res = orders.leq_chamber_bfs(rs, w1, w2, data, witness=True)
        if res.leq != orders.leq_chamber(rs, w1, w2, data):
            raise AssertionError("order engines disagree")
    elif kind == "psi":
        res = orders.leq_psi(rs, w1, w2, data, witness=True)
    else:
        res = orders.leq_subset(rs, w1, w2, {data}, witness=True)
    return {"leq": res.leq, "witness_chain": [_affine_root_json(rs, a) for a in res.chain]}


def cmd_tuple_check(args):
    rs = build_root_system(args.type)
    t = _weyl_tuple(rs, args.tuple)
    if args.quasi:
        ok = tp.is_quasi_admissible(rs, t)
        out = {"quasi_admissible": ok}
    else:
        ok = tp.is_admissible(rs, t)
        out = {"admissible": ok}
        if not ok:
            out["violations"] = [
                {"chamber": rs.chamber_label(c), "root": list(rs.roots[a]),
                 "neighbor": rs.chamber_label(c2)}
                for c, a, c2 in tp.walls(rs) if not orders.leq_alpha(rs, t[c2], t[c], a)]
    out["regularity"] = tp.regularity(rs, t)
    if not ok:
        raise Failed(out)
    return out


def cmd_tuple_meet(args):
    rs = build_root_system(args.type)
    a, b = (tp.to_coords(rs, tp.projection(_weyl_tuple(rs, x))) for x in (args.a, args.b))
    m = tuple(min(x, y) for x, y in zip(a, b))
    return {**tp.coords_to_json(rs, m), "regularity": tp.coords_regularity(rs, m)}


def cmd_tuple_coords(args):
    rs = build_root_system(args.type)
    t = _weyl_tuple(rs, args.tuple)
    if not tp.is_quasi_admissible(rs, t):
        raise DomainError("coordinates exist only for quasi-admissible tuples")
    coords = tp.to_coords(rs, tp.projection(t))
    return {**tp.coords_to_json(rs, coords),
            "lattice": {rs.chamber_label(c): list(mu) for c, mu in enumerate(tp.from_coords(rs, coords))}}


def cmd_schubert_tuple(args):
    rs = build_root_system(args.type)
    w = _element(rs, args.element)
    t = sb.schubert_tuple(rs, w)
    return {**tp.weyl_tuple_to_json(rs, t),
            "coords": tp.coords_to_json(rs, tp.to_coords(rs, tp.projection(t)))["coords"],
            "admissible": tp.is_admissible(rs, t),
            "regularity": tp.regularity(rs, t)}


def _window(args):
    win = {}
    for item in args.window or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--window expects key=value, got {item!r}")
        try:
            win[key.replace("-", "_")] = int(val)
        except ValueError:
            raise UsageError(f"window value for {key} must be an integer") from None
    if getattr(args, "max_length", None) is not None:
        win["max_length"] = args.max_length
    return win


def _verify_report(args, name):
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = verify.run(args.type, name, _window(args), seed=args.seed, jobs=args.jobs)
    if report["failures"]:
        raise Failed(report)
    return report


def cmd_verify_thm_sch(args):
    return _verify_report(args, "thm-sch")


def cmd_verify_lemma(args):
    return _verify_report(args, args.name)


def cmd_verify_list(args):
    return {"lemmas": [{"name": k, "window": v["defaults"], "summary": v["summary"]}
                       for k, v in sorted(verify.REGISTRY.items())]}


def _sublattice(rs, text):
    basis = _load(text, "sublattice")
    if not isinstance(basis, list) or not all(isinstance(v, list) for v in basis):
        raise UsageError("sublattice must be a JSON list of integer vectors")
    return rees.Sublattice(rs, tuple(tuple(v) for v in basis))


def cmd_monoid_hilbert(args):
    rs = build_root_system(args.type)
    sub = _sublattice(rs, args.sublattice)
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    rep = rees.hilbert_report(sub, args.bound)
    out = {"sublattice": sub.to_json(), "bound": rep["bound"],
           "basis": [{"mu": list(mu), "x": list(x)} for mu, x in rep["basis"]],
           "generates": rep["generates"], "minimal": rep["minimal"], "stable": rep["stable"],
           "members_checked": rep["members_checked"]}
    if not (rep["generates"] and rep["minimal"]):
        raise Failed(out)
    return out


def cmd_monoid_trunc_check(args):
    rs = build_root_system(args.type)
    sub = _sublattice(rs, args.sublattice)
    rep = rees.trunc_sweep(sub, args.max_coord, args.min_coord, args.ignore_hypothesis)
    out = {"sublattice": sub.to_json(), "max_coord": args.max_coord, "min_coord": args.min_coord,
           "ignore_hypothesis": args.ignore_hypothesis, **rep}
    if not rep["usable_psis"]:
        raise DomainError(json.dumps(out, sort_keys=True))
    if rep["failures"] or rep["nonregular_difference"] is None:
        raise Failed(out)
    return out


def _lower_set(rs, args):
    if args.element is None and args.tuple is None:
        return [], None
    if args.tuple is not None:
        if args.order != "bruhat":
            raise UsageError("--tuple draws the tuple's lower set; leave --order at bruhat")
        t = _weyl_tuple(rs, args.tuple)
        return sorted(sb.tuple_fixed_points(rs, t), key=lambda v: aw.sort_key(rs, v)), None
    w = _element(rs, args.element)
    kind, data = _relation(rs, args.order)
    if kind == "bruhat":
        return sorted(aw.lower_interval(rs, w), key=lambda v: aw.sort_key(rs, v)), None
    radius = args.radius if args.radius is not None else plot.radius_for([w], 2)
    members = []
    for y in plot.window_elements(rs, radius):
        if kind == "chamber":
            ok = orders.leq_chamber(rs, y, w, data)
        elif kind == "psi":
            ok = orders.leq_psi(rs, y, w, data)
        else:
            ok = orders.leq_alpha(rs, y, w, data)
        if ok:
            members.append(y)
    return members, radius


def cmd_plot_lower_set(args):
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    rs = build_root_system(args.type)
    if rs.rank != 2:
        raise DomainError(f"alcove pictures need rank 2; {args.type} has rank {rs.rank}")
    members, radius = _lower_set(rs, args)
    if radius is None:
        radius = args.radius if args.radius is not None else plot.radius_for(members, 1)
    svg, shaded, outside = plot.render(rs, members, radius, title=f"{args.type} {args.order}")
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return {"output": args.output, "radius": radius, "members": len(members), "shaded": shaded,
            "outside_window": outside}


# -- parser ---------------------------------------------------------------------------

def _type_arg(p):
    p.add_argument("--type", required=True, choices=SUPPORTED_TYPES, help="Cartan type label")


def build_parser():
    parser = argparse.ArgumentParser(prog="semiinf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    root = sub.add_parser("root", help="root system data").add_subparsers(dest="action", required=True)
    p = root.add_parser("describe")
    _type_arg(p)
    p.set_defaults(func=cmd_root_describe)

    p = sub.add_parser("element", help="canonical form, length and reduced word of an element")
    _type_arg(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_element)

    order = sub.add_parser("order", help="order queries").add_subparsers(dest="action", required=True)
    p = order.add_parser("cmp", help="is w1 <= w2 in the given relation?")
    _type_arg(p)
    p.add_argument("--rel", required=True, help="bruhat | chamber:<word> | psi:<id> | alpha:<c1,...,cr>")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_order_cmp)

    tup = sub.add_parser("tuple", help="chamber tuples").add_subparsers(dest="action", required=True)
    p = tup.add_parser("check")
    _type_arg(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--admissible", action="store_true", help="check admissibility (default)")
    g.add_argument("--quasi", action="store_true", help="check quasi-admissibility")
    p.add_argument("tuple")
    p.set_defaults(func=cmd_tuple_check)
    p = tup.add_parser("meet")
    _type_arg(p)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_tuple_meet)
    p = tup.add_parser("coords")
    _type_arg(p)
    p.add_argument("tuple")
    p.set_defaults(func=cmd_tuple_coords)

    sch = sub.add_parser("schubert", help="Schubert tuples").add_subparsers(dest="action", required=True)
    p = sch.add_parser("tuple")
    _type_arg(p)
    p.add_argument("element")
    p.set_defaults(func=cmd_schubert_tuple)

    ver = sub.add_parser("verify", help="verification sweeps").add_subparsers(dest="action", required=True)
    for name, func in (("thm-sch", cmd_verify_thm_sch), ("lemma", cmd_verify_lemma)):
        p = ver.add_parser(name)
        _type_arg(p)
        if name == "lemma":
            p.add_argument("--name", required=True, choices=sorted(verify.REGISTRY))
        p.add_argument("--max-length", type=int, default=None)
        p.add_argument("--window", action="append", metavar="KEY=VALUE",
                       help="override a window parameter (repeatable)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=func)
    p = ver.add_parser("list")
    p.set_defaults(func=cmd_verify_list)

    mon = sub.add_parser("monoid", help="Rees monoids of sublattices").add_subparsers(dest="action", required=True)
    p = mon.add_parser("hilbert")
    _type_arg(p)
    p.add_argument("--sublattice", required=True, help="JSON list of basis vectors, e.g. '[[1]]'")
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(func=cmd_monoid_hilbert)
    p = mon.add_parser("trunc-check")
    _type_arg(p)
    p.add_argument("--sublattice", required=True)
    p.add_argument("--max-coord", type=int, default=5)
    p.add_argument("--min-coord", type=int, default=0)
    p.add_argument("--ignore-hypothesis", action="store_true")
    p.set_defaults(func=cmd_monoid_trunc_check)

    pl = sub.add_parser("plot", help="rank-2 SVG pictures").add_subparsers(dest="action", required=True)
    p = pl.add_parser("lower-set")
    _type_arg(p)
    p.add_argument("--order", default="bruhat", help="bruhat | chamber:<word> | psi:<id> | alpha:<root>")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--element", help="top element (omit both for an empty picture)")
    g.add_argument("--tuple", help="draw the lower set of a tuple")
    p.add_argument("--radius", type=int, default=None, help="window half-width in lattice steps")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--jobs", type=int, default=1, help="accepted like verify's; drawing is sequential")
    p.set_defaults(func=cmd_plot_lower_set)
    return parser


def _emit(obj):
    sys.stdout.write(json.dumps({"schema": SCHEMA_VERSION, **obj}, sort_keys=True, indent=2) + "\n")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        out = args.func(args)
    except Failed as f:
        _emit(f.payload)
        return 1
    except (UsageError, DomainError) as e:
        msg = str(e)
        try:
            detail = json.loads(msg)
            _emit({"error": "precondition not met", "detail": detail})
        except ValueError:
            _emit({"error": msg})
        print(f"semiinf: {msg}", file=sys.stderr)
        return 2
    _emit(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
