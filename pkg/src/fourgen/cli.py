"""Command line: fourgen <verb> ...

Exit status: 0 the property holds, 1 it fails (witnesses are printed), 2 usage or scope error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import aut as autmod
from . import bounds as bnd
from . import codes, constructions as C, curves, search
from .genset import NotFourGeneralError, verify_4general, verify_complete
from .pointfile import PointFileError, dumps, load_pointset

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required here")


CONSTRUCTIONS = {
    "frame": (("n", "q"), lambda a: C.frame(a.n, a.q)),
    "elliptic_quadric": (("q",), lambda a: C.elliptic_quadric(a.q)),
    "theta0": (("d", "q"), lambda a: C.cyclic_theta0(a.d, a.q)),
    "htw_y": (("d",), lambda a: C.htw_y(a.d)),
    "completed_y": (("d",), lambda a: search.completed_y(a.d)),
    "v_alpha": (("d",), lambda a: C.v_alpha(a.d, a.alpha if a.alpha is not None else 1)),
    "twisted_cubic": (("q",), lambda a: C.twisted_cubic(a.q, a.h if a.h is not None else 1)),
    "pg38_seven": ((), lambda a: C.pg38_seven_set()),
    "triple_cubic": (("q",), lambda a: C.triple_cubic(a.q).points),
    "pg55": ((), lambda a: C.pg55()),
    "pg516": ((), lambda a: C.pg516()),
    "pg62": ((), lambda a: C.pg62()),
    "set_o": (("q",), lambda a: C.set_o(a.q)),
    "abb_arc": (("q",), lambda a: C.abb_arc(a.q)),
    "golay23": ((), lambda a: C.golay_cap23()),
    "secant_shadow": (("d",), lambda a: C.frame_secant_shadow(a.d)),
}


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _pointset_payload(x, ident=None):
    return {"id": ident, "n": x.n, "q": x.q, "modulus": x.field.modulus, "size": len(x), "points": x.coords.tolist()}


def cmd_construct(args):
    if args.id not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.id!r}; choose from {', '.join(sorted(CONSTRUCTIONS))}")
    need, fn = CONSTRUCTIONS[args.id]
    _need(args, *need)
    x = fn(args)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(x, args.id))
    if args.json:
        print(json.dumps(_pointset_payload(x, args.id)))
    elif not args.output:
        sys.stdout.write(dumps(x, args.id))
    return OK


def cmd_verify(args):
    x = load_pointset(args.file)
    if args.complete:
        try:
            rep = verify_complete(x)
        except NotFourGeneralError as e:
            rep = e.report
        holds = rep.is_4general and bool(rep.is_complete)
    else:
        rep = verify_4general(x)
        holds = rep.is_4general
    lines = [f"size {rep.size}", f"spans {rep.spans_space}", f"cap {rep.is_cap}", f"4-general {rep.is_4general}"]
    if rep.is_complete is not None:
        lines.append(f"complete {rep.is_complete} (covered {rep.covered_count})")
    lines += [f"{k}: {' '.join(map(str, pts))}" for k, pts in rep.violations]
    _emit(args, rep.to_json(), "\n".join(lines))
    return OK if holds else FAIL


def cmd_complete(args):
    x = load_pointset(args.file)
    if args.order == "random" and args.seed is None:
        raise UsageError("--order random needs --seed")
    if not verify_4general(x).is_4general:
        _emit(args, {"error": "input is not 4-general"}, "input is not 4-general")
        return FAIL
    y = search.greedy_complete(x, order=args.order, seed=args.seed)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(y, "greedy completion"))
    payload = {"input_size": len(x), "size": len(y), "added": sorted(set(y.indices.tolist()) - set(x.indices.tolist())), "points": y.coords.tolist()}
    _emit(args, payload, dumps(y, "greedy completion").rstrip())
    return OK


def cmd_aut(args):
    x = load_pointset(args.file)
    try:
        order = autmod.aut_order(x, semilinear=args.semilinear)
    except autmod.AutNotComputable as e:
        _emit(args, {"error": str(e)}, f"not computable: {e}")
        return USAGE
    group = "PGammaL" if args.semilinear else "PGL"
    _emit(args, {"size": len(x), "group": group, "aut_order": order}, f"|Aut| in {group}: {order}")
    return OK


def cmd_code(args):
    x = load_pointset(args.file)
    try:
        cp = codes.code_params(x)
    except codes.NotComputable as e:
        _emit(args, {"error": str(e)}, f"not computable: {e}")
        return USAGE
    payload = cp.to_json()
    text = f"[{cp.length},{cp.dimension},{cp.min_distance}]_{cp.q} covering radius {cp.covering_radius}"
    if cp.exceptions:
        text += " (" + ", ".join(cp.exceptions) + ")"
    _emit(args, payload, text)
    return OK


def cmd_bounds(args):
    rep = bnd.bounds_report(args.n, args.q)
    text = "\n".join(
        [f"M3({args.n},{args.q}) <= {rep['m3_upper']}", f"T3({args.n},{args.q}) >= {rep['t3_lower']} (plane covering count alone: {rep['t3_counting']})", f"AG bound {rep['ag_upper']}"]
        + [f"{r['quantity']} {r['relation']} {r['value']}" + (f"  [{r['source']}]" if "source" in r else "") for r in rep["reference"]]
    )
    _emit(args, rep, text)
    return OK


def cmd_curves(args):
    if args.kind == "cubic1":
        _need(args, "q")
        r = curves.cubic1_count(args.q)
        holds = r == args.q - 3
        _emit(args, {"kind": "cubic1", "q": args.q, "count": r, "holds": holds}, f"{r} affine points (q-3 = {args.q - 3})")
    elif args.kind == "cubic2":
        _need(args, "q", "gamma")
        r = curves.cubic2_count(args.q, args.gamma)
        holds = curves.in_hasse_window(args.q, r)
        _emit(args, {"kind": "cubic2", "q": args.q, "gamma": args.gamma, "count": r, "holds": holds}, f"{r} affine points, in window {holds}")
    else:
        _need(args, "q", "seed")
        rep = curves.hermitian_net_probe(args.q, args.trials, args.seed)
        holds = rep.empty_base_loci == 0 and rep.pencil_sizes_ok and not rep.exhausted
        payload = dict(rep.to_json(), kind="net", holds=holds)
        _emit(args, payload, json.dumps(rep.to_json(), indent=1))
    return OK if holds else FAIL


def cmd_search(args):
    if args.mode == "classify":
        _need(args, "n", "q")
        try:
            res = search.classify_complete(args.n, args.q, allow_optional=args.optional)
        except search.OutOfScope as e:
            _emit(args, {"error": str(e)}, str(e))
            return USAGE
        text = "\n".join(f"size {c.size}  aut {c.aut_order}  labeled {c.labeled_count}" for c in res.classes)
        _emit(args, res.to_json(), text + f"\nconsistent {res.consistent}")
        return OK if res.consistent else FAIL
    if args.mode == "max":
        _need(args, "n", "q")
        res = search.max_size(args.n, args.q, budget=args.budget_sec)
        _emit(args, res.to_json(), f"max size {res.size}" + ("" if res.exhaustive else " (incomplete: budget exhausted)"))
        return OK if res.exhaustive else FAIL
    if args.file is None:
        raise UsageError("search complete needs a point-set file")
    return cmd_complete(args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fourgen", description="Complete 4-general sets in finite projective spaces")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("construct", help="emit a construction as a point-set file")
    sp.add_argument("id")
    for name in ("n", "q", "d", "alpha", "h"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check 4-generality (and completeness)")
    sp.add_argument("file")
    sp.add_argument("--complete", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    def complete_opts(sp):
        sp.add_argument("--order", choices=["lex", "random"], default="lex")
        sp.add_argument("--seed", type=int)
        sp.add_argument("-o", "--output")

    sp = sub.add_parser("complete", help="greedy completion")
    sp.add_argument("file")
    complete_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_complete)

    sp = sub.add_parser("aut", help="order of the projective stabilizer")
    sp.add_argument("file")
    sp.add_argument("--semilinear", action="store_true", help="use PGammaL instead of PGL")
    common(sp)
    sp.set_defaults(func=cmd_aut)

    sp = sub.add_parser("code", help="parameters of the associated code")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("bounds", help="counting bounds")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("curves", help="cubic counts and Hermitian net probe")
    sp.add_argument("kind", choices=["cubic1", "cubic2", "net"])
    sp.add_argument("--q", type=int)
    sp.add_argument("--gamma", type=int)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int)
    common(sp)
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("search", help="classification, maximum size, completion")
    sp.add_argument("mode", choices=["classify", "max", "complete"])
    sp.add_argument("file", nargs="?")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--optional", action="store_true", help="allow the optional-long parameter sets")
    sp.add_argument("--budget-sec", type=float, default=60.0)
    complete_opts(sp)
    common(sp)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE
    except PointFileError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
