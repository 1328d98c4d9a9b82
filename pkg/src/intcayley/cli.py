"""
Command-line front end.

    intcayley orbits 4
    intcayley is-integral 5 --set 1,4
    intcayley spectrum 2,2 --set 1:0,0:1
    intcayley export 4 --set 1,3 --format dot

Elements are written with coordinates joined by ':' and separated by ','.
Exit codes: 0 success, 2 usage or parse error, 3 resource limit, 4 internal
consistency failure.
"""
import argparse
import json
import sys

from .errors import IntCayleyError, ResourceLimitError
from .export import adjacency_csv, adjacency_dot
from .family import DEFAULT_LIMIT, EXHAUSTIVE_LIMIT, enumerate_integral, exactness_check
from .group import format_element, parse_elements, parse_group
from .oracle import DEFAULT_TOL
from .orbits import count_orbits_formula, orbit_partition
from .spectra import is_integral, make_connection_set, spectrum

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_INTERNAL = 0, 2, 3, 4
FORMATS = ("json", "csv", "dot", "text")

_SUPPORTED = {
    "orbits": ("json", "text"),
    "is-integral": ("json", "text"),
    "spectrum": ("json", "text"),
    "enumerate": ("json", "csv", "text"),
    "count": ("json", "text"),
    "exactness-check": ("json", "text"),
    "export": ("csv", "dot"),
    "selftest": ("json", "text"),
}
_DEFAULT_FORMAT = {"export": "csv", "enumerate": "json"}
_HARD_DEFAULTS = {"tol": DEFAULT_TOL, "limit": None, "format": None, "output": None}


class UsageError(IntCayleyError):
    pass


class InternalCheckError(IntCayleyError):
    pass


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    common.add_argument("--tol", type=_positive_float, default=None)
    common.add_argument("--limit", type=int, default=None)
    common.add_argument("--config", default=None, help="JSON file whose keys mirror the flags")

    parser = argparse.ArgumentParser(prog="intcayley",
                                     description="Integral Cayley graphs on finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("orbits", "count", "enumerate", "exactness-check"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("group", help="comma-separated moduli, e.g. 4,6")
    for name in ("is-integral", "spectrum", "export"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("group")
        p.add_argument("--set", dest="set", default=None, help="elements such as 1:0,0:1")
    sub.add_parser("selftest", parents=[common])
    return parser


def _apply_config(args):
    config = {}
    if args.config:
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    for key, default in _HARD_DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, config.get(key, default))
    if getattr(args, "set", "") is None:
        args.set = config.get("set")
    fmt = args.format or _DEFAULT_FORMAT.get(args.command, "text")
    if fmt not in _SUPPORTED[args.command]:
        raise UsageError(f"format {fmt!r} is not available for {args.command}")
    args.format = fmt
    if not float(args.tol) > 0:
        raise UsageError("tolerance must be positive")


def _set_arg(G, args):
    if args.set is None:
        raise UsageError("--set is required")
    return make_connection_set(G, parse_elements(G, args.set))


def _dump(obj):
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_orbits(args):
    part = orbit_partition(parse_group(args.group))
    return _dump(part.as_dict()) if args.format == "json" else part.to_text()


def cmd_is_integral(args):
    G = parse_group(args.group)
    S = _set_arg(G, args)
    part = orbit_partition(G)
    v = is_integral(G, S, part)
    if args.format == "json":
        return _dump({"group": str(G), "S": [list(x) for x in S], "integral": v.is_integral,
                      "covered_orbit_ids": list(v.covered_orbit_ids),
                      "residue": [list(x) for x in v.residue]})
    lines = [f"group {G}", "integral" if v.is_integral else "not integral",
             "covered orbits: " + " ".join(str(i) for i in v.covered_orbit_ids)]
    if v.residue:
        lines.append("residue: " + " ".join(format_element(x) for x in v.residue))
    return "\n".join(lines) + "\n"


def cmd_spectrum(args):
    G = parse_group(args.group)
    rep = spectrum(G, _set_arg(G, args))
    if args.format == "json":
        d = rep.as_dict()
        if rep.mode != "exact-integer":
            d["eigenvalues"] = [float(f"{v:.12g}") + 0.0 for v in rep.eigenvalues]
        return _dump(d)
    return rep.to_text()


def _two_route_r(G):
    direct = orbit_partition(G).r
    formula = count_orbits_formula(G)
    if direct != formula:
        raise InternalCheckError(f"r(G) mismatch: partition {direct}, formula {formula}")
    return direct


def cmd_count(args):
    G = parse_group(args.group)
    r = _two_route_r(G)
    if args.format == "json":
        return _dump({"group": str(G), "r_partition": r, "r_formula": r,
                      "equal": True, "bound": 2**r})
    return f"group {G}\nr (partition) = {r}\nr (formula) = {r}\n2^r = {2**r}\n"


def cmd_enumerate(args):
    G = parse_group(args.group)
    rep = enumerate_integral(G, limit=args.limit or DEFAULT_LIMIT)
    if args.format == "json":
        return rep.to_jsonl()
    return rep.to_csv() if args.format == "csv" else rep.to_text()


def cmd_exactness_check(args):
    G = parse_group(args.group)
    res = exactness_check(G, tol=args.tol, limit=args.limit or EXHAUSTIVE_LIMIT)
    if args.format == "json":
        return _dump({"group": str(G), **res.as_dict()})
    return (f"group {G}\nbound = {res.bound}\nachieved = {res.achieved}\n"
            f"equal = {str(res.equal).lower()}\n")


def cmd_export(args):
    G = parse_group(args.group)
    S = _set_arg(G, args)
    return adjacency_dot(G, S) if args.format == "dot" else adjacency_csv(G, S)


SELFTEST_GROUPS = ([2], [3], [4], [5], [6], [7], [8], [2, 2], [2, 4], [3, 3], [2, 2, 2], [2, 3])


def cmd_selftest(args):
    from .selftest import run_selftest

    results = run_selftest(SELFTEST_GROUPS, tol=args.tol)
    if args.format == "json":
        out = _dump({"cases": results})
    else:
        out = "".join(f"{'PASS' if c['ok'] else 'FAIL'} {c['case']} "
                      f"max_dev={c['max_deviation']:.3g}\n" for c in results)
    if not all(c["ok"] for c in results):
        sys.stdout.write(out)
        raise InternalCheckError("selftest failed")
    return out


COMMANDS = {
    "orbits": cmd_orbits, "is-integral": cmd_is_integral, "spectrum": cmd_spectrum,
    "count": cmd_count, "enumerate": cmd_enumerate, "exactness-check": cmd_exactness_check,
    "export": cmd_export, "selftest": cmd_selftest,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        out = COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (IntCayleyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
