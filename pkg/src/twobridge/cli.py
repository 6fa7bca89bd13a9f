"""Command-line front end: ``twobridge <command> [args] [--json]``.

Exit codes: 0 success, 1 usage error, 2 domain error (for example a
non-hyperbolic slope passed to ``classify``).
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys

from . import __version__
from .contfrac import cf_even, cf_positive, even_symmetry_class, pos_symmetry_class
from .epi import epi_exists
from .errors import TwoBridgeError
from .farey import orbit_bfs
from .heckoid import heckoid_classification, parse_index
from .pairs import classify
from .rational_core import Slope, parse_slope
from .sweeps import run_all


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-2/5" through as a positional slope
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(defaults: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    # subcommand copies use SUPPRESS so they never clobber a flag given before the subcommand
    json_default = False if defaults else argparse.SUPPRESS
    seed_default = 0 if defaults else argparse.SUPPRESS
    parent.add_argument("--json", action="store_true", default=json_default, help="emit JSON")
    parent.add_argument("--seed", type=int, default=seed_default, help="seed for randomized checks")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twobridge", parents=[_common(True)], description="Arithmetic invariants of 2-bridge links.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_common(False)]

    p = sub.add_parser("classify", parents=common, help="parabolic generating pairs of K(r)")
    p.add_argument("r")

    p = sub.add_parser("cf", parents=common, help="continued fraction expansion")
    p.add_argument("r")
    form = p.add_mutually_exclusive_group()
    form.add_argument("--positive", dest="form", action="store_const", const="positive")
    form.add_argument("--even", dest="form", action="store_const", const="even")
    p.set_defaults(form="positive")

    p = sub.add_parser("symmetry", parents=common, help="symmetry classes of both expansions")
    p.add_argument("r")

    p = sub.add_parser("epi", parents=common, help="is there an epimorphism G(r_tilde) -> G(r)?")
    p.add_argument("r_tilde")
    p.add_argument("r")

    p = sub.add_parser("orbit", parents=common, help="orbit of {r, inf} under the reflection group")
    p.add_argument("r")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-den", type=int, default=200)

    p = sub.add_parser("heckoid", parents=common, help="orbifold descriptor of the Heckoid group G(r; n)")
    p.add_argument("r")
    p.add_argument("n", help='index, an integer or half-integer such as "5/2"')

    p = sub.add_parser("selfcheck", parents=common, help="run the exhaustive property sweeps")
    p.add_argument("max_p", type=int)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _cmd_classify(args):
    rep = classify(parse_slope(args.r))
    data = rep.to_dict()
    lines = [
        f"K({data['slope']}): {data['kind']}, isometry group {data['isometry_group']}",
        "candidates:",
    ]
    for c in rep.candidates:
        mark = "generates" if c.generates else "excluded"
        lines.append(f"  {c.label:<24} omega = {c.omega}  [{mark}]")
    if rep.extra is not None:
        lines.append(f"extra split: {rep.extra.s1}, {rep.extra.s2} ({rep.extra.case.value} case)")
    lines.append("parabolic generating pairs: " + ", ".join(data["verdict"]))
    return data, "\n".join(lines)


def _cmd_cf(args):
    r = parse_slope(args.r)
    cf = cf_positive(r) if args.form == "positive" else cf_even(r)
    data = {"slope": str(r), "form": args.form, "entries": list(cf.entries)}
    return data, str(cf)


def _cmd_symmetry(args):
    r = parse_slope(args.r)
    data = {"slope": str(r)}
    lines = []
    if r.num % 2 == 0 or r.den % 2 == 0:
        cls = even_symmetry_class(r)
        data["even"] = {"entries": list(cf_even(r).entries), "class": cls.value}
        lines.append(f"even {cf_even(r)}: {cls.value}")
    pcls = pos_symmetry_class(r)
    data["positive"] = {"entries": list(cf_positive(r).entries), "class": pcls.value}
    lines.append(f"positive {cf_positive(r)}: {pcls.value}")
    return data, "\n".join(lines)


def _cmd_epi(args):
    verdict = epi_exists(parse_slope(args.r_tilde), parse_slope(args.r))
    data = {"r_tilde": args.r_tilde, "r": args.r, **verdict.to_dict()}
    return data, verdict.summary()


def _orbit_key(s: Slope):
    return (s.is_infinity, s.as_fraction() if not s.is_infinity else 0)


def _cmd_orbit(args):
    r = parse_slope(args.r)
    if args.depth < 0 or args.max_den < 1:
        raise UsageError("--depth must be >= 0 and --max-den >= 1")
    orbit = sorted(orbit_bfs(r, args.depth, args.max_den), key=_orbit_key)
    data = {"slope": str(r), "depth": args.depth, "max_den": args.max_den, "orbit": [str(s) for s in orbit]}
    return data, " ".join(data["orbit"])


def _cmd_heckoid(args):
    rep = heckoid_classification(parse_slope(args.r), parse_index(args.n))
    lines = [f"{rep['group']}: {rep['orbifold']}", rep["statement"]]
    if "fuchsian" in rep:
        lines.append(f"Fuchsian: {rep['fuchsian']['orbifold']}, {rep['fuchsian']['hecke']}")
    return rep, "\n".join(lines)


def _cmd_selfcheck(args):
    if args.max_p < 3:
        raise UsageError("max_p must be at least 3")
    results = run_all(args.max_p, args.seed)
    data = {
        "max_p": args.max_p,
        "seed": args.seed,
        "ok": all(r.ok for r in results),
        "sweeps": [{"name": r.name, "cases": r.cases, "violations": r.violations} for r in results],
    }
    lines = [r.line() for r in results]
    for r in results:
        lines.extend(f"  {v}" for v in r.violations[:10])
    return data, "\n".join(lines)


_COMMANDS = {
    "classify": _cmd_classify,
    "cf": _cmd_cf,
    "symmetry": _cmd_symmetry,
    "epi": _cmd_epi,
    "orbit": _cmd_orbit,
    "heckoid": _cmd_heckoid,
    "selfcheck": _cmd_selfcheck,
}


def run(argv: list[str]) -> tuple[int, str]:
    parser = build_parser()
    out = io.StringIO()
    try:
        with contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except UsageError as exc:
        return 1, str(exc)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), out.getvalue().rstrip("\n")
    try:
        data, text = _COMMANDS[args.command](args)
    except UsageError as exc:
        return 1, f"twobridge {args.command}: {exc}"
    except TwoBridgeError as exc:
        if args.json:
            return 2, _dump(exc.to_dict())
        return 2, f"error: {exc.code}: {exc}"
    code = 0
    if args.command == "selfcheck" and not data["ok"]:
        code = 3
    return code, _dump(data) if args.json else text


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code in (0, 3) else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
