"""Command-line interface.

Symbolic commands read and write exact rationals as strings; only the ODE
report uses floats.

Exit codes:
    0  success (for decide: the composition condition holds)
    1  input or usage error
    2  internal inconsistency
    3  decide: fails (tan field)
    4  decide: not periodic
    5  verify-ode --assert-center: a displacement exceeded the tolerance
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import InputError, InternalInconsistency
from .field import DEFAULT_MAX_DEGREE, Fails, Holds, NotPeriodic, decide_cc, decide_cc_abel
from .instances import random_instance
from .ode import DEFAULT_BOUND, DEFAULT_R0S, DEFAULT_STEPS, AbelInstance, poincare_report
from .scalar import format_gauss
from .trig import TrigPoly, phi, psi

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_FAILS = 3
EXIT_NOT_PERIODIC = 4
EXIT_CENTER = 5

DEFAULT_TOL = 1e-7


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_json(args):
    try:
        if args.input is None or args.input == "-":
            text = sys.stdin.read()
        else:
            text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def _pair(obj, first: str, second: str) -> tuple[TrigPoly, TrigPoly]:
    if isinstance(obj, list) and len(obj) == 2:
        return TrigPoly.from_json(obj[0]), TrigPoly.from_json(obj[1])
    if isinstance(obj, dict) and first in obj and second in obj:
        return TrigPoly.from_json(obj[first]), TrigPoly.from_json(obj[second])
    raise InputError(f'expected an object with "{first}" and "{second}" or a two-element list')


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _verdict_exit(verdict) -> int:
    if isinstance(verdict, Holds):
        return EXIT_OK
    if isinstance(verdict, Fails):
        return EXIT_FAILS
    if isinstance(verdict, NotPeriodic):
        return EXIT_NOT_PERIODIC
    raise InternalInconsistency(f"unknown verdict {verdict!r}")


def cmd_phi(args) -> int:
    L = phi(TrigPoly.from_json(_read_json(args)))
    _emit({"lo": L.lo, "coeffs": [format_gauss(c) for c in L.coeffs]})
    return EXIT_OK


def cmd_psi(args) -> int:
    R = psi(TrigPoly.from_json(_read_json(args)))
    _emit({"num": [format_gauss(c) for c in R.num.coeffs],
           "den": [format_gauss(c) for c in R.den.coeffs]})
    return EXIT_OK


def cmd_decide(args) -> int:
    l, m = _pair(_read_json(args), "l", "m")
    verdict = decide_cc(l, m, args.max_degree)
    _emit(verdict.to_json())
    return _verdict_exit(verdict)


def cmd_decide_abel(args) -> int:
    l_hat, m_hat = _pair(_read_json(args), "l_hat", "m_hat")
    verdict = decide_cc_abel(l_hat, m_hat, args.max_degree)
    _emit(verdict.to_json())
    return _verdict_exit(verdict)


def cmd_verify_ode(args) -> int:
    inst = AbelInstance.from_json(_read_json(args))
    r0s = args.r0 if args.r0 else list(DEFAULT_R0S)
    report = poincare_report(inst, r0s, args.steps, args.bound)
    _emit(report.to_json())
    if args.assert_center and report.max_displacement() > args.tol:
        print(f"center check failed: max displacement {report.max_displacement():.3e}"
              f" > {args.tol:.1e}", file=sys.stderr)
        return EXIT_CENTER
    return EXIT_OK


def cmd_random_instance(args) -> int:
    try:
        l, m = random_instance(args.seed, args.degw, args.degl, args.degm, args.kind)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit({"l": l.to_json(), "m": m.to_json()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abelcc", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("--input", help="JSON input file (default: stdin)")
        return p

    with_input(sub.add_parser("phi", help="trig polynomial -> Laurent polynomial")).set_defaults(
        func=cmd_phi)
    with_input(sub.add_parser("psi", help="trig polynomial -> rational function of tan(t/2)")
               ).set_defaults(func=cmd_psi)
    for name, func, help_ in (
        ("decide", cmd_decide, "decide the composition condition for (l, m)"),
        ("decide-abel", cmd_decide_abel, "decide it for Abel coefficients (l_hat, m_hat)"),
    ):
        p = with_input(sub.add_parser(name, help=help_))
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        p.set_defaults(func=func)

    p = with_input(sub.add_parser("verify-ode", help="integrate the Abel equation over one period"))
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--r0", type=float, action="append", help="initial value (repeatable)")
    p.add_argument("--bound", type=float, default=DEFAULT_BOUND)
    p.add_argument("--assert-center", action="store_true")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_verify_ode)

    p = sub.add_parser("random-instance", help="emit a seeded random (l, m) pair")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degw", type=int, default=2)
    p.add_argument("--degl", type=int, default=2)
    p.add_argument("--degm", type=int, default=3)
    p.add_argument("--kind", choices=("holds", "generic"), default="holds")
    p.set_defaults(func=cmd_random_instance)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(json.dumps({"error": "internal_inconsistency", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError) as exc:
        print(json.dumps({"error": "input", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
