"""Command-line front end: ``wedge {mn,act,maya,cocycle,verify}``.

Results go to stdout as compact canonical JSON.  Exit codes:

* 0 on success;
* 1 on domain or input errors, with ``{"error", "message", "position"}`` on stderr;
* 1 from ``verify`` when a sweep reports failures;
* 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from . import boson, fermion, jsonio
from .boson import BosonState
from .errors import ParseError, WedgeError
from .gl_infinity import cocycle, cocycle_closed_form
from .maya import SemiInfiniteMonomial, code, from_charge_partition, frobenius
from .partitions import Partition
from .verify import SUITES


def _payload(value: str) -> str:
    """Inline JSON, or the contents of the named file."""
    text = value.strip()
    if text.startswith(("{", "[")):
        return value
    try:
        return Path(value).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {value!r}: {exc.strerror}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None


def _int_list(text: str, what: str) -> list[int]:
    text = text.strip().strip("[]()")
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise ParseError(f"bad integer list for {what}: {text!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return n


# -- subcommands ------------------------------------------------------------


def cmd_mn(args) -> object:
    state = BosonState.basis(args.zexp, _partition(args.lam))
    op = boson.p_mul if args.mul else boson.p_perp
    return jsonio.state_to_obj(op(args.k, state))


def cmd_act(args) -> object:
    X = jsonio.parse_element(_payload(args.element))
    state = jsonio.parse_state(args.side, _payload(args.state))
    apply = fermion.rho_apply if args.side == "fermion" else boson.xi_apply
    return jsonio.state_to_obj(apply(X, state))


def _monomial_obj(S: SemiInfiniteMonomial) -> dict:
    return {
        "charge": S.charge,
        "partition": list(S.shape),
        "monomial": S.prefix_text(),
        "plus": list(S.plus),
        "minus": list(S.minus),
    }


def cmd_maya(args) -> object:
    if args.encode:
        return _monomial_obj(from_charge_partition(args.charge, _partition(args.lam)))
    if args.decode:
        if args.monomial is not None:
            prefix = args.monomial.replace("...", "").replace("…", "")
            S = SemiInfiniteMonomial.from_prefix(_int_list(prefix, "--monomial"))
        else:
            S = SemiInfiniteMonomial.from_exceptional(
                _int_list(args.plus or "", "--plus"), _int_list(args.minus or "", "--minus")
            )
        return _monomial_obj(S)
    if args.code:
        S = from_charge_partition(args.charge, _partition(args.lam))
        window = code(S, args.lo, args.hi)
        return {"lo": window.lo, "hi": window.hi, "code": window.letters}
    cut = frobenius(_partition(args.lam))
    return {"u": [jsonio.format_rational(x) for x in cut.u], "v": [jsonio.format_rational(x) for x in cut.v]}


def cmd_cocycle(args) -> object:
    if args.closed_form:
        x = jsonio.parse_loop(_payload(args.A))
        y = jsonio.parse_loop(_payload(args.B))
        return {"value": jsonio.format_rational(cocycle_closed_form(x, y))}
    A = jsonio.parse_matrix(_payload(args.A))
    B = jsonio.parse_matrix(_payload(args.B))
    return {"value": jsonio.format_rational(cocycle(A, B))}


VERIFY_FLAGS = {
    "mn": {"weight_max": 8, "k_max": 6},
    "relations": {"charge_max": 2, "weight_max": 6, "pair_max": 8, "quad_max": 5},
    "cocycle": {"index_max": 4, "triple_max": 4, "osc_max": 4, "loop_size_max": 4, "loop_power_max": 5},
    "universal": {"power_max": 3},
    "correspondence": {"charge_max": 2, "weight_max": 8, "index_max": 6, "osc_max": None},
    "oscillator": {"charge_max": 2, "weight_max": 8, "k_max": 6},
}


def cmd_verify(args) -> object:
    kwargs = {name: getattr(args, name) for name in VERIFY_FLAGS[args.suite]}
    if args.suite == "universal":
        kwargs["algebras"] = ("sl2", "sl3") if args.algebra == "all" else (args.algebra,)
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    result = SUITES[args.suite](**kwargs)
    return result.to_obj(), (0 if result.ok else 1)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wedge", description="Infinite wedge and Schur-function toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mn", help="multiply s_lambda by p_k, or apply the adjoint")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mul", action="store_true")
    mode.add_argument("--perp", action="store_true")
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='parts, e.g. "4,4,3"')
    p.add_argument("--zexp", type=int, default=0)
    p.set_defaults(func=cmd_mn)

    p = sub.add_parser("act", help="apply an element of the extended algebra to a state")
    p.add_argument("--side", choices=("fermion", "boson"), required=True)
    p.add_argument("--element", required=True, help="element JSON or a path to it")
    p.add_argument("--state", required=True, help="state JSON or a path to it")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("maya", help="Maya diagrams, codes and Frobenius cuts")
    mode = p.add_mutually_exclusive_group(required=True)
    for flag in ("--encode", "--decode", "--code", "--frobenius"):
        mode.add_argument(flag, action="store_true")
    p.add_argument("--charge", type=int, default=0)
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--monomial", help='prefix such as "4,3,1,0,-2,..."')
    p.add_argument("--plus")
    p.add_argument("--minus")
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.set_defaults(func=cmd_maya)

    p = sub.add_parser("cocycle", help="evaluate the 2-cocycle")
    p.add_argument("--A", required=True, help="matrix JSON, or loop JSON with --closed-form")
    p.add_argument("--B", required=True)
    p.add_argument("--closed-form", action="store_true", help="loop elements, closed-form pairing")
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    suites = p.add_subparsers(dest="suite", required=True)
    for suite, defaults in VERIFY_FLAGS.items():
        s = suites.add_parser(suite)
        for name, default in defaults.items():
            s.add_argument("--" + name.replace("_", "-"), dest=name, type=_nonneg, default=default)
        if suite == "universal":
            s.add_argument("--algebra", choices=("sl2", "sl3", "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def _error_obj(exc: Exception) -> dict:
    out = {"error": type(exc).__name__, "message": getattr(exc, "message", str(exc))}
    if getattr(exc, "position", None) is not None:
        out["position"] = exc.position
    return out


def run(argv: list[str]) -> tuple[int, str]:
    """Execute one command; returns ``(exit code, stdout text)``. Errors go to stderr."""
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), captured.getvalue()
    try:
        result = args.func(args)
    except (WedgeError, ValueError) as exc:
        print(jsonio.dumps(_error_obj(exc)), file=sys.stderr)
        return 1, ""
    status = 0
    if isinstance(result, tuple):
        result, status = result
    return status, jsonio.dumps(result) + "\n"


def main(argv: list[str] | None = None) -> None:
    status, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.exit(status)


if __name__ == "__main__":
    main()
