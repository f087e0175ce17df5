"""Canonical JSON for states, matrices and loop elements.

Rationals travel as strings ``"p"`` or ``"p/q"`` in lowest terms with
``q > 0``.  Output is compact, with a fixed key order inside each object,
and terms come in the order of ``sorted_items`` (label ascending, partition
decreasing), so equal values always serialize to identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .boson import BosonState
from .errors import ParseError
from .fermion import FockVector
from .gl_infinity import BandMatrix, GlElement, LoopElement, Periodic
from .linear import LinearCombination
from .partitions import Partition

_RATIONAL = re.compile(r"-?(0|[1-9]\d*)(/[1-9]\d*)?")

STATE_KINDS = {"fermion": (FockVector, "charge"), "boson": (BosonState, "zexp")}


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


# -- strict decoding helpers ------------------------------------------------


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ParseError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _reject_constant(name):
    raise ParseError(f"non-finite number {name} is not allowed")


def loads(text: str) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None


def parse_rational(value, path: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError("expected a rational, got a boolean", path)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.fullmatch(value):
        raise ParseError(f"malformed rational {value!r}", path)
    x = Fraction(value)
    if format_rational(x) != value:
        raise ParseError(f"rational {value!r} is not in lowest terms", path)
    return x


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", path)
    return value


def _list(value, path: str) -> list:
    if not isinstance(value, list):
        raise ParseError("expected an array", path)
    return value


def _object(value, path: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(value, dict):
        raise ParseError("expected an object", path)
    missing = required - value.keys()
    if missing:
        raise ParseError(f"missing key {sorted(missing)[0]!r}", path)
    extra = value.keys() - required - optional
    if extra:
        raise ParseError(f"unexpected key {sorted(extra)[0]!r}", path)
    return value


def parse_partition(value, path: str) -> Partition:
    parts = [_int(p, f"{path}[{k}]") for k, p in enumerate(_list(value, path))]
    if any(p <= 0 for p in parts):
        raise ParseError("partition parts must be positive", path)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ParseError("partition parts must be weakly decreasing", path)
    return Partition._trusted(tuple(parts))


# -- states -----------------------------------------------------------------


def state_to_obj(v: LinearCombination) -> dict:
    label = "charge" if isinstance(v, FockVector) else "zexp"
    return {
        "terms": [
            {label: m, "partition": list(lam), "coeff": format_rational(c)} for (m, lam), c in v.sorted_items()
        ]
    }


def serialize_state(v: LinearCombination) -> str:
    return dumps(state_to_obj(v))


def state_from_obj(kind: str, obj) -> LinearCombination:
    cls, label = STATE_KINDS[kind]
    obj = _object(obj, "$", {"terms"})
    terms = {}
    for k, term in enumerate(_list(obj["terms"], "terms")):
        path = f"terms[{k}]"
        term = _object(term, path, {label, "partition", "coeff"})
        key = (_int(term[label], f"{path}.{label}"), parse_partition(term["partition"], f"{path}.partition"))
        if key in terms:
            raise ParseError("duplicate term", path)
        terms[key] = parse_rational(term["coeff"], f"{path}.coeff")
    return cls._from_clean({k: c for k, c in terms.items() if c})


def parse_state(kind: str, text: str) -> LinearCombination:
    """Strictly parse a ``fermion`` or ``boson`` state."""
    if kind not in STATE_KINDS:
        raise ValueError(f"unknown state kind {kind!r}")
    return state_from_obj(kind, loads(text))


# -- gl(infinity) -----------------------------------------------------------


def matrix_to_obj(A: BandMatrix) -> dict:
    out: dict = {"finite": [[i, j, format_rational(c)] for (i, j), c in sorted(A.finite.items())]}
    if A.periodic is not None:
        out["periodic"] = {
            "N": A.periodic.period,
            "entries": [[m, i, j, format_rational(c)] for (m, i, j), c in sorted(A.periodic.entries.items())],
        }
    return out


def element_to_obj(X: GlElement) -> dict:
    return {"central": format_rational(X.central), **matrix_to_obj(X.matrix)}


def matrix_from_obj(obj, path: str = "$", extra: set[str] = frozenset()) -> BandMatrix:
    obj = _object(obj, path, set(), {"finite", "periodic"} | extra)
    finite: dict = {}
    for k, e in enumerate(_list(obj.get("finite", []), f"{path}.finite")):
        p = f"{path}.finite[{k}]"
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError("expected [row, column, coeff]", p)
        key = (_int(e[0], p + "[0]"), _int(e[1], p + "[1]"))
        if key in finite:
            raise ParseError("duplicate finite entry", p)
        finite[key] = parse_rational(e[2], p + "[2]")
    periodic = None
    if "periodic" in obj:
        pp = f"{path}.periodic"
        per = _object(obj["periodic"], pp, {"N", "entries"})
        N = _int(per["N"], pp + ".N")
        if N < 1:
            raise ParseError("period must be positive", pp + ".N")
        entries: dict = {}
        for k, e in enumerate(_list(per["entries"], pp + ".entries")):
            p = f"{pp}.entries[{k}]"
            if not isinstance(e, list) or len(e) != 4:
                raise ParseError("expected [m, i, j, coeff]", p)
            key = (_int(e[0], p + "[0]"), _int(e[1], p + "[1]"), _int(e[2], p + "[2]"))
            if not (1 <= key[1] <= N and 1 <= key[2] <= N):
                raise ParseError(f"residues must lie in 1..{N}", p)
            if key in entries:
                raise ParseError("duplicate periodic entry", p)
            entries[key] = parse_rational(e[3], p + "[3]")
        periodic = Periodic(N, entries)
    return BandMatrix(finite, periodic)


def element_from_obj(obj, path: str = "$") -> GlElement:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    central = parse_rational(obj.get("central", "0"), f"{path}.central")
    return GlElement(central, matrix_from_obj(obj, path, {"central"}))


def parse_element(text: str) -> GlElement:
    return element_from_obj(loads(text))


def parse_matrix(text: str) -> BandMatrix:
    return matrix_from_obj(loads(text))


def loop_to_obj(x: LoopElement) -> dict:
    return {
        "n": x.n,
        "terms": [
            {"power": p, "matrix": [[format_rational(a) for a in row] for row in mat]}
            for p, mat in sorted(x.terms.items())
        ],
    }


def loop_from_obj(obj, path: str = "$") -> LoopElement:
    obj = _object(obj, path, {"n", "terms"})
    n = _int(obj["n"], path + ".n")
    if n < 1:
        raise ParseError("matrix size must be positive", path + ".n")
    terms: dict = {}
    for k, t in enumerate(_list(obj["terms"], path + ".terms")):
        p = f"{path}.terms[{k}]"
        t = _object(t, p, {"power", "matrix"})
        power = _int(t["power"], p + ".power")
        rows = _list(t["matrix"], p + ".matrix")
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise ParseError(f"expected a {n}x{n} matrix", p + ".matrix")
        mat = tuple(
            tuple(parse_rational(a, f"{p}.matrix[{r}][{c}]") for c, a in enumerate(row)) for r, row in enumerate(rows)
        )
        if power in terms:
            raise ParseError("duplicate power", p)
        terms[power] = mat
    return LoopElement(n, terms)


def parse_loop(text: str) -> LoopElement:
    return loop_from_obj(loads(text))
