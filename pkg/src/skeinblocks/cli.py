"""Command-line front end.

Every command prints line-oriented records of space-separated ``key=value``
pairs, or one JSON object per line with ``--json``. Exit status is 0 on
success, 1 when a verification finds a mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .blocks import delta, delta_by_enumeration, delta_one_handle, delta_one_handle_by_enumeration, dim_blocks
from .cyclo import RootSelector, unitary_root
from .errors import SkeinError
from .form import signature_up_to_sign
from .graph import builtin_graph, curve_types, parse_graph
from .level import make_level
from .twist import check_factorization, order_report
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v).replace(" ", "")


class Emitter:
    def __init__(self, as_json: bool, out=None):
        self.as_json = as_json
        self.out = out or sys.stdout

    def __call__(self, **fields):
        if self.as_json:
            line = json.dumps(fields, default=str)
        else:
            line = " ".join(f"{k}={_value(v)}" for k, v in fields.items())
        print(line, file=self.out)


def _load_graph(spec: str):
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        try:
            return parse_graph(path.read_bytes())
        except OSError as exc:
            raise UsageError(f"cannot read graph file {spec}: {exc.strerror}") from None
    return builtin_graph(spec)


def _common(sp: argparse.ArgumentParser, graph: bool = True):
    sp.add_argument("--p", type=int, required=True, help="level")
    if graph:
        sp.add_argument("--graph", required=True, help="graph JSON file or builtin name (theta, chain:2,1, ...)")
        sp.add_argument("--legs", default="", help="boundary colors c1,c2,... by leg index")
    sp.add_argument("--json", action="store_true", help="one JSON object per line")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="skeinblocks", description="Conformal-block dimensions, twist orders and form signatures.")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    sp = sub.add_parser("dim", help="dimension of the block space")
    _common(sp)

    sp = sub.add_parser("delta", help="closed-form delta next to the direct count")
    _common(sp, graph=False)
    sp.add_argument("--colors", "--legs", dest="colors", required=True, help="colors i1,i2,...")
    sp.add_argument("--one-handle", action="store_true", help="count j with W(i..., j, j) nonzero")

    sp = sub.add_parser("order", help="projective order of the twist along one edge")
    _common(sp)
    sp.add_argument("--edge", type=int, required=True)

    sp = sub.add_parser("signature", help="signature of the Hermitian form up to sign")
    _common(sp)
    sp.add_argument("--ell", type=int, default=None, help="embedding A = exp(i pi ell / p); default unitary")
    sp.add_argument("--include-legs", action="store_true", help="also weight leg edges")
    sp.add_argument("--max-colorings", type=int, default=200_000, help="refuse larger block spaces")

    sp = sub.add_parser("curve-types", help="curve types of the internal edges")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("check-k", help="check twist orders against a level vector")
    _common(sp)
    sp.add_argument("--k", required=True, help="entries v0,v1,... in curve-type order")

    sp = sub.add_parser("verify", help="run a verification sweep")
    sp.add_argument("--suite", default="all", choices=SUITES + ("all",))
    sp.add_argument("--p-max", type=int, default=None, help="largest level (default per suite, at most 16)")
    sp.add_argument("--g-max", type=int, default=None, help="largest genus for orders/factor")
    sp.add_argument("--n-max", type=int, default=None, help="largest number of legs")
    sp.add_argument("--summary-only", action="store_true", help="print only the summary line")
    sp.add_argument("--json", action="store_true")
    return ap


def _cmd_dim(a, emit):
    level, G, legs = make_level(a.p), _load_graph(a.graph), _ints(a.legs)
    emit(p=level.p, graph=a.graph, legs=",".join(map(str, legs)), dim=dim_blocks(level, G, legs))
    return EXIT_OK


def _cmd_delta(a, emit):
    level, cs = make_level(a.p), _ints(a.colors)
    if a.one_handle:
        rep, oracle = delta_one_handle(level, cs), delta_one_handle_by_enumeration(level, cs)
    else:
        rep, oracle = delta(level, cs), delta_by_enumeration(level, cs)
    fields = dict(p=level.p, colors=",".join(map(str, cs)), variant=rep.variant, delta=rep.value,
                  j_min=rep.j_min, j_max=rep.j_max, count=oracle, match=rep.value == oracle)
    if rep.typography_resolved:
        fields["literal"] = rep.literal_value
    emit(**fields)
    return EXIT_OK if rep.value == oracle else EXIT_MISMATCH


def _cmd_order(a, emit):
    level, G, legs = make_level(a.p), _load_graph(a.graph), _ints(a.legs)
    r = order_report(level, G, a.edge, legs)
    sit = r.situation
    emit(p=level.p, graph=a.graph, legs=",".join(map(str, legs)), edge=a.edge, order=r.computed,
         predicted=r.predicted, match=r.match, case=sit.case if sit else "not-covered",
         typography_resolved=r.typography_resolved)
    return EXIT_OK if r.match else EXIT_MISMATCH


def _cmd_signature(a, emit):
    level, G, legs = make_level(a.p), _load_graph(a.graph), _ints(a.legs)
    root = unitary_root(level.p) if a.ell is None else RootSelector(level.p, a.ell)
    dim = dim_blocks(level, G, legs)
    if dim > a.max_colorings:
        raise UsageError(f"block space has {dim} colorings, above --max-colorings {a.max_colorings}")
    sig = signature_up_to_sign(level, root, G, legs, include_legs=a.include_legs)
    emit(p=level.p, graph=a.graph, legs=",".join(map(str, legs)), ell=root.ell, dim=sig.dim,
         signature=",".join(map(str, sig.counts)), definite=sig.definite)
    return EXIT_OK


def _cmd_curve_types(a, emit):
    G = _load_graph(a.graph)
    for i, (ct, edges) in enumerate(curve_types(G).items()):
        emit(index=i, type=str(ct), separating=ct.separating, edges=",".join(map(str, edges)))
    return EXIT_OK


def _cmd_check_k(a, emit):
    level, G, legs = make_level(a.p), _load_graph(a.graph), _ints(a.legs)
    r = check_factorization(level, G, legs, _ints(a.k))
    for e, order in r.orders.items():
        emit(edge=e, order=order)
    for e, ct, order, k in r.violations:
        emit(violation=e, type=str(ct), order=order, k=k)
    emit(p=level.p, graph=a.graph, passed=r.passed, violations=len(r.violations))
    return EXIT_OK if r.passed else EXIT_MISMATCH


def _cmd_verify(a, emit):
    kw = {}
    if a.g_max is not None:
        if a.suite not in ("orders", "factor"):
            raise UsageError("--g-max applies to the orders and factor suites")
        kw["g_max"] = a.g_max
    if a.n_max is not None:
        if a.suite not in ("orders", "factor", "delta", "stabilizer"):
            raise UsageError("--n-max applies to the delta, orders, factor and stabilizer suites")
        kw["n_max"] = a.n_max
    status = EXIT_OK
    for rep in run_suite(a.suite, a.p_max, **kw):
        if not a.summary_only:
            for rec in rep.records:
                emit(suite=rep.suite, **rec.fields())
        emit(**rep.summary())
        if not rep.ok:
            status = EXIT_MISMATCH
    return status


COMMANDS = {
    "dim": _cmd_dim,
    "delta": _cmd_delta,
    "order": _cmd_order,
    "signature": _cmd_signature,
    "curve-types": _cmd_curve_types,
    "check-k": _cmd_check_k,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    err = err or sys.stderr
    try:
        a = build_parser().parse_args(argv)
        if a.cmd is None:
            raise UsageError("missing command; choose from " + ", ".join(COMMANDS))
        return COMMANDS[a.cmd](a, Emitter(a.json, out))
    except (UsageError, SkeinError, ValueError, IndexError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=err)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
