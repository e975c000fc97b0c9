"""Command line front end.  Every subcommand composes library calls and prints the results.

Output is one ``key = value`` line per quantity, or a single JSON record with
``--json``.  Exit status: 0 when every check passes, 1 when any check fails,
and 2 for configuration, parse or other typed library errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import __version__
from .codes import (
    build_gamma_code,
    build_theta_code,
    dual_containing_gamma,
    dual_containing_gamma_rank,
    dual_containing_rank,
    dual_containing_theta,
    enumerate_right_divisors,
    hh_quotient,
)
from .config import ReproConfig, load_config, shipped_configs
from .css import (
    PauliVector,
    build_syndrome_table,
    decode_basis_error,
    hamming7_css,
    quantum_params,
    verify_operator_algebra,
)
from .distance import classify_bound, min_distance
from .errors import ConfigError, OrecodeError
from .explain import SUBJECTS, explain
from .gf import GF, DerivationSpec
from .graymap import GrayMatrix, duality_commutes_check, gray_image_generator
from .parsing import parse_matrix
from .reproduce import format_json, format_report, reproduce
from .rqs import RqsSpec
from .skewpoly import SkewRing, format_poly, is_central, right_divmod, skew_mul


class Output:
    """Collects key/value pairs and prints them in one of the two formats."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.items: list[tuple[str, object]] = []
        self.failed = False

    def put(self, key, value):
        self.items.append((key, value))

    def check(self, key, ok: bool):
        self.put(key, bool(ok))
        if not ok:
            self.failed = True

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.as_json:
            stream.write(json.dumps(dict(self.items), sort_keys=False) + "\n")
            return
        for k, v in self.items:
            if isinstance(v, bool):
                v = "true" if v else "false"
            elif isinstance(v, (list, tuple)):
                v = " ".join(str(x) for x in v)
            stream.write(f"{k} = {v}\n")


# ---- argument helpers -------------------------------------------------------


def _field_size(text: str) -> int:
    m = re.fullmatch(r"\s*(?:GF|F)?_?\(?(\d+)\)?\s*", text)
    if not m:
        raise ConfigError(f"cannot read field size from {text!r}; use e.g. 8 or F8")
    return int(m.group(1))


def _add_field(p: argparse.ArgumentParser, ring: bool = True):
    p.add_argument("--field", "--q", dest="field", required=True, help="field order q, e.g. 8 or F8")
    p.add_argument("--modulus", help="defining polynomial over F_p, e.g. 'x^3 + x + 1'")
    if ring:
        p.add_argument("--theta-power", type=int, default=1, help="theta(a) = a^(p^T)")
        p.add_argument("--beta", default="0", help="derivation multiplier beta")


def _add_json(p):
    p.add_argument("--json", action="store_true", help="emit one JSON record")


def _field(args):
    return GF(_field_size(args.field), args.modulus)


def _ring(args) -> SkewRing:
    f = _field(args)
    return SkewRing(f, DerivationSpec(f, args.theta_power, f.parse(args.beta).value))


def _gens(args) -> list[str]:
    return [g.strip() for g in args.gens.split(";") if g.strip()]


def _gamma(args):
    ring = _ring(args)
    gens = _gens(args)
    spec = RqsSpec(ring.field, len(gens) - 1, ring.derivation)
    return ring, build_gamma_code(spec, args.n, gens)


def _matrix(args, field, name="matrix"):
    text = getattr(args, name, None)
    path = getattr(args, f"{name}_file", None)
    if path:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from None
    if text is None:
        raise ConfigError(f"--{name} or --{name}-file is required")
    return parse_matrix(text, field)


def _add_matrix(p, name="matrix", help_text="matrix literal, rows separated by ';'"):
    p.add_argument(f"--{name}", help=help_text)
    p.add_argument(f"--{name}-file", help="file holding the matrix literal")


# ---- subcommands -------------------------------------------------------------


def cmd_field(args, out: Output):
    f = _field(args)
    out.put("q", f.q)
    out.put("p", f.p)
    out.put("m", f.m)
    out.put("modulus", f.modulus_str())
    out.put("generator", "w")
    for text in args.element or []:
        a = f.parse(text).value
        out.put(f"{text}.value", f.format(a))
        out.put(f"{text}.coeffs", list(f.element(a).coeffs))
        out.put(f"{text}.trace", f.format(f.trace(a)))
        if a:
            out.put(f"{text}.log", f.log(a))
            out.put(f"{text}.inverse", f.format(f.inv(a)))


def cmd_skew(args, out: Output):
    ring = _ring(args)
    out.put("ring", ring.describe())
    if args.op == "mul":
        out.put("product", format_poly(skew_mul(ring.parse(args.a), ring.parse(args.b))))
    elif args.op == "divmod":
        q, r = right_divmod(ring.parse(args.f), ring.parse(args.g))
        out.put("quotient", format_poly(q))
        out.put("remainder", format_poly(r))
    else:
        out.put("central", is_central(ring.parse(args.f)))


def _describe_components(out: Output, code):
    for i, c in enumerate(code.components):
        out.put(f"g_{i}", format_poly(c.g))
        out.put(f"h_{i}", format_poly(c.h))
        out.put(f"h_prime_{i}", format_poly(c.h_prime))
        out.put(f"k_{i}", c.k)


def cmd_code(args, out: Output):
    if args.op == "search":
        ring = _ring(args)
        found = enumerate_right_divisors(ring, args.n, args.max_deg, args.dual_containing)
        out.put("count", len(found))
        for i, g in enumerate(found):
            out.put(f"divisor_{i}", format_poly(g))
        return
    gens = _gens(args)
    if len(gens) == 1:
        ring = _ring(args)
        c = build_theta_code(ring.parse(gens[0]), args.n)
        code = None
        comps = [c]
    else:
        ring, code = _gamma(args)
        comps = list(code.components)
    out.put("ring", ring.describe())
    out.put("n", args.n)
    if args.op == "build":
        if code is None:
            out.put("g", format_poly(comps[0].g))
            out.put("h", format_poly(comps[0].h))
            out.put("h_prime", format_poly(comps[0].h_prime))
            out.put("k", comps[0].k)
        else:
            out.put("s", code.rqs.s)
            _describe_components(out, code)
            out.put("k_total", code.k_total)
            out.put("cardinality", f"{ring.field.q}^{code.cardinality_exponent}")
    for i, c in enumerate(comps):
        Q, R = hh_quotient(c)
        out.put(f"hh_quotient_{i}", format_poly(Q))
        out.put(f"hh_remainder_{i}", format_poly(R))
    if code is None:
        ok, rk = dual_containing_theta(comps[0]), dual_containing_rank(comps[0])
    else:
        ok, rk = bool(dual_containing_gamma(code)), bool(dual_containing_gamma_rank(code))
    if args.op == "dualcheck":
        out.check("dual_containing", ok)
        out.check("dual_containing_rank", rk)
    else:
        out.put("dual_containing", ok)
        out.put("dual_containing_rank", rk)


def cmd_gray(args, out: Output):
    ring, code = _gamma(args)
    gm = GrayMatrix.from_matrix(_matrix(args, ring.field))
    out.put("c_G", ring.field.format(gm.c_G))
    if args.op == "image":
        M = gray_image_generator(code, gm)
        out.put("length", M.ncols)
        out.put("dimension", M.rank())
        if args.print_matrix:
            out.put("generator", M.format().replace("\n", "; "))
    else:
        out.check("duality_commutes", duality_commutes_check(code, gm))


def cmd_distance(args, out: Output):
    if args.gens:
        ring, code = _gamma(args)
        gm = GrayMatrix.from_matrix(_matrix(args, ring.field, "gray"))
        gen = gray_image_generator(code, gm)
        parity = None
    else:
        f = _field(args)
        M = _matrix(args, f)
        gen, parity = (None, M) if args.parity else (M, None)
    rep = min_distance(gen, parity, args.method, args.w_max)
    d = rep.as_dict()
    out.put("d", d["d"])
    out.put("method", d["method"])
    out.put("certified_lower_bound", d["certified_lower_bound"])
    out.put("witness", d["witness"])


def cmd_quantum(args, out: Output):
    if args.op == "params":
        qp = quantum_params(args.n, args.k, args.d, args.q)
        out.put("quantum", str(qp))
        out.put("singleton_slack", qp.singleton_slack)
        out.put("classical_bound", classify_bound(args.n, args.k, args.d).kind)
        out.check("singleton_ok", qp.singleton_slack >= 0)
    elif args.op == "css":
        css = hamming7_css()
        f = css.field
        out.put("n", css.n)
        out.put("k_quantum", css.k_quantum)
        out.put("stabilizers", css.stabilizer_count)
        build_syndrome_table(css, 1)
        for kind in ("X", "Z"):
            syns, ok = set(), True
            for j in range(css.n):
                e = PauliVector.zero(f, css.n)
                a, b = list(e.a), list(e.b)
                (a if kind == "X" else b)[j] = 1
                e = PauliVector(f, tuple(a), tuple(b))
                syns.add(css.syndrome(e))
                ok &= decode_basis_error(css, css.full_syndrome(e), 1) == e
            out.check(f"distinct_{kind}_syndromes", len(syns) == css.n and all(any(s) for s in syns))
            out.check(f"decode_{kind}_roundtrip", ok)
        if args.error:
            e = PauliVector.parse(args.error, f)
            out.put("syndrome", list(css.syndrome(e)))
            dec = decode_basis_error(css, css.full_syndrome(e), 1)
            out.put("decoded", "unknown" if dec is None else str(dec))
    else:
        rep = verify_operator_algebra(args.p, args.m)
        out.put("q", args.p**args.m)
        out.put("pairs_checked", rep.count)
        out.put("max_residual", f"{rep.max_residual:.3e}")
        out.check("passed", rep.passed(args.tol))


def cmd_reproduce(args, out: Output):
    rows: list = []
    paths = args.config or [str(p) for p in shipped_configs()]
    for path in paths:
        rows.extend(load_config(path).rows)
    if args.row:
        rows = [r for r in rows if r.label in args.row]
        if not rows:
            raise ConfigError(f"no rows labelled {args.row}")
    workers = args.threads or int(os.environ.get("ORECODE_THREADS", "1") or 1)
    results = reproduce(ReproConfig(rows), args.w_max, workers)
    text = format_json(results) if args.json else format_report(results, not args.no_timestamp, args.timings)
    sys.stdout.write(text)
    out.failed = not all(r.passed for r in results)
    out.items = None  # already printed


def cmd_explain(args, out: Output):
    if args.list:
        out.put("subjects", sorted(SUBJECTS))
        return
    sys.stdout.write(explain(args.subject) + "\n")
    out.items = None


# ---- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orecode", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"orecode {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="field parameters and element data")
    _add_field(p, ring=False)
    p.add_argument("--element", action="append", help="field literal to describe (repeatable)")
    _add_json(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("skew", help="arithmetic in F_q[x; theta, delta]")
    ss = p.add_subparsers(dest="op", required=True)
    for name, opts in (("mul", ("a", "b")), ("divmod", ("f", "g")), ("central", ("f",))):
        s = ss.add_parser(name)
        _add_field(s)
        for o in opts:
            s.add_argument(f"--{o}", required=True, help="polynomial literal")
        _add_json(s)
        s.set_defaults(func=cmd_skew)

    p = sub.add_parser("code", help="skew cyclic codes")
    ss = p.add_subparsers(dest="op", required=True)
    for name in ("build", "dualcheck"):
        s = ss.add_parser(name)
        _add_field(s)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--gens", required=True, help="'g0;g1;...;gs' (one generator gives a code over F_q)")
        _add_json(s)
        s.set_defaults(func=cmd_code)
    s = ss.add_parser("search")
    _add_field(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-deg", type=int, required=True)
    s.add_argument("--dual-containing", action="store_true")
    _add_json(s)
    s.set_defaults(func=cmd_code)

    p = sub.add_parser("gray", help="Gray images of codes over R_{q,s}")
    ss = p.add_subparsers(dest="op", required=True)
    for name in ("image", "dualcheck"):
        s = ss.add_parser(name)
        _add_field(s)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--gens", required=True)
        _add_matrix(s, help_text="Gray matrix G, rows separated by ';'")
        if name == "image":
            s.add_argument("--print-matrix", action="store_true")
        _add_json(s)
        s.set_defaults(func=cmd_gray)

    p = sub.add_parser("distance", help="minimum Hamming distance")
    _add_field(p)
    _add_matrix(p, help_text="generator matrix (or parity matrix with --parity)")
    p.add_argument("--parity", action="store_true", help="the matrix is a parity check matrix")
    p.add_argument("--n", type=int)
    p.add_argument("--gens", help="take the Gray image of this code instead of --matrix")
    _add_matrix(p, "gray", "Gray matrix used with --gens")
    p.add_argument("--method", choices=("auto", "exhaustive", "columns"), default="auto")
    p.add_argument("--w-max", type=int, default=6)
    _add_json(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("quantum", help="quantum code parameters and CSS tools")
    ss = p.add_subparsers(dest="op", required=True)
    s = ss.add_parser("params")
    for o in ("n", "k", "d", "q"):
        s.add_argument(f"--{o}", type=int, required=True)
    _add_json(s)
    s.set_defaults(func=cmd_quantum)
    s = ss.add_parser("css")
    s.add_argument("--toy", choices=("hamming7",), default="hamming7")
    s.add_argument("--error", help="Pauli vector literal [a_1,..,a_n | b_1,..,b_n]")
    _add_json(s)
    s.set_defaults(func=cmd_quantum)
    s = ss.add_parser("verify-operators")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--tol", type=float, default=1e-10)
    _add_json(s)
    s.set_defaults(func=cmd_quantum)

    p = sub.add_parser("reproduce", help="run the shipped or given reproduction configs")
    p.add_argument("config", nargs="*", help="config files (default: the shipped ones)")
    p.add_argument("--row", action="append", help="only rows with this label (repeatable)")
    p.add_argument("--w-max", type=int, default=6)
    p.add_argument("--threads", type=int, help="worker processes (default ORECODE_THREADS or 1)")
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--timings", action="store_true")
    _add_json(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("explain", help="what an operation computes")
    p.add_argument("subject", nargs="?", default="division")
    p.add_argument("--list", action="store_true")
    _add_json(p)
    p.set_defaults(func=cmd_explain)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(getattr(args, "json", False))
    try:
        args.func(args, out)
    except OrecodeError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    if out.items is not None:
        out.emit()
    return 1 if out.failed else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
