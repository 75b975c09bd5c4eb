"""Command-line front end.

Monomials are exponent triples ``n2,n12,n1`` of x2^n2 x12^n12 x1^n1. Scalars
are rational expressions in ``q`` (the braiding parameter) and ``z`` (the
primitive root zeta_L), e.g. ``1/3`` or ``(q^2-q)/3``.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from a2cocycles import __version__
from a2cocycles.algebra import (
    AlgebraError,
    Braiding,
    DeformationParams,
    RealizationConstraints,
    mono_name,
    rewrite_word,
    validate_params,
    mul_closed_generic,
    eps0_closed,
)
from a2cocycles.scalar import Cyclotomic, ScalarError, cyc_root, format_cyclotomic

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

FLAG_NAMES = (
    "chi1_N_trivial",
    "chi2_N_trivial",
    "chi1chi2_N_trivial",
    "chi1sq_chi2_trivial",
    "chi1_chi2sq_trivial",
)


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# parsing -------------------------------------------------------------------------

def parse_scalar(text, br: Braiding) -> Cyclotomic:
    """Exact value of a rational expression in q and z."""
    if isinstance(text, (int, Fraction)):
        return br.scalar(text)
    if isinstance(text, dict):
        return Cyclotomic.from_json(text).embed(br.order)
    text = str(text).strip()
    try:
        return br.scalar(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    import sympy

    q, z = sympy.symbols("q z")
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals={"q": q, "z": z})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise InputError(f"cannot parse scalar {text!r}") from exc
    if expr.free_symbols - {q, z}:
        raise InputError(f"unknown symbols in {text!r}")
    num, den = sympy.fraction(sympy.together(expr))

    def to_cyc(poly_expr):
        out = br.zero()
        for mono, coeff in sympy.expand(poly_expr).as_coefficients_dict().items():
            if not coeff.is_Rational:
                raise InputError(f"non-rational coefficient in {text!r}")
            powers = mono.as_powers_dict()
            a, b = powers.get(q, 0), powers.get(z, 0)
            if not all(sympy.sympify(x).is_Integer for x in (a, b)):
                raise InputError(f"non-integer exponent in {text!r}")
            e = int(a) * br.q_exp + int(b)
            out = out + cyc_root(br.order, e) * Fraction(int(coeff.p), int(coeff.q))
        return out

    d = to_cyc(den)
    if d.is_zero():
        raise InputError(f"division by zero in {text!r}")
    return to_cyc(num) / d


def parse_vector(text, n: int, br: Braiding, what: str) -> list:
    if isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = str(text).split(",")
    if len(items) != n:
        raise InputError(f"{what} needs {n} comma-separated values, got {len(items)}")
    return [parse_scalar(t, br) for t in items]


def parse_monomial_pair(text, N: int):
    try:
        vals = [int(t) for t in str(text).split(",")]
    except ValueError as exc:
        raise InputError(f"--pair expects six integers, got {text!r}") from exc
    if len(vals) != 6 or not all(0 <= v < N for v in vals):
        raise InputError(f"--pair expects six exponents in [0, {N - 1}]")
    return tuple(vals[:3]), tuple(vals[3:])


@dataclass
class SessionConfig:
    N: int = 3
    q_exp: int = 1
    q12_exp: int | None = None
    order: int | None = None
    case: str = "atypical"
    lam: list = field(default_factory=lambda: ["1"] * 5)
    flags: dict = field(default_factory=dict)
    format: str = "json"

    def braiding(self) -> Braiding:
        return Braiding(self.N, self.q_exp, self.q12_exp, order=self.order)


def load_config(args) -> tuple[SessionConfig, Braiding, DeformationParams, RealizationConstraints]:
    cfg = SessionConfig()
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {args.config}: {exc}") from exc
        for key, value in data.items():
            key = {"lambda": "lam", "q12": "q12_exp", "q": "q_exp"}.get(key, key)
            if not hasattr(cfg, key):
                raise InputError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
        if "case" in data and "lambda" not in data and data["case"] == "generic":
            cfg.lam = ["1", "1", "1", "0", "0"]
    for key in ("N", "q_exp", "q12_exp", "order", "case", "format"):
        v = getattr(args, key, None)
        if v is not None:
            setattr(cfg, key, v)
    if getattr(args, "lam", None) is not None:
        cfg.lam = args.lam
    elif cfg.case == "generic" and cfg.lam == ["1"] * 5:
        cfg.lam = ["1", "1", "1", "0", "0"]
    if cfg.case not in ("generic", "atypical"):
        raise InputError(f"unknown case {cfg.case!r}")
    if cfg.format not in ("json", "csv", "md"):
        raise InputError(f"unknown format {cfg.format!r}")
    unknown = set(cfg.flags) - set(FLAG_NAMES) - {"weight_modulus"}
    if unknown:
        raise InputError(f"unknown realization flags {sorted(unknown)}")
    flags = RealizationConstraints(**cfg.flags)
    br = cfg.braiding()
    if cfg.case == "atypical" and not br.is_atypical_shape():
        raise InputError("the atypical case needs N = 3 and q12 = q21 = q")
    items = cfg.lam if isinstance(cfg.lam, list) else str(cfg.lam).split(",")
    if len(items) == 3:
        items = list(items) + ["0", "0"]
    lam = DeformationParams(*parse_vector(items, 5, br, "lambda"))
    if cfg.case == "generic" and not lam.is_generic():
        raise InputError("the generic case needs lambda112 = lambda122 = 0")
    validate_params(br, lam, flags)
    return cfg, br, lam, flags


# rendering -----------------------------------------------------------------------

def _fmt(v: Cyclotomic, br: Braiding) -> str:
    return format_cyclotomic(v, "q", br.q_exp)


def _emit(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_rows(header: list, rows: list, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_table(table, args, fmt: str) -> str:
    br = table.braiding
    if getattr(args, "pair", None):
        a, b = parse_monomial_pair(args.pair, br.N)
        v = table(a, b)
        if fmt == "json":
            return _dump_json({"a": list(a), "b": list(b), "value": v.to_json(), "q_form": _fmt(v, br)})
        return _render_rows(["a", "b", "value"], [[mono_name(a), mono_name(b), _fmt(v, br)]], fmt)
    if fmt == "json":
        return _dump_json(table.to_json())
    return _render_rows(["a", "b", "value"], list(table.rows(full=getattr(args, "full", False))), fmt)


# commands ------------------------------------------------------------------------

def _setting(br, lam, case, flags):
    from a2cocycles.section import LiftSetting

    return LiftSetting(br, lam, case, flags)


def cmd_table(args) -> int:
    from a2cocycles.cocycle import sigma_table

    cfg, br, lam, flags = load_config(args)
    table = sigma_table(_setting(br, lam, cfg.case, flags))
    _emit(render_table(table, args, cfg.format), args)
    return EXIT_OK


def cmd_orbit(args) -> int:
    from a2cocycles.cocycle import alpha_from_params, orbit_act, sigma_table

    cfg, br, lam, flags = load_config(args)
    if cfg.case != "atypical":
        raise InputError("orbit is available for the atypical case")
    alpha = parse_vector(args.alpha or ",".join(["0"] * 8), 8, br, "--alpha")
    table = sigma_table(_setting(br, lam, cfg.case, flags))
    out = orbit_act(alpha_from_params(br, alpha), table)
    _emit(render_table(out, args, cfg.format), args)
    return EXIT_OK


def cmd_exp(args) -> int:
    from a2cocycles.cocycle import CocycleTable
    from a2cocycles.hochschild import HochschildCocycle, exponential

    cfg, br, _, _ = load_config(args)
    if cfg.case != "atypical":
        raise InputError("exp is available for the atypical case")
    e = parse_vector(args.e or "0,0,0,0,0", 5, br, "--e")
    beta = parse_vector(args.beta or ",".join(["0"] * 8), 8, br, "--beta")
    eta = HochschildCocycle.from_vectors(br, e, beta)
    vals = exponential(eta, args.truncation)
    table = CocycleTable(br.N, "exponential", None, br, vals)
    _emit(render_table(table, args, cfg.format), args)
    return EXIT_OK


def cmd_classify(args) -> int:
    from a2cocycles.hochschild import classify_purity

    cfg, br, lam, _ = load_config(args)
    if cfg.case != "atypical":
        raise InputError("classify is available for the atypical case")
    verdict = classify_purity(br, lam)
    if cfg.format == "json":
        text = _dump_json(verdict.to_json())
    else:
        rows = [["verdict", verdict.tag], ["reason", verdict.reason]]
        if verdict.alpha is not None:
            from a2cocycles.hochschild import COBOUNDARY_NAMES, ETA_NAMES

            rows += [[f"a{n}", _fmt(v, br)] for n, v in zip(COBOUNDARY_NAMES, verdict.alpha)]
            rows += [[f"e{n}", _fmt(v, br)] for n, v in zip(ETA_NAMES, verdict.eta.e_vector())]
            rows += [[f"b{n}", _fmt(v, br)] for n, v in zip(COBOUNDARY_NAMES, verdict.eta.beta_vector())]
            rows.append(["verified", str(verdict.verified)])
        text = _render_rows(["field", "value"], rows, cfg.format)
    _emit(text, args)
    if verdict.verified is False:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_section(args) -> int:
    from a2cocycles.algebra import format_element
    from a2cocycles.section import build_section

    cfg, br, lam, flags = load_config(args)
    gamma = build_section(_setting(br, lam, cfg.case, flags), args.method)
    if cfg.format == "json":
        text = _dump_json({"case": cfg.case, "verified": gamma.verified, "values": gamma.to_json()})
    else:
        rows = [[mono_name(b), format_element(gamma(b))] for b in sorted(gamma.values)]
        text = _render_rows(["b", "gamma(b)"], rows, cfg.format)
    _emit(text, args)
    return EXIT_OK if gamma.verified else EXIT_VERIFY


def verification_suite(br, lam, case, flags, word_length: int = 6) -> list[tuple[str, bool]]:
    """(name, passed) for every structural and table check of a configuration."""
    from a2cocycles.cocycle import reconstruction_failures, sigma_table
    from a2cocycles.coproduct import delta_two, delta_two_right, nichols_hopf
    from a2cocycles.section import build_section, check_H1, check_H2, check_weights, verify_comodule

    results = []
    S = _setting(br, lam, case, flags)
    hopf = nichols_hopf(br)
    results.append(("coassociativity", all(delta_two(br, b) == delta_two_right(br, b) for b in hopf.basis)))
    counit = True
    for b in hopf.basis:
        d = hopf.delta[b]
        left = {v: c for (u, v), c in d.items() if u == (0, 0, 0)}
        right = {u: c for (u, v), c in d.items() if v == (0, 0, 0)}
        counit &= left == {b: br.one()} == right
    results.append(("counit", counit))
    rng = random.Random(0)
    confluent = True
    for n in range(1, word_length + 1):
        for i in range(2 ** n):
            w = [1 + ((i >> k) & 1) for k in range(n)]
            ref = rewrite_word(S.E, w)
            confluent &= rewrite_word(S.E, w, "rightmost") == ref
            confluent &= rewrite_word(S.E, w, "random", rng) == ref
    results.append(("confluence", confluent))
    if case == "generic":
        ok = True
        for n in hopf.basis:
            for m in hopf.basis:
                prod = S.E.monomial(n) * S.E.monomial(m)
                ok &= prod == mul_closed_generic(S.E, n, m)
                ok &= prod.coeff((0, 0, 0)) == eps0_closed(S.E, n, m)
        results.append(("closed product and eps0", ok))
    results.append(("H1", all(check_H1(S, b) for b in hopf.basis)))
    results.append(("H2", all(check_H2(S, b) for b in hopf.basis)))
    gamma = build_section(S, "general", check=False)
    closed = build_section(S, "closed")
    results.append(("section closed form", gamma.values == closed.values))
    results.append(("comodule law", verify_comodule(S, gamma)))
    results.append(("H-linearity", check_weights(S, gamma)))
    table = sigma_table(S, gamma)
    results.append(("reconstruction", not reconstruction_failures(S, gamma, table, stop_early=True)))
    results.append(("first rows", _first_rows_ok(table, br, lam, case)))
    if case == "atypical":
        from a2cocycles.hochschild import classify_purity, purity_case

        if purity_case(br, lam) is not None:
            results.append(("exponential witness", bool(classify_purity(br, lam).verified)))
    return results


def _first_rows_ok(table, br, lam, case) -> bool:
    from a2cocycles.cocycle import expected_first_rows

    expected = expected_first_rows(br, lam, case)
    got = {(g, b): v for g, row in table.first_rows().items() for b, v in row.items()}
    return got == {k: v for k, v in expected.items() if not v.is_zero()}


def cmd_verify(args) -> int:
    cfg, br, lam, flags = load_config(args)
    results = verification_suite(br, lam, cfg.case, flags, args.word_length)
    failed = [name for name, ok in results if not ok]
    if cfg.format == "json":
        text = _dump_json({"checks": [{"name": n, "passed": ok} for n, ok in results], "failed": failed})
    else:
        text = _render_rows(["check", "result"], [[n, "PASS" if ok else "FAIL"] for n, ok in results], cfg.format)
    _emit(text, args)
    return EXIT_VERIFY if failed else EXIT_OK


# entry point ---------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with N, q_exp, q12_exp, order, case, lambda, flags, format")
    p.add_argument("--case", choices=("generic", "atypical"))
    p.add_argument("--N", type=int, help="order of q")
    p.add_argument("--q-exp", dest="q_exp", type=int, help="q = zeta_L^q_exp")
    p.add_argument("--q12-exp", dest="q12_exp", type=int, help="q12 = zeta_L^q12_exp")
    p.add_argument("--order", type=int, help="L, the order of the cyclotomic field (default N)")
    p.add_argument("--lambda", dest="lam", help="l1,l2,l12,l112,l122")
    p.add_argument("--format", choices=("json", "csv", "md"))
    p.add_argument("--output", "-o", help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="a2cocycles", description="Hopf 2-cocycles of type A2 Nichols algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="full cocycle table sigma_lambda")
    _common(p)
    p.add_argument("--pair", help="print one entry: n2,n12,n1,m2,m12,m1")
    p.add_argument("--full", action="store_true", help="include zero entries in csv/md output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("orbit", help="alpha -> sigma_lambda for an invariant unit alpha (N = 3)")
    _common(p)
    p.add_argument("--alpha", help="a212,a221,a211,a121,a221211,a212121,a221212,a121211")
    p.add_argument("--pair")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("exp", help="exponential of an invariant Hochschild cocycle (N = 3)")
    _common(p)
    p.add_argument("--e", help="e1,e2,e12,e112,e122")
    p.add_argument("--beta", help="b212,b221,b211,b121,b221211,b212121,b221212,b121211")
    p.add_argument("--truncation", type=int, default=5)
    p.add_argument("--pair")
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("classify", help="exponential or pure, with a verified witness")
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("section", help="the section gamma_lambda on the PBW basis")
    _common(p)
    p.add_argument("--method", choices=("general", "closed"), default="general")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("verify", help="run the invariant suite for one configuration")
    _common(p)
    p.add_argument("--word-length", type=int, default=6, help="confluence is checked on all words up to this length")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, AlgebraError, ScalarError, ValueError) as exc:
        print(f"a2cocycles: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
