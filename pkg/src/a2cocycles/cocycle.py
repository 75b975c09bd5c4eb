"""Hopf 2-cocycles sigma(a, b) = eps0(gamma(a) gamma(b)), convolution of
functionals on B_q and the gauge action of convolution units on cocycles.

Convolution on B_q (x) B_q uses the braided tensor coalgebra: the middle legs
of Delta(x) (x) Delta(y) are swapped with the braiding scalar.
"""

from __future__ import annotations

from dataclasses import dataclass

from a2cocycles.algebra import (
    AlgebraElement,
    AlgebraError,
    Braiding,
    DeformationParams,
    _acc,
    mono_name,
)
from a2cocycles.coproduct import NicholsHopf, nichols_hopf
from a2cocycles.scalar import Cyclotomic, format_cyclotomic
from a2cocycles.section import ATYPICAL, LiftSetting, SectionMap, build_section

# standard order of the eight invariant monomials of degree 3, 6 and 9
ALPHA_MONOMIALS = (
    (1, 1, 0),
    (2, 0, 1),
    (1, 0, 2),
    (0, 1, 1),
    (2, 1, 2),
    (1, 2, 1),
    (2, 2, 0),
    (0, 2, 2),
)
UNIT = (0, 0, 0)


class Functional:
    """Linear map B_q -> k, stored on the PBW basis (missing keys are 0)."""

    def __init__(self, br: Braiding, values: dict | None = None):
        self.braiding = br
        self.values = {k: v for k, v in (values or {}).items() if not v.is_zero()}

    @classmethod
    def counit(cls, br: Braiding) -> Functional:
        return cls(br, {UNIT: br.one()})

    def __call__(self, b) -> Cyclotomic:
        v = self.values.get(tuple(b))
        return v if v is not None else self.braiding.zero()

    def __eq__(self, other):
        return isinstance(other, Functional) and self.values == other.values

    __hash__ = None

    def __add__(self, other: Functional) -> Functional:
        out = dict(self.values)
        for k, v in other.values.items():
            _acc(out, k, v)
        return Functional(self.braiding, out)

    def __sub__(self, other: Functional) -> Functional:
        return self + other.scale(-1)

    def scale(self, c) -> Functional:
        c = self.braiding.scalar(c)
        return Functional(self.braiding, {k: v * c for k, v in self.values.items()})

    def __repr__(self):
        return f"Functional({len(self.values)} nonzero values)"


class Bifunctional:
    """Linear map B_q (x) B_q -> k; sparse storage of a total mapping."""

    def __init__(self, br: Braiding, values: dict | None = None):
        self.braiding = br
        self.values = {k: v for k, v in (values or {}).items() if not v.is_zero()}

    @classmethod
    def counit(cls, br: Braiding) -> Bifunctional:
        return cls(br, {(UNIT, UNIT): br.one()})

    def __call__(self, a, b) -> Cyclotomic:
        v = self.values.get((tuple(a), tuple(b)))
        return v if v is not None else self.braiding.zero()

    def __eq__(self, other):
        return isinstance(other, Bifunctional) and self.values == other.values

    __hash__ = None

    def __add__(self, other: Bifunctional) -> Bifunctional:
        out = dict(self.values)
        for k, v in other.values.items():
            _acc(out, k, v)
        return Bifunctional(self.braiding, out)

    def __sub__(self, other: Bifunctional) -> Bifunctional:
        return self + other.scale(-1)

    def scale(self, c) -> Bifunctional:
        c = self.braiding.scalar(c)
        if c.is_zero():
            return Bifunctional(self.braiding)
        return Bifunctional(self.braiding, {k: v * c for k, v in self.values.items()})

    def row(self, a) -> dict:
        a = tuple(a)
        return {b: v for (x, b), v in self.values.items() if x == a}

    def diff(self, other: Bifunctional) -> list:
        keys = set(self.values) | set(other.values)
        return sorted(k for k in keys if self(*k) != other(*k))

    def __repr__(self):
        return f"Bifunctional({len(self.values)} nonzero values)"


@dataclass
class CocycleTable:
    N: int
    case: str
    params: DeformationParams | None
    braiding: Braiding
    values: Bifunctional

    def __call__(self, a, b) -> Cyclotomic:
        return self.values(a, b)

    def basis(self) -> list:
        N = self.N
        return [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]

    def first_rows(self) -> dict:
        """Nonzero entries sigma(x2, .) and sigma(x1, .)."""
        return {g: self.values.row(g) for g in ((1, 0, 0), (0, 0, 1))}

    def to_json(self) -> dict:
        br = self.braiding
        return {
            "N": self.N,
            "case": self.case,
            "braiding": br.to_json(),
            "lambda": self.params.to_json() if self.params is not None else None,
            "entries": [
                {"a": list(a), "b": list(b), "value": v.to_json(), "q_form": format_cyclotomic(v, "q", br.q_exp)}
                for (a, b), v in sorted(self.values.values.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> CocycleTable:
        b = data["braiding"]
        br = Braiding(b["N"], b["q_exp"], b["q12_exp"], order=b["order"])
        lam = None
        if data.get("lambda") is not None:
            lam = DeformationParams(*(Cyclotomic.from_json(x) for x in data["lambda"]))
        vals = {(tuple(e["a"]), tuple(e["b"])): Cyclotomic.from_json(e["value"]) for e in data["entries"]}
        return cls(data["N"], data["case"], lam, br, Bifunctional(br, vals))

    def rows(self, full: bool = False):
        """(a, b, value-string) rows in basis order; zeros only when ``full``."""
        br = self.braiding
        for a in self.basis():
            for b in self.basis():
                v = self.values(a, b)
                if full or not v.is_zero():
                    yield mono_name(a), mono_name(b), format_cyclotomic(v, "q", br.q_exp)


# cocycle from a section ----------------------------------------------------------

class _Eps0Products:
    """eps0 of products of cleft monomials, memoized."""

    def __init__(self, setting: LiftSetting):
        self.E = setting.E
        self.zero = setting.braiding.zero()
        self._cache: dict = {}

    def __call__(self, m, n) -> Cyclotomic:
        key = (m, n)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self.E.mul_monomials(m, n).get(UNIT, self.zero)
        return hit


def sigma(setting: LiftSetting, gamma: SectionMap, a, b) -> Cyclotomic:
    """sigma(a, b) = eps0(gamma(a) gamma(b))."""
    return _sigma_value(setting, _Eps0Products(setting), gamma(a), gamma(b))


def _sigma_value(setting, eps0_prod, ga: AlgebraElement, gb: AlgebraElement) -> Cyclotomic:
    acc = setting.braiding.zero()
    for m, c in ga.terms.items():
        for n, d in gb.terms.items():
            e = eps0_prod(m, n)
            if not e.is_zero():
                acc = acc + c * d * e
    return acc


def sigma_table(setting: LiftSetting, gamma: SectionMap | None = None) -> CocycleTable:
    gamma = gamma or build_section(setting, "general", check=False)
    eps0_prod = _Eps0Products(setting)
    basis = setting.B.basis()
    br = setting.braiding
    N = br.N
    vals: dict = {}
    for a in basis:
        ga = gamma(a)
        for b in basis:
            # eps0 vanishes unless the product has the degree of a scalar
            if setting.case != ATYPICAL:
                da = (a[1] + a[2] + b[1] + b[2]) % N, (a[0] + a[1] + b[0] + b[1]) % N
                if da != (0, 0):
                    continue
            elif (sum(a) + a[1] + sum(b) + b[1]) % 3:
                continue
            v = _sigma_value(setting, eps0_prod, ga, gamma(b))
            if not v.is_zero():
                vals[(a, b)] = v
    return CocycleTable(N, setting.case, setting.params, br, Bifunctional(br, vals))


def verify_reconstruction(setting: LiftSetting, gamma: SectionMap, table: CocycleTable) -> bool:
    """gamma(a) gamma(b) = sum chi(a'', b') sigma(a', b') gamma(a'' b'') for all basis pairs."""
    return not reconstruction_failures(setting, gamma, table, stop_early=True)


def reconstruction_failures(setting: LiftSetting, gamma: SectionMap, table: CocycleTable,
                            stop_early: bool = False) -> list:
    hopf = nichols_hopf(setting.braiding)
    sig = table.values.values
    sig_rows: dict = {}
    for (x, y), v in sig.items():
        sig_rows.setdefault(x, {})[y] = v
    gprod: dict = {}

    def gamma_of_product(u, v) -> dict:
        hit = gprod.get((u, v))
        if hit is None:
            out: dict = {}
            for m, c in hopf.product(u, v).items():
                for k, d in gamma(m).terms.items():
                    _acc(out, k, c * d)
            hit = gprod[(u, v)] = out
        return hit

    by_left = {b: {} for b in hopf.basis}
    for b in hopf.basis:
        for (b1, b2), c in hopf.delta[b].items():
            by_left[b].setdefault(b1, []).append((b2, c))

    bad = []
    for a in hopf.basis:
        ga = gamma(a)
        for b in hopf.basis:
            lhs = (ga * gamma(b)).terms
            rhs: dict = {}
            db = by_left[b]
            for (a1, a2), ca in hopf.delta[a].items():
                row = sig_rows.get(a1)
                if not row:
                    continue
                for b1, v in row.items():
                    lst = db.get(b1)
                    if not lst:
                        continue
                    cv = ca * v * hopf.bichar(a2, b1)
                    for b2, cb in lst:
                        c = cv * cb
                        for k, d in gamma_of_product(a2, b2).items():
                            _acc(rhs, k, c * d)
            if lhs != rhs:
                bad.append((a, b))
                if stop_early:
                    return bad
    return bad


# functionals ---------------------------------------------------------------------

def functional_convolve(f: Functional, g: Functional) -> Functional:
    hopf = nichols_hopf(f.braiding)
    out: dict = {}
    for b in hopf.basis:
        acc = f.braiding.zero()
        for (u, v), c in hopf.delta[b].items():
            fu = f.values.get(u)
            if fu is None:
                continue
            gv = g.values.get(v)
            if gv is None:
                continue
            acc = acc + c * fu * gv
        if not acc.is_zero():
            out[b] = acc
    return Functional(f.braiding, out)


def functional_inverse(f: Functional) -> Functional:
    """Convolution inverse sum_k (eps - f)^{*k}; needs f(1) != 0."""
    br = f.braiding
    f1 = f(UNIT)
    if f1.is_zero():
        raise AlgebraError("functional is not convolution invertible: f(1) = 0")
    # normalize so that the value at 1 is 1, then (eps - f) is nilpotent
    g = f.scale(f1.inverse())
    eps = Functional.counit(br)
    d = eps - g
    total = eps
    power = eps
    while True:
        power = functional_convolve(power, d)
        if not power.values:
            break
        total = total + power
    return total.scale(f1.inverse())


def alpha_from_params(br: Braiding, coeffs) -> Functional:
    """eps + sum c_i delta_{b_i} over the eight invariant monomials (N = 3)."""
    coeffs = [br.scalar(c) for c in coeffs]
    if len(coeffs) != 8:
        raise AlgebraError("alpha needs 8 coefficients")
    if br.N != 3:
        raise AlgebraError("alpha_from_params is stated for N = 3")
    vals = {UNIT: br.one()}
    vals.update(zip(ALPHA_MONOMIALS, coeffs))
    return Functional(br, vals)


def alpha_inverse_closed(br: Braiding, coeffs) -> Functional:
    """Closed form of the convolution inverse of alpha_from_params(coeffs)."""
    a110, a201, a102, a011, a212, a121, a220, a022 = (br.scalar(c) for c in coeffs)
    q = br.q
    d = q - q * q
    vals = {
        UNIT: br.one(),
        (1, 1, 0): -a110,
        (2, 0, 1): -a201,
        (1, 0, 2): -a102,
        (0, 1, 1): -a011,
        (2, 1, 2): -a212 + a102 * a110 + a201 * (a011 + d * a102),
        (0, 2, 2): -a022 + d * a011 * a102 + a011 * a011,
        (2, 2, 0): -a220 + d * a201 * a110 + a110 * a110,
        (1, 2, 1): -a121 - 3 * a201 * a102 + d * a201 * a011 + d * a102 * a110 + a110 * a011,
    }
    return Functional(br, vals)


# bifunctional convolution and the gauge action -----------------------------------

def bifunctional_convolve(F: Bifunctional, G: Bifunctional) -> Bifunctional:
    """(F * G)(x, y) = sum chi(x'', y') F(x', y') G(x'', y'')."""
    br = F.braiding
    hopf = nichols_hopf(br)
    codelta = hopf.codelta
    out: dict = {}
    g_by_left: dict = {}
    for (x2, y2), g in G.values.items():
        g_by_left.setdefault(x2, []).append((y2, g))
    for (x1, y1), f in F.values.items():
        for x2, glist in g_by_left.items():
            xs = codelta.get((x1, x2))
            if not xs:
                continue
            for y2, g in glist:
                ys = codelta.get((y1, y2))
                if not ys:
                    continue
                c = f * g * hopf.bichar(x2, y1)
                for x, cx in xs:
                    cxc = c * cx
                    for y, cy in ys:
                        _acc(out, (x, y), cxc * cy)
    return Bifunctional(br, out)


def orbit_act(alpha: Functional, table: CocycleTable) -> CocycleTable:
    """alpha -> sigma = (alpha (x) alpha) * sigma * (alpha^{-1} o m)."""
    br = table.braiding
    hopf = nichols_hopf(br)
    if alpha(UNIT) != 1:
        raise AlgebraError("alpha must satisfy alpha(1) = 1")
    inv = functional_inverse(alpha)
    sig = table.values.values
    sig_rows: dict = {}
    for (x, y), v in sig.items():
        sig_rows.setdefault(x, {})[y] = v

    # alpha^{-1}(x3 y3)
    pcache: dict = {}

    def inv_prod(u, v):
        hit = pcache.get((u, v))
        if hit is None:
            acc = br.zero()
            for m, c in hopf.product(u, v).items():
                w = inv.values.get(m)
                if w is not None:
                    acc = acc + c * w
            hit = pcache[(u, v)] = acc
        return hit

    # for each x: x2 -> [(x1, x3, alpha(x1) * coeff)]
    split: dict = {}
    for x in hopf.basis:
        d: dict = {}
        for (x1, x2, x3), c in hopf.delta2(x).items():
            a = alpha.values.get(x1)
            if a is None:
                continue
            d.setdefault(x2, []).append((x1, x3, c * a))
        split[x] = d

    out: dict = {}
    for x in hopf.basis:
        sx = split[x]
        for y in hopf.basis:
            sy = split[y]
            acc = br.zero()
            for x2, xl in sx.items():
                row = sig_rows.get(x2)
                if not row:
                    continue
                for y2, yl in sy.items():
                    s = row.get(y2)
                    if s is None:
                        continue
                    for x1, x3, cx in xl:
                        for y1, y3, cy in yl:
                            p = inv_prod(x3, y3)
                            if p.is_zero():
                                continue
                            chi = hopf.bichar(x2, y1) * hopf.bichar(x3, y1) * hopf.bichar(x3, y2)
                            acc = acc + cx * cy * s * p * chi
            if not acc.is_zero():
                out[(x, y)] = acc
    return CocycleTable(table.N, table.case, table.params, br, Bifunctional(br, out))


def setting_for(br: Braiding, lam: DeformationParams, case: str | None = None) -> LiftSetting:
    return LiftSetting(br, lam, case)


def expected_first_rows(br: Braiding, lam: DeformationParams, case: str) -> dict:
    """Published nonzero values sigma(x2, b) and sigma(x1, b), keyed by (row, b)."""
    N, q = br.N, br.q
    l1, l2, l12, l112, l122 = lam.as_tuple()
    x2, x1 = (1, 0, 0), (0, 0, 1)
    if case == ATYPICAL:
        out = {
            (x2, (2, 0, 0)): l2,
            (x2, (1, 2, 0)): (q - q * q) * l2 * l112,
            (x2, (1, 1, 2)): (q - q * q) * l2 * l1,
            (x2, (0, 2, 1)): 3 * q * q * l2 * l1,
            (x1, (2, 0, 0)): l122,
            (x1, (0, 1, 0)): l112,
            (x1, (0, 0, 2)): l1,
            (x1, (1, 2, 0)): (q - q * q) * l112 * l122 + l12,
            (x1, (1, 1, 2)): (q - q * q) * l1 * l122,
            (x1, (0, 2, 1)): 3 * q * q * l1 * l122,
        }
    else:
        out = {
            (x2, (N - 1, 0, 0)): l2,
            (x1, (0, 0, N - 1)): l1,
            (x1, (1, N - 1, 0)): l12,
        }
        for m in range(1, N):
            out[(x2, (m - 1, N - m, m))] = (
                -((1 - q ** (N - 1)) ** (N - m)) * br.q21 ** ((N + m - 1) * (N - m) // 2) * l1 * l2
            )
    return out
