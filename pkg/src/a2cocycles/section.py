"""Sections gamma: B_q -> E_lambda, the coaction of E_lambda and the
hypotheses H1/H2 under which the general section formula is a comodule map.

A :class:`LiftSetting` fixes the algebra B^ that surjects onto both B_q and
E_lambda: the pre-Nichols algebra in the generic case, and T(V) when the
quantum Serre relations are deformed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from a2cocycles.algebra import (
    CLEFT,
    FREE,
    AlgebraElement,
    AlgebraError,
    Context,
    DeformationParams,
    RealizationConstraints,
    Braiding,
    _acc,
    cleft,
    free,
    lift_word_expansion,
    mono_degree,
    nichols,
    pre_nichols,
)
from a2cocycles.coproduct import (
    TensorElement,
    _delta_closed_terms,
    _delta_word,
    coproduct_coeff,
)
from a2cocycles.scalar import Cyclotomic

GENERIC = "generic"
ATYPICAL = "atypical"


class LiftSetting:
    """B^ together with pi_B, pi_E, the lift iota and the coproduct of B^."""

    def __init__(self, br: Braiding, lam: DeformationParams, case: str | None = None,
                 flags: RealizationConstraints | None = None):
        case = case or (GENERIC if lam.is_generic() else ATYPICAL)
        if case == GENERIC and not lam.is_generic():
            raise AlgebraError("the generic case needs lambda112 = lambda122 = 0")
        if case == ATYPICAL and not br.is_atypical_shape():
            raise AlgebraError("the atypical case needs N = 3 and q12 = q21")
        self.case = case
        self.braiding = br
        self.params = lam
        self.flags = flags or RealizationConstraints()
        self.E = cleft(br, lam, self.flags)
        self.B = nichols(br)
        self.hat = free(br) if case == ATYPICAL else pre_nichols(br)
        self.N = br.N
        self._pe: dict = {}
        self._pb: dict = {}
        self._eps_t2: dict = {}
        self._rho: dict = {}
        self._rdelta: dict = {}

    def __repr__(self):
        return f"LiftSetting({self.case}, {self.braiding!r}, lambda={self.params})"

    # maps on basis keys of B^ -------------------------------------------
    def lift(self, b) -> AlgebraElement:
        """iota(b): the monomial itself in B^ (expanded into words in T(V))."""
        if self.hat.kind == FREE:
            return AlgebraElement(self.hat, lift_word_expansion(self.braiding, b))
        return AlgebraElement(self.hat, {tuple(b): self.braiding.one()})

    def pi_E_key(self, k) -> dict:
        hit = self._pe.get(k)
        if hit is None:
            if self.hat.kind == FREE:
                hit = self.E.word(k).terms
            else:
                hit = self.E.monomial(k).terms
            self._pe[k] = hit
        return hit

    def pi_B_key(self, k) -> dict:
        hit = self._pb.get(k)
        if hit is None:
            if self.hat.kind == FREE:
                hit = self.B.word(k).terms
            else:
                hit = {k: self.braiding.one()} if max(k) < self.N else {}
            self._pb[k] = hit
        return hit

    def pi_E_tau2_key(self, k) -> dict:
        """pi_E(u) - ell(pi_B(u)) for a basis key u of B^."""
        out = dict(self.pi_E_key(k))
        for m, c in self.pi_B_key(k).items():
            _acc(out, m, -c)
        return out

    def eps0_tau2_key(self, k) -> Cyclotomic:
        hit = self._eps_t2.get(k)
        if hit is None:
            hit = self._eps_t2[k] = self.pi_E_tau2_key(k).get((0, 0, 0), self.braiding.zero())
        return hit

    # maps on elements -------------------------------------------------------
    def _apply(self, x: AlgebraElement, f, target: Context) -> AlgebraElement:
        out: dict = {}
        for k, c in x.terms.items():
            for m, v in f(k).items():
                _acc(out, m, c * v)
        return AlgebraElement(target, out)

    def pi_E(self, x: AlgebraElement) -> AlgebraElement:
        return self._apply(x, self.pi_E_key, self.E)

    def pi_B(self, x: AlgebraElement) -> AlgebraElement:
        return self._apply(x, self.pi_B_key, self.B)

    def pi_E_tau2(self, x: AlgebraElement) -> AlgebraElement:
        return self._apply(x, self.pi_E_tau2_key, self.E)

    def ell(self, b: AlgebraElement) -> AlgebraElement:
        """The linear map sending x-monomials to the same y-monomials."""
        return AlgebraElement(self.E, dict(b.terms))

    def iota(self, b: AlgebraElement) -> AlgebraElement:
        out = AlgebraElement(self.hat)
        for m, c in b.terms.items():
            out = out + self.lift(m).scale(c)
        return out

    def delta_hat_terms(self, k) -> dict:
        """Coproduct of a basis key of B^."""
        if self.hat.kind == FREE:
            return _delta_word(self.braiding, k)
        return dict(_delta_closed_terms(self.braiding, k))

    def delta_hat(self, x: AlgebraElement) -> TensorElement:
        out: dict = {}
        for k, c in x.terms.items():
            for kk, v in self.delta_hat_terms(k).items():
                _acc(out, kk, c * v)
        return TensorElement(self.hat, self.hat, out)

    def reduced_delta_lift(self, b) -> TensorElement:
        """Reduced coproduct of iota(b) in B^ (x) B^."""
        b = tuple(b)
        hit = self._rdelta.get(b)
        if hit is None:
            x = self.lift(b)
            one = self.hat.one()
            hit = self.delta_hat(x) - TensorElement.pure(x, one) - TensorElement.pure(one, x)
            self._rdelta[b] = hit
        return hit

    def tensor_E_B(self, t: TensorElement, left) -> TensorElement:
        """(left (x) pi_B) t where ``left`` maps basis keys of B^ to dicts."""
        return t.map_legs(left, self.pi_B_key, self.E, self.B)


def tau_split(setting: LiftSetting, x: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """(tau1(x), tau2(x)) with tau1 = iota o pi_B and tau2 = id - tau1."""
    if not x.ctx.same_algebra(setting.hat):
        raise AlgebraError("tau_split expects an element of the lifting algebra")
    t1 = setting.iota(setting.pi_B(x))
    return t1, x - t1


def coaction_rho(setting: LiftSetting, e: AlgebraElement) -> TensorElement:
    """rho(e) = (pi_E (x) pi_B) Delta(iota(m)) summed over the monomials m of e."""
    if e.ctx.kind != CLEFT:
        raise AlgebraError("coaction_rho expects an element of E_lambda")
    out: dict = {}
    for m, c in e.terms.items():
        for k, v in _rho_mono(setting, m).items():
            _acc(out, k, c * v)
    return TensorElement(setting.E, setting.B, out)


def _rho_mono(setting: LiftSetting, m) -> dict:
    hit = setting._rho.get(m)
    if hit is None:
        t = setting.delta_hat(setting.lift(m))
        hit = setting._rho[m] = setting.tensor_E_B(t, setting.pi_E_key).terms
    return hit


def _t2_tensor(setting: LiftSetting, b) -> TensorElement:
    """(pi_E tau2 (x) pi_B) of the reduced coproduct of iota(b)."""
    return setting.tensor_E_B(setting.reduced_delta_lift(b), setting.pi_E_tau2_key)


def check_H1(setting: LiftSetting, b) -> bool:
    """((eps0 (x) ell) rho (x) id) T = T for T = (pi_E tau2 (x) pi_B) reduced-Delta(iota b)."""
    t = _t2_tensor(setting, tuple(b))
    unit = (0, 0, 0)
    lhs: dict = {}
    for (e, v), c in t.terms.items():
        for (e1, w), d in _rho_mono(setting, e).items():
            if e1 == unit:
                _acc(lhs, (w, v), c * d)
    return lhs == t.terms


def check_H2(setting: LiftSetting, b) -> bool:
    """sum eps0(pi_E tau2 u) (pi_E tau2 (x) pi_B) reduced-Delta(iota pi_B v) = 0."""
    out: dict = {}
    for (u, v), c in setting.reduced_delta_lift(tuple(b)).terms.items():
        e = setting.eps0_tau2_key(u)
        if e.is_zero():
            continue
        for m, d in setting.pi_B_key(v).items():
            for k, x in _t2_tensor(setting, m).terms.items():
                _acc(out, k, c * e * d * x)
    return not out


def section_general(setting: LiftSetting, b) -> AlgebraElement:
    """omega(b) = ell(b) - (eps0 (x) ell)(pi_E tau2 (x) pi_B) reduced-Delta(iota b)."""
    b = tuple(b)
    out = {b: setting.braiding.one()}
    for (u, v), c in setting.reduced_delta_lift(b).terms.items():
        e = setting.eps0_tau2_key(u)
        if e.is_zero():
            continue
        for m, d in setting.pi_B_key(v).items():
            _acc(out, m, -(c * e * d))
    return AlgebraElement(setting.E, out)


def section_generic_closed(setting: LiftSetting, b) -> AlgebraElement:
    """Closed section formula when the quantum Serre relations hold."""
    br = setting.braiding
    N = br.N
    n2, n12, n1 = b
    E = setting.E
    out = E.monomial(b)
    if n12 + n1 < N:
        return out
    l1 = setting.params.lam1
    for k in range(n12 + 1):
        m = N - k
        if m > n1 or n2 + k >= N:
            continue
        c = coproduct_coeff(br, b, 0, k, 0, m)
        out = out - E.monomial((n2 + k, n12 - k, n1 - m), l1 * c)
    return out


def section_atypical_closed(setting: LiftSetting, b) -> AlgebraElement:
    """Closed section formula for N = 3 with deformed quantum Serre relations."""
    br = setting.braiding
    if not br.is_atypical_shape():
        raise AlgebraError("section_atypical_closed needs N = 3 and q12 = q21")
    q = br.q
    p = setting.params
    l1, l112 = p.lam1, p.lam112
    E = setting.E
    d = q * q - q  # q^2 - q

    def y(m, c=1):
        return E.monomial(m, c)

    b = tuple(b)
    table = {
        (0, 2, 0): y((0, 2, 0)) - y((1, 0, 0), d * l112),
        (0, 2, 1): y((0, 2, 1)) + y((2, 0, 0), 3 * q * q * l1) - y((1, 0, 1), d * l112),
        (0, 1, 2): y((0, 1, 2)) - y((1, 0, 0), d * l1),
        (1, 2, 0): y((1, 2, 0)) - y((2, 0, 0), d * l112),
        (1, 1, 2): y((1, 1, 2)) - y((2, 0, 0), d * l1),
        (1, 2, 1): y((1, 2, 1)) - y((2, 0, 1), d * l112),
        (0, 2, 2): y((0, 2, 2)) - y((2, 0, 1), 3 * q * l1) + y((1, 1, 0), d * l1) - y((1, 0, 2), d * l112),
        (1, 2, 2): y((1, 2, 2)) + y((2, 1, 0), d * l1) - y((2, 0, 2), d * l112),
    }
    if b in table:
        return table[b]
    return y(b)


def weight_class(setting: LiftSetting, m) -> tuple:
    """Character class of a monomial modulo the characters the lambdas kill."""
    mod = setting.flags.weight_modulus or setting.N
    d1, d2 = mono_degree(m)
    if setting.case == ATYPICAL:
        return ((d1 + d2) % mod,)
    return (d1 % mod, d2 % mod)


@dataclass
class SectionMap:
    case: str
    params: DeformationParams
    values: dict
    verified: bool = True
    failures: list = field(default_factory=list)

    def __call__(self, b) -> AlgebraElement:
        return self.values[tuple(b)]

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        """gamma extended linearly to Nichols elements."""
        out: dict = {}
        for m, c in x.terms.items():
            for k, v in self.values[m].terms.items():
                _acc(out, k, c * v)
        ctx = next(iter(self.values.values())).ctx
        return AlgebraElement(ctx, out)

    def to_json(self) -> list:
        return [{"basis": list(b), "image": self.values[b].to_json()} for b in sorted(self.values)]


def build_section(setting: LiftSetting, method: str = "general", check: bool = True) -> SectionMap:
    """gamma on every Nichols basis monomial.

    ``method`` is ``general`` (the H1/H2 construction, flagged unverified when
    a hypothesis fails) or ``closed``.
    """
    values = {}
    failures = []
    for b in setting.B.basis():
        if method == "general":
            values[b] = section_general(setting, b)
            if check and not (check_H1(setting, b) and check_H2(setting, b)):
                failures.append(b)
        elif method == "closed":
            if setting.case == ATYPICAL:
                values[b] = section_atypical_closed(setting, b)
            else:
                values[b] = section_generic_closed(setting, b)
        else:
            raise ValueError(f"unknown section method {method!r}")
    return SectionMap(setting.case, setting.params, values, verified=not failures, failures=failures)


def verify_comodule(setting: LiftSetting, gamma: SectionMap) -> bool:
    """rho(gamma(b)) = (gamma (x) id) Delta(b) and eps0(gamma(b)) = eps(b) for all b."""
    from a2cocycles.coproduct import _delta_nichols_terms

    br = setting.braiding
    for b in setting.B.basis():
        g = gamma(b)
        if g.coeff((0, 0, 0)) != (1 if b == (0, 0, 0) else 0):
            return False
        lhs = coaction_rho(setting, g)
        rhs: dict = {}
        for (u, v), c in _delta_nichols_terms(br, b).items():
            for m, d in gamma(u).terms.items():
                _acc(rhs, (m, v), c * d)
        if lhs.terms != rhs:
            return False
    return True


def check_weights(setting: LiftSetting, gamma: SectionMap) -> bool:
    """Every summand of gamma(b) carries the character class of b."""
    for b, g in gamma.values.items():
        w = weight_class(setting, b)
        if any(weight_class(setting, m) != w for m in g.terms):
            return False
    return True
