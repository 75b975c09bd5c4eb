"""Invariant Hochschild 2-cocycles with trivial coefficients for N = 3 and
q12 = q21 = q, their convolution exponentials, and the exponential/pure
classification of the cocycles sigma_lambda.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from a2cocycles.algebra import AlgebraError, Braiding, DeformationParams, InvalidParameters, _acc, validate_params
from a2cocycles.cocycle import (
    ALPHA_MONOMIALS,
    UNIT,
    Bifunctional,
    CocycleTable,
    Functional,
    alpha_from_params,
    bifunctional_convolve,
    orbit_act,
    sigma_table,
)
from a2cocycles.coproduct import nichols_hopf
from a2cocycles.scalar import Cyclotomic, q_factorial
from a2cocycles.section import ATYPICAL, LiftSetting

# the eight coboundary monomials, in the same order as the alpha coefficients;
# names follow the letter strings used for the b-coefficients
COBOUNDARY_MONOMIALS = ALPHA_MONOMIALS
COBOUNDARY_NAMES = ("212", "221", "211", "121", "221211", "212121", "221212", "121211")
ETA_NAMES = ("1", "2", "12", "112", "122")


def _require_atypical(br: Braiding) -> None:
    if not br.is_atypical_shape():
        raise AlgebraError("Hochschild data is stated for N = 3 and q12 = q21 = q")


def eta_basis(br: Braiding) -> dict[str, Bifunctional]:
    """eta_1, eta_2, eta_12, eta_112, eta_122 keyed by their index names."""
    _require_atypical(br)
    N = br.N
    one = br.one()
    q = br.q
    e1 = {((0, 0, a), (0, 0, N - a)): one for a in range(1, N)}
    e2 = {((a, 0, 0), (N - a, 0, 0)): one for a in range(1, N)}
    e12: dict = {}
    for n12 in range(N):
        for n1 in range(N):
            m12 = N - n12 - n1
            if not 0 <= m12 < N:
                continue
            r, s = (0, n12, n1), (n1, m12, 0)
            if r == UNIT or s == UNIT:
                continue
            e12[(r, s)] = q_factorial(n1, q) * br.q12 ** ((n1 * n1 - n1) // 2)
    e112 = {((0, 0, 2), (1, 0, 0)): one, ((0, 0, 1), (0, 1, 0)): one}
    e122 = {((0, 0, 1), (2, 0, 0)): one, ((0, 1, 0), (1, 0, 0)): one}
    return {
        "1": Bifunctional(br, e1),
        "2": Bifunctional(br, e2),
        "12": Bifunctional(br, e12),
        "112": Bifunctional(br, e112),
        "122": Bifunctional(br, e122),
    }


def beta_coboundary(br: Braiding, b) -> Bifunctional:
    """beta_b(r, s) = -(coefficient of b in rs) for r, s of positive degree."""
    b = tuple(b)
    if b not in COBOUNDARY_MONOMIALS:
        raise AlgebraError(f"{b} does not give an invariant coboundary")
    return coboundary_of(br, {b: br.one()})


def coboundary_of(br: Braiding, f: dict) -> Bifunctional:
    """(r, s) -> -f(rs) on the augmentation ideal, 0 if r or s is 1."""
    hopf = nichols_hopf(br)
    out: dict = {}
    for r in hopf.basis:
        if r == UNIT:
            continue
        for s in hopf.basis:
            if s == UNIT:
                continue
            acc = br.zero()
            for m, c in hopf.product(r, s).items():
                v = f.get(m)
                if v is not None:
                    acc = acc - c * v
            if not acc.is_zero():
                out[(r, s)] = acc
    return Bifunctional(br, out)


def hochschild_defect(eta: Bifunctional) -> list:
    """Triples where eps(a)eta(b,c) - eta(ab,c) + eta(a,bc) - eta(a,b)eps(c) != 0."""
    br = eta.braiding
    hopf = nichols_hopf(br)
    ev = eta.values
    zero = br.zero()

    def ev_prod_left(a, b, c):
        acc = zero
        for m, x in hopf.product(a, b).items():
            v = ev.get((m, c))
            if v is not None:
                acc = acc + x * v
        return acc

    def ev_prod_right(a, b, c):
        acc = zero
        for m, x in hopf.product(b, c).items():
            v = ev.get((a, m))
            if v is not None:
                acc = acc + x * v
        return acc

    bad = []
    for a in hopf.basis:
        for b in hopf.basis:
            for c in hopf.basis:
                val = -ev_prod_left(a, b, c) + ev_prod_right(a, b, c)
                if a == UNIT:
                    val = val + eta(b, c)
                if c == UNIT:
                    val = val - eta(a, b)
                if not val.is_zero():
                    bad.append((a, b, c))
    return bad


def check_hochschild_cocycle(eta: Bifunctional) -> bool:
    return not hochschild_defect(eta)


def solve_linear(rows: list, rhs: list, nvars: int):
    """One solution of rows . x = rhs over the cyclotomic field, or None."""
    if not rows:
        return []
    zero = rhs[0] * 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(aug)) if not aug[i][col].is_zero()), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(not row[-1].is_zero() for row in aug[r:]):
        return None
    x = [zero] * nvars
    for i, col in enumerate(pivots):
        x[col] = aug[i][-1]
    return x


def coboundary_preimage(eta: Bifunctional, support=None):
    """A functional f with eta(r, s) = -f(rs) on the augmentation ideal, or None.

    ``support`` restricts the unknowns (default: every monomial of positive degree).
    """
    br = eta.braiding
    hopf = nichols_hopf(br)
    unknowns = list(support) if support is not None else [b for b in hopf.basis if b != UNIT]
    idx = {b: i for i, b in enumerate(unknowns)}
    zero = br.zero()
    rows, rhs = [], []
    for r in hopf.basis:
        if r == UNIT:
            continue
        for s in hopf.basis:
            if s == UNIT:
                continue
            row = [zero] * len(unknowns)
            outside = False
            for m, c in hopf.product(r, s).items():
                i = idx.get(m)
                if i is None:
                    outside = True
                    continue
                row[i] = row[i] - c
            if outside and support is None:
                raise AlgebraError("unexpected monomial outside the unknowns")
            rows.append(row)
            rhs.append(eta(r, s))
    sol = solve_linear(rows, rhs, len(unknowns))
    if sol is None:
        return None
    return dict(zip(unknowns, sol))


def is_coboundary(eta: Bifunctional) -> bool:
    return coboundary_preimage(eta) is not None


@dataclass
class HochschildCocycle:
    """eta = sum e_j eta_j + sum b_k beta_k (b_k are coefficients of the beta_b)."""

    braiding: Braiding
    e: dict
    beta: dict = field(default_factory=dict)

    @classmethod
    def from_vectors(cls, br: Braiding, e, beta=None) -> HochschildCocycle:
        e = list(e)
        beta = list(beta) if beta is not None else [0] * 8
        if len(e) != 5 or len(beta) != 8:
            raise AlgebraError("need 5 e-coefficients and 8 beta-coefficients")
        return cls(
            br,
            dict(zip(ETA_NAMES, (br.scalar(x) for x in e))),
            dict(zip(COBOUNDARY_NAMES, (br.scalar(x) for x in beta))),
        )

    def e_vector(self) -> list:
        return [self.e.get(k, self.braiding.zero()) for k in ETA_NAMES]

    def beta_vector(self) -> list:
        return [self.beta.get(k, self.braiding.zero()) for k in COBOUNDARY_NAMES]

    def to_bifunctional(self) -> Bifunctional:
        br = self.braiding
        basis = eta_basis(br)
        out = Bifunctional(br)
        for name, c in self.e.items():
            out = out + basis[name].scale(c)
        for name, c in self.beta.items():
            if not br.scalar(c).is_zero():
                b = COBOUNDARY_MONOMIALS[COBOUNDARY_NAMES.index(name)]
                out = out + beta_coboundary(br, b).scale(c)
        return out

    def to_json(self) -> dict:
        return {
            "e": {k: v.to_json() for k, v in zip(ETA_NAMES, self.e_vector())},
            "beta": {k: v.to_json() for k, v in zip(COBOUNDARY_NAMES, self.beta_vector())},
        }


def exponential(eta: Bifunctional | HochschildCocycle, truncation: int = 5) -> Bifunctional:
    """sum_{j <= truncation} eta^{*j} / j!."""
    if isinstance(eta, HochschildCocycle):
        eta = eta.to_bifunctional()
    br = eta.braiding
    total = Bifunctional.counit(br)
    power = Bifunctional.counit(br)
    for j in range(1, truncation + 1):
        power = bifunctional_convolve(power, eta)
        if not power.values:
            break
        total = total + power.scale(Fraction(1, factorial(j)))
    return total


# classification ------------------------------------------------------------------

EXPONENTIAL = "Exponential"
PURE = "Pure"


@dataclass
class PurityVerdict:
    tag: str
    reason: str
    alpha: list | None = None
    eta: HochschildCocycle | None = None
    verified: bool | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.tag, "reason": self.reason}
        if self.alpha is not None:
            out["witness"] = {
                "alpha": dict(zip(COBOUNDARY_NAMES, (a.to_json() for a in self.alpha))),
                "eta": self.eta.to_json(),
                "verified": self.verified,
            }
        return out


def purity_case(br: Braiding, lam: DeformationParams) -> str | None:
    """'a', 'b' or None according to the exponential criterion."""
    l1, l2, l12, l112, l122 = lam.as_tuple()
    q = br.q
    if l112.is_zero() and l122.is_zero():
        if sum(1 for x in (l1, l2, l12) if not x.is_zero()) <= 1:
            return "a"
        return None
    if l112.is_zero() or l122.is_zero():
        return None
    if (
        l1 == l112 * l112 / (3 * l122)
        and l2 == l122 * l122 / (3 * l112)
        and l12 == (q * q - q) * l112 * l122 / 3
    ):
        return "b"
    return None


def witness_construct(br: Braiding, lam: DeformationParams, a221211=0) -> tuple[list, HochschildCocycle]:
    """alpha coefficients and eta with alpha -> sigma_lambda = e^eta."""
    _require_atypical(br)
    case = purity_case(br, lam)
    if case is None:
        raise InvalidParameters("lambda satisfies neither exponential condition")
    l1, l2, l12, l112, l122 = lam.as_tuple()
    q = br.q
    zero = br.zero()
    if case == "a":
        a221 = a211 = a121 = a212 = zero
        a221211 = a212121 = a221212 = a121211 = zero
        e12 = l12
    else:
        a221 = -l122 / 3
        a211 = -l112 / 3
        a212 = (q - 1) * l122 / 3
        a121 = (q - 1) * l112 / 3
        a221211 = br.scalar(a221211)
        a212121 = (1 - q) * l112 * l122 / 9 + q * a221211
        a221212 = (q - q * q) * l122 * l122 / 9 + l122 / l112 * a221211
        a121211 = (q - q * q) * l112 * l112 / 9 + l112 / l122 * a221211
        e12 = l12 + (q - q * q) * l112 * l122 / 3
    d = q * q - q
    b = {
        "212": a212,
        "221": a221,
        "211": a211,
        "121": a121,
        "212121": a212121 - 3 * q * q * l2 * l1 + 3 * a221 * a211 + d * a211 * a212 + q * q * a212 * a121,
        "221211": a221211 + d * l2 * l1 + 3 * q * q * a221 * a211 + q * a221 * a121 + q * a211 * a212,
        "121211": (
            a121211
            + d * (l1 * l122 - l1 * a221 + l112 * a211)
            + 3 * q * q * a211 * a121
            + q * a121 * a121
            + (1 - q) * a211 * a211
        ),
        "221212": a221212 + 3 * l2 * a211 + d * (l2 * l112 + l2 * a121 + a221 * a212) + q * a212 * a212,
    }
    alpha = [a212, a221, a211, a121, a221211, a212121, a221212, a121211]
    eta = HochschildCocycle(br, {"1": l1, "2": l2, "12": e12, "112": l112, "122": l122}, b)
    return alpha, eta


def alpha_functional(br: Braiding, alpha_by_name: list) -> Functional:
    """alpha from coefficients listed in COBOUNDARY_NAMES order."""
    return alpha_from_params(br, alpha_by_name)


def verify_witness(br: Braiding, lam: DeformationParams, alpha: list, eta: HochschildCocycle,
                   table: CocycleTable | None = None) -> bool:
    if table is None:
        table = sigma_table(LiftSetting(br, lam, ATYPICAL))
    lhs = orbit_act(alpha_from_params(br, alpha), table)
    return lhs.values == exponential(eta, 5)


def classify_purity(br: Braiding, lam: DeformationParams, verify: bool = True) -> PurityVerdict:
    _require_atypical(br)
    validate_params(br, lam)
    case = purity_case(br, lam)
    if case is None:
        return PurityVerdict(PURE, "lambda meets neither exponential condition (a) nor (b)")
    alpha, eta = witness_construct(br, lam)
    verified = verify_witness(br, lam, alpha, eta) if verify else None
    reason = {
        "a": "lambda112 = lambda122 = 0 with at most one nonzero power parameter",
        "b": "lambda112*lambda122 != 0 with the balanced power parameters",
    }[case]
    return PurityVerdict(EXPONENTIAL, reason, alpha, eta, verified)


def balanced_beta_family(br: Braiding, eta: HochschildCocycle) -> bool:
    """Shape of beta forced on e^eta for e = (1/3, 1/3, 0, 1, 1).

    Coefficients: b212 = b121 = (q-1)/3, b221 = b211 = -1/3 and
    b221211 = b221212 = b121211 = k, b212121 = q*k for one free scalar k.
    """
    q, b = br.q, eta.beta
    k = b["221211"]
    return (
        b["212"] == b["121"] == (q - 1) / 3
        and b["221"] == b["211"] == br.scalar(Fraction(-1, 3))
        and b["221212"] == b["121211"] == k
        and b["212121"] == q * k
    )
