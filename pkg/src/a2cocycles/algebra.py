"""PBW rewriting and products for T(V), the distinguished pre-Nichols algebra,
the Nichols algebra of type A2 and its cleft objects E_lambda.

Normal forms are ordered monomials ``y2^a y12^b y1^c`` keyed by the exponent
triple ``(a, b, c)``; free-algebra elements are keyed by words over ``{1, 2}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields
from math import gcd

from a2cocycles.scalar import Cyclotomic, as_cyclotomic, cyc_root, q_binom, q_factorial, q_int

# internal letters, numbered in PBW order x2 < x12 < x1
X2, X12, X1 = 0, 1, 2
_GEN_TO_LETTER = {1: X1, 2: X2}

FREE = "free"
PRENICHOLS = "prenichols"
NICHOLS = "nichols"
CLEFT = "cleft"


class AlgebraError(ValueError):
    pass


class InvalidParameters(AlgebraError):
    pass


def _mono_word(m) -> tuple:
    return (X2,) * m[0] + (X12,) * m[1] + (X1,) * m[2]


def mono_degree(m) -> tuple[int, int]:
    """Multidegree (#x1, #x2) of x2^a x12^b x1^c."""
    return (m[1] + m[2], m[0] + m[1])


def word_degree(w) -> tuple[int, int]:
    return (sum(1 for g in w if g == 1), sum(1 for g in w if g == 2))


def total_degree(m) -> int:
    return m[0] + 2 * m[1] + m[2]


class Braiding:
    """Diagonal braiding of Cartan type A2 with q11 = q22 = q, q12*q21 = 1/q.

    Entries are stored as exponents of zeta_L, L = ``order``.
    """

    def __init__(self, N: int, q_exp: int = 1, q12_exp: int | None = None, order: int | None = None):
        if N < 3:
            raise InvalidParameters("N must be at least 3")
        L = order or N
        if q12_exp is None:
            q12_exp = q_exp
        if L % N:
            raise InvalidParameters(f"field order {L} is not a multiple of N={N}")
        q_exp %= L
        if L // gcd(L, q_exp) != N:
            raise InvalidParameters(f"zeta_{L}^{q_exp} is not a primitive {N}-th root of unity")
        self.N = N
        self.order = L
        self.q_exp = q_exp
        self.q12_exp = q12_exp % L
        self.q21_exp = (-q_exp - q12_exp) % L
        self._exp = {(1, 1): q_exp, (2, 2): q_exp, (1, 2): self.q12_exp, (2, 1): self.q21_exp}

    @classmethod
    def from_values(cls, N: int, q: Cyclotomic, q12: Cyclotomic) -> Braiding:
        L = q.order
        q12 = as_cyclotomic(L, q12)

        def dlog(x):
            for e in range(L):
                if cyc_root(L, e) == x:
                    return e
            raise InvalidParameters(f"{x!r} is not a power of zeta_{L}")

        return cls(N, dlog(q), dlog(q12), order=L)

    @property
    def q(self) -> Cyclotomic:
        return cyc_root(self.order, self.q_exp)

    @property
    def q12(self) -> Cyclotomic:
        return cyc_root(self.order, self.q12_exp)

    @property
    def q21(self) -> Cyclotomic:
        return cyc_root(self.order, self.q21_exp)

    def entry(self, i: int, j: int) -> Cyclotomic:
        return cyc_root(self.order, self._exp[(i, j)])

    def bichar_exp(self, da, db) -> int:
        """Exponent of zeta_L in prod q_ij^(da_i * db_j); degrees are (#x1, #x2)."""
        e = self._exp
        return (
            e[(1, 1)] * da[0] * db[0]
            + e[(1, 2)] * da[0] * db[1]
            + e[(2, 1)] * da[1] * db[0]
            + e[(2, 2)] * da[1] * db[1]
        ) % self.order

    def bichar(self, da, db) -> Cyclotomic:
        return cyc_root(self.order, self.bichar_exp(da, db))

    def is_atypical_shape(self) -> bool:
        return self.N == 3 and self.q12_exp == self.q21_exp

    def scalar(self, value) -> Cyclotomic:
        return as_cyclotomic(self.order, value)

    def zero(self) -> Cyclotomic:
        return cyc_root(self.order, 0) * 0

    def one(self) -> Cyclotomic:
        return cyc_root(self.order, 0)

    def __eq__(self, other):
        return isinstance(other, Braiding) and (self.N, self.order, self.q_exp, self.q12_exp) == (
            other.N,
            other.order,
            other.q_exp,
            other.q12_exp,
        )

    def __hash__(self):
        return hash((self.N, self.order, self.q_exp, self.q12_exp))

    def __repr__(self):
        return f"Braiding(N={self.N}, q_exp={self.q_exp}, q12_exp={self.q12_exp}, order={self.order})"

    def to_json(self) -> dict:
        return {"N": self.N, "order": self.order, "q_exp": self.q_exp, "q12_exp": self.q12_exp}


@dataclass(frozen=True)
class RealizationConstraints:
    """Which characters of the YD-realization are trivial; gates the lambdas."""

    chi1_N_trivial: bool = True
    chi2_N_trivial: bool = True
    chi1chi2_N_trivial: bool = True
    chi1sq_chi2_trivial: bool = True
    chi1_chi2sq_trivial: bool = True
    weight_modulus: int | None = None


@dataclass(frozen=True)
class DeformationParams:
    lam1: Cyclotomic
    lam2: Cyclotomic
    lam12: Cyclotomic
    lam112: Cyclotomic
    lam122: Cyclotomic

    @classmethod
    def from_values(cls, L: int, values) -> DeformationParams:
        values = list(values)
        if len(values) == 3:
            values += [0, 0]
        if len(values) != 5:
            raise InvalidParameters("lambda needs 5 entries (l1, l2, l12, l112, l122)")
        return cls(*(as_cyclotomic(L, v) for v in values))

    @classmethod
    def zero(cls, L: int) -> DeformationParams:
        return cls.from_values(L, [0] * 5)

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def is_generic(self) -> bool:
        return self.lam112.is_zero() and self.lam122.is_zero()

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.as_tuple())

    def to_json(self) -> list:
        return [x.to_json() for x in self.as_tuple()]

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.as_tuple()) + ")"


def validate_params(br: Braiding, lam: DeformationParams, flags: RealizationConstraints | None = None) -> None:
    """Reject lambda that no cleft object of the given braiding can carry."""
    flags = flags or RealizationConstraints()
    N = br.N
    if not lam.is_generic():
        if N > 3:
            raise InvalidParameters("lambda112 = lambda122 = 0 is forced when N > 3")
        if br.q12_exp != br.q21_exp:
            raise InvalidParameters("lambda112 = lambda122 = 0 is forced when q12 != q21")
    gates = [
        (lam.lam1, flags.chi1_N_trivial, "lambda1", "chi1^N"),
        (lam.lam2, flags.chi2_N_trivial, "lambda2", "chi2^N"),
        (lam.lam12, flags.chi1chi2_N_trivial, "lambda12", "(chi1 chi2)^N"),
        (lam.lam112, flags.chi1sq_chi2_trivial, "lambda112", "chi1^2 chi2"),
        (lam.lam122, flags.chi1_chi2sq_trivial, "lambda122", "chi1 chi2^2"),
    ]
    for value, ok, name, chi in gates:
        if not value.is_zero() and not ok:
            raise InvalidParameters(f"{name} != 0 requires {chi} = eps")
    # chi_i^N = eps forces q_ji^N = 1; without it the power relations are inconsistent
    if any(not x.is_zero() for x in (lam.lam1, lam.lam2, lam.lam12)):
        if (br.q12_exp * N) % br.order or (br.q21_exp * N) % br.order:
            raise InvalidParameters("lambda1, lambda2, lambda12 must vanish unless q12^N = q21^N = 1")


class Context:
    """One of the four algebras; owns the rewriting caches for its rule set."""

    def __init__(self, kind: str, braiding: Braiding, params: DeformationParams | None = None):
        if kind not in (FREE, PRENICHOLS, NICHOLS, CLEFT):
            raise AlgebraError(f"unknown context {kind!r}")
        if kind == CLEFT and params is None:
            raise AlgebraError("a cleft context needs deformation parameters")
        self.kind = kind
        self.braiding = braiding
        self.params = params if kind == CLEFT else None
        self.N = braiding.N
        br = braiding
        self._q12 = br.q12
        self._qq12 = br.q * br.q12
        zero = br.zero()
        if kind == CLEFT:
            p = params
            self._mu = (p.lam112, p.lam122)
            self._nu = (p.lam2, p.lam12, p.lam1)
        elif kind == NICHOLS:
            self._mu = (zero, zero)
            self._nu = (zero, zero, zero)
        else:
            self._mu = (zero, zero)
            self._nu = None
        self._nf: dict[tuple, dict] = {}
        self._prod: dict[tuple, dict] = {}

    def __repr__(self):
        extra = f", lambda={self.params}" if self.params is not None else ""
        return f"Context({self.kind}, {self.braiding!r}{extra})"

    def same_algebra(self, other: Context) -> bool:
        return (
            self is other
            or (self.kind == other.kind and self.braiding == other.braiding and self.params == other.params)
        )

    @property
    def bounded(self) -> bool:
        return self._nu is not None

    def one(self) -> AlgebraElement:
        key = () if self.kind == FREE else (0, 0, 0)
        return AlgebraElement(self, {key: self.braiding.one()})

    def monomial(self, m, coeff=1) -> AlgebraElement:
        """The element y2^a y12^b y1^c (with power relations applied)."""
        if self.kind == FREE:
            raise AlgebraError("free context elements are keyed by words")
        c = self.braiding.scalar(coeff)
        return AlgebraElement(self, {k: v * c for k, v in self.nf_word(_mono_word(m)).items()})

    def word(self, w, coeff=1) -> AlgebraElement:
        """Image of a word over {1, 2} in this algebra."""
        w = tuple(w)
        c = self.braiding.scalar(coeff)
        if self.kind == FREE:
            return AlgebraElement(self, {w: c})
        nf = self.nf_word(tuple(_GEN_TO_LETTER[g] for g in w))
        return AlgebraElement(self, {k: v * c for k, v in nf.items()})

    def basis(self) -> list[tuple[int, int, int]]:
        if not self.bounded:
            raise AlgebraError(f"{self.kind} context has an infinite basis")
        N = self.N
        return [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]

    # rewriting ----------------------------------------------------------
    def find_redexes(self, w: tuple) -> list[tuple[int, str]]:
        """All rule applications available in the internal word w."""
        out = []
        N = self.N
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                out.append((i, "swap"))
        if self._nu is not None:
            run = 1
            for i in range(1, len(w) + 1):
                if i < len(w) and w[i] == w[i - 1]:
                    run += 1
                    continue
                if run >= N:
                    for start in range(i - run, i - N + 1):
                        out.append((start, "power"))
                run = 1
        out.sort()
        return out

    def apply_rule(self, w: tuple, i: int, rule: str) -> list[tuple[Cyclotomic, tuple]]:
        if rule == "power":
            letter = w[i]
            return [(self._nu[letter], w[:i] + w[i + self.N:])]
        a, b = w[i], w[i + 1]
        head, tail = w[:i], w[i + 2:]
        if (a, b) == (X1, X2):
            return [(self._q12, head + (X2, X1) + tail), (self.braiding.one(), head + (X12,) + tail)]
        if (a, b) == (X1, X12):
            return [(self._qq12, head + (X12, X1) + tail), (self._mu[0], head + tail)]
        if (a, b) == (X12, X2):
            return [(self._qq12, head + (X2, X12) + tail), (self._mu[1], head + tail)]
        raise AlgebraError(f"no rule at position {i} of {w}")

    def _first_redex(self, w: tuple):
        N = self.N
        run = 1
        for i in range(len(w)):
            if i + 1 < len(w) and w[i] > w[i + 1]:
                # a power redex starting earlier takes precedence
                if self._nu is not None and run >= N:
                    return (i - run + 1, "power")
                return (i, "swap")
            if i + 1 < len(w) and w[i] == w[i + 1]:
                run += 1
            else:
                if self._nu is not None and run >= N:
                    return (i - run + 1, "power")
                run = 1
        return None

    def nf_word(self, w: tuple) -> dict:
        """Normal form of an internal word, innermost-leftmost, memoized."""
        if self.kind == FREE:
            raise AlgebraError("the free algebra has no rewriting rules")
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        redex = self._first_redex(w)
        if redex is None:
            res = {(w.count(X2), w.count(X12), w.count(X1)): self.braiding.one()}
        else:
            res: dict = {}
            for c, w2 in self.apply_rule(w, *redex):
                if c.is_zero():
                    continue
                for m, v in self._nf_folded(w2).items():
                    _acc(res, m, c * v)
        self._nf[w] = res
        return res

    def _nf_folded(self, w: tuple) -> dict:
        # keep memo keys short: NF(w) = NF(NF(prefix) * last letter)
        if len(w) <= 2 or w in self._nf:
            return self.nf_word(w)
        head = self._nf_folded(w[:-1])
        last = w[-1]
        res: dict = {}
        for m, c in head.items():
            for m2, v in self.nf_word(_mono_word(m) + (last,)).items():
                _acc(res, m2, c * v)
        return res

    def mul_monomials(self, m, n) -> dict:
        key = (m, n)
        hit = self._prod.get(key)
        if hit is not None:
            return hit
        res = {m: self.braiding.one()}
        for letter in _mono_word(n):
            nxt: dict = {}
            for m1, c in res.items():
                for m2, v in self.nf_word(_mono_word(m1) + (letter,)).items():
                    _acc(nxt, m2, c * v)
            res = nxt
        self._prod[key] = res
        return res


def _acc(d: dict, key, value) -> None:
    if value.is_zero():
        return
    cur = d.get(key)
    if cur is None:
        d[key] = value
    else:
        s = cur + value
        if s.is_zero():
            del d[key]
        else:
            d[key] = s


# contexts are shared so that their rewriting caches are reused
_CONTEXTS: dict = {}


def _shared(kind: str, br: Braiding, params: DeformationParams | None = None) -> Context:
    key = (kind, br, params)
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        ctx = _CONTEXTS[key] = Context(kind, br, params)
    return ctx


def free(br: Braiding) -> Context:
    return _shared(FREE, br)


def pre_nichols(br: Braiding) -> Context:
    return _shared(PRENICHOLS, br)


def nichols(br: Braiding) -> Context:
    return _shared(NICHOLS, br)


def cleft(br: Braiding, lam: DeformationParams, flags: RealizationConstraints | None = None) -> Context:
    validate_params(br, lam, flags)
    return _shared(CLEFT, br, lam)


class AlgebraElement:
    """Finite linear combination of basis keys in a given context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict | None = None):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def _check(self, other: AlgebraElement):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(other).__name__}")
        if not self.ctx.same_algebra(other.ctx):
            raise AlgebraError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return AlgebraElement(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> AlgebraElement:
        c = self.ctx.braiding.scalar(c)
        if c.is_zero():
            return AlgebraElement(self.ctx)
        return AlgebraElement(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx.same_algebra(other.ctx) and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, key) -> Cyclotomic:
        v = self.terms.get(key)
        return v if v is not None else self.ctx.braiding.zero()

    def __repr__(self):
        return f"AlgebraElement({self.ctx.kind}, {format_element(self)})"

    def __str__(self):
        return format_element(self)

    def to_json(self) -> list:
        if self.ctx.kind == FREE:
            return [{"word": list(k), "coeff": self.terms[k].to_json()} for k in sorted(self.terms)]
        return [{"monomial": list(k), "coeff": self.terms[k].to_json()} for k in sorted(self.terms)]

    @classmethod
    def from_json(cls, ctx: Context, data: list) -> AlgebraElement:
        key = "word" if ctx.kind == FREE else "monomial"
        return cls(ctx, {tuple(d[key]): Cyclotomic.from_json(d["coeff"]) for d in data})


def mono_name(m, letter: str = "x") -> str:
    if isinstance(m, tuple) and len(m) == 3 and all(isinstance(x, int) for x in m):
        parts = []
        for e, g in zip(m, ("2", "12", "1")):
            if e == 1:
                parts.append(f"{letter}{g}")
            elif e > 1:
                parts.append(f"{letter}{g}^{e}")
        return "*".join(parts) or "1"
    return "*".join(f"{letter}{g}" for g in m) or "1"


def format_element(a: AlgebraElement, letter: str | None = None) -> str:
    if not a.terms:
        return "0"
    letter = letter or ("y" if a.ctx.kind == CLEFT else "x")
    br = a.ctx.braiding
    parts = []
    for k in sorted(a.terms):
        c = a.terms[k]
        name = mono_name(k, letter)
        s = _fmt_coeff(c, br)
        if name == "1":
            parts.append(s)
        elif s == "1":
            parts.append(name)
        elif s == "-1":
            parts.append("-" + name)
        else:
            parts.append(f"({s})*{name}")
    return " + ".join(parts)


def _fmt_coeff(c: Cyclotomic, br: Braiding) -> str:
    from a2cocycles.scalar import format_cyclotomic

    return format_cyclotomic(c, "q", br.q_exp)


# public rewriting API -----------------------------------------------------

def rewrite_word(ctx: Context, w, strategy: str = "leftmost", rng: random.Random | None = None) -> AlgebraElement:
    """Normal form of a word over {1, 2} (generator indices).

    ``strategy`` picks the redex at every step: ``leftmost`` (the default,
    memoized), ``rightmost`` or ``random``; all must agree by confluence.
    """
    w = tuple(w)
    if ctx.kind == FREE:
        return ctx.word(w)
    internal = tuple(_GEN_TO_LETTER[g] for g in w)
    if strategy == "leftmost":
        return AlgebraElement(ctx, dict(ctx.nf_word(internal)))
    rng = rng or random.Random(0)
    pending = {internal: ctx.braiding.one()}
    done: dict = {}
    while pending:
        word, c = pending.popitem()
        redexes = ctx.find_redexes(word)
        if not redexes:
            _acc(done, (word.count(X2), word.count(X12), word.count(X1)), c)
            continue
        if strategy == "rightmost":
            i, rule = redexes[-1]
        elif strategy == "random":
            i, rule = rng.choice(redexes)
        else:
            raise AlgebraError(f"unknown strategy {strategy!r}")
        for c2, w2 in ctx.apply_rule(word, i, rule):
            _acc(pending, w2, c * c2)
    return AlgebraElement(ctx, done)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    ctx = a.ctx
    out: dict = {}
    if ctx.kind == FREE:
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                _acc(out, u + v, cu * cv)
        return AlgebraElement(ctx, out)
    for m, cm in a.terms.items():
        for n, cn in b.terms.items():
            c = cm * cn
            for k, v in ctx.mul_monomials(m, n).items():
                _acc(out, k, c * v)
    return AlgebraElement(ctx, out)


def project(x: AlgebraElement, target: Context) -> AlgebraElement:
    """Image of x under the canonical algebra map into ``target``.

    Words map letter by letter; PBW monomials map via x12 -> y12, which is a
    well-defined algebra map out of the pre-Nichols algebra only when the
    target satisfies the quantum Serre relations.
    """
    src = x.ctx
    if src.same_algebra(target):
        return x
    if target.kind == FREE:
        if src.kind != FREE:
            return lift_to_free(x, target)
        raise AlgebraError("cannot project into the free algebra")
    out: dict = {}
    for k, c in x.terms.items():
        if src.kind == FREE:
            internal = tuple(_GEN_TO_LETTER[g] for g in k)
        else:
            internal = _mono_word(k)
        for m, v in target.nf_word(internal).items():
            _acc(out, m, c * v)
    return AlgebraElement(target, out)


def lift_word_expansion(br: Braiding, m) -> dict:
    """x2^a (x1 x2 - q12 x2 x1)^b x1^c expanded as words over {1, 2}."""
    q12 = br.q12
    one = br.one()
    terms = {(2,) * m[0]: one}
    for _ in range(m[1]):
        nxt: dict = {}
        for w, c in terms.items():
            _acc(nxt, w + (1, 2), c)
            _acc(nxt, w + (2, 1), -(c * q12))
        terms = nxt
    return {w + (1,) * m[2]: c for w, c in terms.items()}


def lift_to_free(x: AlgebraElement, free_ctx: Context) -> AlgebraElement:
    out: dict = {}
    for m, c in x.terms.items():
        for w, v in lift_word_expansion(free_ctx.braiding, m).items():
            _acc(out, w, c * v)
    return AlgebraElement(free_ctx, out)


def eps0(a: AlgebraElement) -> Cyclotomic:
    """Coefficient of the empty monomial."""
    if a.ctx.kind == FREE:
        raise AlgebraError("eps0 needs a PBW normal form")
    return a.coeff((0, 0, 0))


# closed forms ---------------------------------------------------------------

def commute_coeff(br: Braiding, n1: int, s: int, m2: int) -> Cyclotomic:
    """L_(n1, s, m2): coefficient of y2^(m2-s) y12^s y1^(n1-s) in y1^n1 y2^m2."""
    q = br.q
    e = m2 * n1 - s * (s + 1) // 2
    return q_binom(n1, s, q) * q_binom(m2, s, q) * q_factorial(s, q) * (br.q12 ** e)


def _require_generic(ctx: Context, what: str) -> None:
    if ctx.kind == FREE:
        raise AlgebraError(f"{what} needs a PBW context")
    if ctx.kind == CLEFT and not ctx.params.is_generic():
        raise AlgebraError(f"{what} is only valid when lambda112 = lambda122 = 0")


def commute_x1n_x2m(ctx: Context, n1: int, m2: int) -> AlgebraElement:
    _require_generic(ctx, "commute_x1n_x2m")
    br = ctx.braiding
    out = AlgebraElement(ctx)
    for s in range(min(n1, m2) + 1):
        out = out + ctx.monomial((m2 - s, s, n1 - s), commute_coeff(br, n1, s, m2))
    return out


def mul_closed_generic(ctx: Context, n, m) -> AlgebraElement:
    """Product of two PBW monomials from the closed product formula."""
    _require_generic(ctx, "mul_closed_generic")
    br = ctx.braiding
    qq12 = br.q * br.q12
    n2, n12, n1 = n
    m2, m12, m1 = m
    out: dict = {}
    for s in range(min(n1, m2) + 1):
        c = commute_coeff(br, n1, s, m2) * qq12 ** (n12 * (m2 - s) + (n1 - s) * m12)
        for k, v in _power_reduce(ctx, (n2 + m2 - s, n12 + m12 + s, n1 + m1 - s)).items():
            _acc(out, k, c * v)
    return AlgebraElement(ctx, out)


def _power_reduce(ctx: Context, m) -> dict:
    one = ctx.braiding.one()
    if not ctx.bounded:
        return {m: one}
    N = ctx.N
    c = one
    key = []
    for e, nu in zip(m, ctx._nu):
        k, r = divmod(e, N)
        if k:
            c = c * nu ** k
        key.append(r)
    return {tuple(key): c} if not c.is_zero() else {}


def eps0_closed(ctx: Context, n, m) -> Cyclotomic:
    """eps0(y_n y_m) from the five constraint cases of the generic product."""
    _require_generic(ctx, "eps0_closed")
    br = ctx.braiding
    q = br.q
    q12 = br.q12
    qq12 = q * q12
    N = ctx.N
    if ctx.kind == CLEFT:
        l2, l12, l1 = ctx._nu
    elif ctx.kind == NICHOLS:
        l2 = l12 = l1 = br.zero()
    else:
        raise AlgebraError("eps0_closed needs a Nichols or cleft context")
    n2, n12, n1 = n
    m2, m12, m1 = m
    a, b, c = n2 + m2, n12 + m12, n1 + m1

    def lam_pow(x, num):
        return x ** (num // N)

    def qfall(top, count):
        # (top)_q (top-1)_q ... (top-count+1)_q = (top)!/(top-count)!
        out = br.one()
        for i in range(top - count + 1, top + 1):
            out = out * q_int(i, q)
        return out

    if a in (0, N) and b in (0, N) and c in (0, N):
        return (
            q12 ** (n1 * m2)
            * qq12 ** (n12 * m2 + n1 * m12)
            * lam_pow(l2, a) * lam_pow(l12, b) * lam_pow(l1, c)
        )
    if n2 == 0 and m1 == 0 and n1 == m2 and n1 > 0 and b + n1 in (N, 2 * N):
        return q_factorial(n1, q) * q12 ** ((n1 * n1 - n1) // 2) * lam_pow(l12, b + n1)
    if m1 == 0 and 0 < n1 < m2 and a == N + n1 and b + n1 in (N, 2 * N):
        return (
            qfall(m2, n1)
            * q12 ** ((2 * n1 * m2 - n1 * n1 - n1) // 2)
            * qq12 ** (n12 * (m2 - n1))
            * l2 * lam_pow(l12, b + n1)
        )
    if n2 == 0 and 0 < m2 < n1 and c == N + m2 and b + m2 in (N, 2 * N):
        return (
            qfall(n1, m2)
            * q12 ** ((2 * n1 * m2 - m2 * m2 - m2) // 2)
            * qq12 ** (m12 * (n1 - m2))
            * lam_pow(l12, b + m2) * l1
        )
    if a == c and a > N and a + b in (2 * N, 3 * N):
        s = a - N
        return (
            commute_coeff(br, n1, s, m2)
            * qq12 ** (n12 * (m2 - s) + (n1 - s) * m12)
            * l2 * lam_pow(l12, a + b - N) * l1
        )
    return br.zero()
