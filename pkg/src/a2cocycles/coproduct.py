"""Braided coproducts on T(V), the pre-Nichols algebra and the Nichols algebra.

Tensor legs are graded by letter counts (#x1, #x2); the braided tensor square
multiplies as (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd with chi the
bicharacter of the braiding matrix.
"""

from __future__ import annotations

from functools import lru_cache

from a2cocycles.algebra import (
    FREE,
    AlgebraElement,
    AlgebraError,
    Braiding,
    Context,
    _acc,
    free,
    lift_word_expansion,
    mono_degree,
    nichols,
    pre_nichols,
    project,
    word_degree,
)
from a2cocycles.scalar import Cyclotomic, q_binom


def key_degree(ctx: Context, key) -> tuple[int, int]:
    return word_degree(key) if ctx.kind == FREE else mono_degree(key)


def _unit_key(ctx: Context):
    return () if ctx.kind == FREE else (0, 0, 0)


class TensorElement:
    """Element of A (x) B keyed by pairs of basis keys of the two legs."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left: Context, right: Context, terms: dict | None = None):
        self.left = left
        self.right = right
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def _check(self, other: TensorElement):
        if not (self.left.same_algebra(other.left) and self.right.same_algebra(other.right)):
            raise AlgebraError("tensor legs live in different algebras")

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return TensorElement(self.left, self.right, out)

    def __neg__(self) -> TensorElement:
        return TensorElement(self.left, self.right, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scale(self, c) -> TensorElement:
        c = self.left.braiding.scalar(c)
        return TensorElement(self.left, self.right, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.left.same_algebra(other.left)
            and self.right.same_algebra(other.right)
            and self.terms == other.terms
        )

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __repr__(self):
        return f"TensorElement({self.left.kind}|{self.right.kind}, {len(self.terms)} terms)"

    @classmethod
    def pure(cls, a: AlgebraElement, b: AlgebraElement) -> TensorElement:
        out: dict = {}
        for u, cu in a.terms.items():
            for v, cv in b.terms.items():
                _acc(out, (u, v), cu * cv)
        return cls(a.ctx, b.ctx, out)

    def map_legs(self, fl, fr, left: Context, right: Context) -> TensorElement:
        """Apply linear maps given on basis keys (key -> dict) to each leg."""
        cache_l: dict = {}
        cache_r: dict = {}
        out: dict = {}
        for (u, v), c in self.terms.items():
            lu = cache_l.get(u)
            if lu is None:
                lu = cache_l[u] = fl(u)
            if not lu:
                continue
            rv = cache_r.get(v)
            if rv is None:
                rv = cache_r[v] = fr(v)
            for u2, a in lu.items():
                ca = c * a
                for v2, b in rv.items():
                    _acc(out, (u2, v2), ca * b)
        return TensorElement(left, right, out)

    def project(self, left: Context, right: Context) -> TensorElement:
        """Leg-wise image under the canonical maps into ``left`` and ``right``."""
        lc, rc = self.left, self.right

        def fl(u):
            return project(AlgebraElement(lc, {u: lc.braiding.one()}), left).terms

        def fr(v):
            return project(AlgebraElement(rc, {v: rc.braiding.one()}), right).terms

        return self.map_legs(fl, fr, left, right)

    def counit_left(self) -> AlgebraElement:
        """(eps (x) id) applied to this tensor."""
        unit = _unit_key(self.left)
        out: dict = {}
        for (u, v), c in self.terms.items():
            if u == unit:
                _acc(out, v, c)
        return AlgebraElement(self.right, out)

    def counit_right(self) -> AlgebraElement:
        unit = _unit_key(self.right)
        out: dict = {}
        for (u, v), c in self.terms.items():
            if v == unit:
                _acc(out, u, c)
        return AlgebraElement(self.left, out)

    def to_json(self) -> list:
        name = "word" if self.left.kind == FREE else "monomial"
        return [
            {f"left_{name}": list(u), f"right_{name}": list(v), "coeff": self.terms[(u, v)].to_json()}
            for (u, v) in sorted(self.terms)
        ]


class TripleTensorElement:
    """Element of A (x) A (x) A keyed by basis triples."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict | None = None):
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, TripleTensorElement):
            return NotImplemented
        return self.ctx.same_algebra(other.ctx) and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Product in the braided tensor square of a graded algebra."""
    a._check(b)
    lc, rc = a.left, a.right
    br = lc.braiding
    out: dict = {}
    for (u1, v1), c1 in a.terms.items():
        dv1 = key_degree(rc, v1)
        for (u2, v2), c2 in b.terms.items():
            c = c1 * c2 * br.bichar(dv1, key_degree(lc, u2))
            left = _key_mul(lc, u1, u2)
            right = _key_mul(rc, v1, v2)
            for k1, x in left.items():
                for k2, y in right.items():
                    _acc(out, (k1, k2), c * x * y)
    return TensorElement(lc, rc, out)


def _key_mul(ctx: Context, u, v) -> dict:
    if ctx.kind == FREE:
        return {u + v: ctx.braiding.one()}
    return ctx.mul_monomials(u, v)


# coefficients ---------------------------------------------------------------

def coproduct_coeff(br: Braiding, n, j: int, k: int, l: int, m: int) -> Cyclotomic:
    """C_(j,k,l,m) = B_(j,k,l,m) * Q_(j,k,l,m) for the monomial n = (n2, n12, n1)."""
    return _coproduct_coeff(br, tuple(n), j, k, l, m)


@lru_cache(maxsize=None)
def _coproduct_coeff(br: Braiding, n, j, k, l, m) -> Cyclotomic:
    n2, n12, n1 = n
    q = br.q
    b = q_binom(n2, j, q) * q_binom(n12, k, q) * q_binom(k, l, q) * q_binom(n1, m, q)
    if b.is_zero():
        return b
    e21 = (n2 - j) * (k + m) + m * (n12 - l) + (k - l - 1) * (k - l) // 2
    eq = (n2 - j) * l + m * (n12 - k)
    return b * (1 - q.inverse()) ** (k - l) * br.q21 ** e21 * q ** eq


def index_set(n):
    n2, n12, n1 = n
    for j in range(n2 + 1):
        for k in range(n12 + 1):
            for l in range(k + 1):
                for m in range(n1 + 1):
                    yield j, k, l, m


# coproducts -----------------------------------------------------------------

def delta_closed(br: Braiding, n) -> TensorElement:
    """Coproduct of x2^n2 x12^n12 x1^n1 in the pre-Nichols algebra."""
    ctx = pre_nichols(br)
    return TensorElement(ctx, ctx, dict(_delta_closed_terms(br, tuple(n))))


@lru_cache(maxsize=None)
def _delta_closed_terms(br: Braiding, n) -> tuple:
    n2, n12, n1 = n
    out: dict = {}
    for j, k, l, m in index_set(n):
        c = _coproduct_coeff(br, n, j, k, l, m)
        if c.is_zero():
            continue
        key = ((j, l, k + m - l), (n2 + k - j - l, n12 - k, n1 - m))
        _acc(out, key, c)
    return tuple(out.items())


def delta_free(br: Braiding, w) -> TensorElement:
    """Coproduct on T(V) of a word over {1, 2} or of a free-context element."""
    ctx = free(br)
    if isinstance(w, AlgebraElement):
        if w.ctx.kind != FREE:
            raise AlgebraError("delta_free needs a free-context element")
        out: dict = {}
        for word, c in w.terms.items():
            for k, v in _delta_word(br, word).items():
                _acc(out, k, c * v)
        return TensorElement(ctx, ctx, out)
    return TensorElement(ctx, ctx, dict(_delta_word(br, tuple(w))))


@lru_cache(maxsize=4096)
def _delta_word(br: Braiding, w: tuple) -> dict:
    one = br.one()
    state = {((), ()): one}
    for g in w:
        dg = (1, 0) if g == 1 else (0, 1)
        nxt: dict = {}
        for (u, v), c in state.items():
            _acc(nxt, (u + (g,), v), c * br.bichar(word_degree(v), dg))
            _acc(nxt, (u, v + (g,)), c)
        state = nxt
    return state


def delta_multiplicative(ctx: Context, w) -> TensorElement:
    """Product of (x_i (x) 1 + 1 (x) x_i) over a word, legs normalized in ctx.

    Independent of the closed formula; used as its oracle.
    """
    br = ctx.braiding
    if ctx.kind == FREE:
        return delta_free(br, w)
    one = br.one()
    unit = (0, 0, 0)
    state = {(unit, unit): one}
    for g in w:
        dg = (1, 0) if g == 1 else (0, 1)
        letter = (0, 0, 1) if g == 1 else (1, 0, 0)
        nxt: dict = {}
        for (u, v), c in state.items():
            cl = c * br.bichar(mono_degree(v), dg)
            for u2, x in ctx.mul_monomials(u, letter).items():
                _acc(nxt, (u2, v), cl * x)
            for v2, y in ctx.mul_monomials(v, letter).items():
                _acc(nxt, (u, v2), c * y)
        state = nxt
    return TensorElement(ctx, ctx, state)


def x112_word_expansion(br: Braiding) -> dict:
    """x112 = x1 x12 - q q12 x12 x1 as words over {1, 2}."""
    q, q12 = br.q, br.q12
    return {(1, 1, 2): br.one(), (1, 2, 1): -(q12 + q * q12), (2, 1, 1): q * q12 * q12}


def atypical_extra_coeff(br: Braiding, n, j: int, m: int) -> Cyclotomic:
    """A(j, m) for n = (n2, 2, n1)."""
    n2, _, n1 = n
    q = br.q
    return (
        (1 - q * q)
        * br.q12.inverse()
        * q_binom(n2, j, q)
        * q_binom(n1, m, q)
        * q ** (n2 - j)
        * br.q21 ** ((n2 - j) * (m + 2) + m)
    )


def delta_atypical(br: Braiding, n) -> TensorElement:
    """Coproduct of the lift of x2^n2 x12^n12 x1^n1 to T(V), N = 3, q12 = q21.

    Exact only after projecting the left leg to E_lambda and the right leg to
    the Nichols algebra; both legs are returned as free words.
    """
    n = tuple(n)
    if n[1] > 2:
        raise AlgebraError("delta_atypical only covers n12 <= 2")
    if not br.is_atypical_shape():
        raise AlgebraError("delta_atypical needs N = 3 and q12 = q21")
    ctx = free(br)
    out: dict = {}
    for (u, v), c in _delta_closed_terms(br, n):
        for wu, cu in lift_word_expansion(br, u).items():
            for wv, cv in lift_word_expansion(br, v).items():
                _acc(out, (wu, wv), c * cu * cv)
    if n[1] == 2:
        n2, _, n1 = n
        x112 = x112_word_expansion(br)
        for j in range(n2 + 1):
            for m in range(n1 + 1):
                a = atypical_extra_coeff(br, n, j, m)
                right = (2,) * (n2 - j + 1) + (1,) * (n1 - m)
                for w, c in x112.items():
                    _acc(out, ((2,) * j + w + (1,) * m, right), a * c)
    return TensorElement(ctx, ctx, out)


def coproduct(x: AlgebraElement) -> TensorElement:
    """Coproduct of an element of T(V), the pre-Nichols or the Nichols algebra."""
    ctx = x.ctx
    br = ctx.braiding
    if ctx.kind == FREE:
        return delta_free(br, x)
    if ctx.kind == "prenichols":
        parts = {m: dict(_delta_closed_terms(br, m)) for m in x.terms}
    elif ctx.kind == "nichols":
        parts = {m: _delta_nichols_terms(br, m) for m in x.terms}
    else:
        raise AlgebraError("cleft objects are comodules, not coalgebras")
    out: dict = {}
    for m, c in x.terms.items():
        for k, v in parts[m].items():
            _acc(out, k, c * v)
    return TensorElement(ctx, ctx, out)


def reduced_delta(x: AlgebraElement) -> TensorElement:
    """Delta(x) - x (x) 1 - 1 (x) x."""
    d = coproduct(x)
    one = x.ctx.one()
    return d - TensorElement.pure(x, one) - TensorElement.pure(one, x)


@lru_cache(maxsize=None)
def _delta_nichols_terms(br: Braiding, b) -> dict:
    N = br.N
    return {
        (u, v): c
        for (u, v), c in _delta_closed_terms(br, b)
        if max(u) < N and max(v) < N
    }


def delta_nichols(br: Braiding, b) -> TensorElement:
    b = tuple(b)
    if max(b) >= br.N:
        raise AlgebraError(f"{b} is not a Nichols basis monomial")
    ctx = nichols(br)
    return TensorElement(ctx, ctx, dict(_delta_nichols_terms(br, b)))


def delta_two(br: Braiding, b) -> TripleTensorElement:
    """(Delta (x) id) Delta(b) in the Nichols algebra."""
    out: dict = {}
    for (u, v), c in _delta_nichols_terms(br, tuple(b)).items():
        for (u1, u2), d in _delta_nichols_terms(br, u).items():
            _acc(out, (u1, u2, v), c * d)
    return TripleTensorElement(nichols(br), out)


def delta_two_right(br: Braiding, b) -> TripleTensorElement:
    """(id (x) Delta) Delta(b); equal to delta_two by coassociativity."""
    out: dict = {}
    for (u, v), c in _delta_nichols_terms(br, tuple(b)).items():
        for (v1, v2), d in _delta_nichols_terms(br, v).items():
            _acc(out, (u, v1, v2), c * d)
    return TripleTensorElement(nichols(br), out)


class NicholsHopf:
    """Precomputed structure maps of the Nichols algebra on its PBW basis."""

    def __init__(self, br: Braiding):
        self.braiding = br
        self.ctx = nichols(br)
        self.N = br.N
        self.basis = self.ctx.basis()
        self.unit = (0, 0, 0)
        self.degree = {b: mono_degree(b) for b in self.basis}
        self.delta = {b: _delta_nichols_terms(br, b) for b in self.basis}
        self._delta2: dict = {}
        self._bichar: dict = {}
        # (b', b'') -> [(b, coeff)] with coeff the coefficient of b' (x) b'' in Delta(b)
        self.codelta: dict = {}
        for b, d in self.delta.items():
            for k, c in d.items():
                self.codelta.setdefault(k, []).append((b, c))

    def product(self, a, b) -> dict:
        return self.ctx.mul_monomials(a, b)

    def delta2(self, b) -> dict:
        hit = self._delta2.get(b)
        if hit is None:
            hit = self._delta2[b] = delta_two(self.braiding, b).terms
        return hit

    def bichar(self, a, b) -> Cyclotomic:
        """chi(deg a, deg b) for basis monomials a, b."""
        key = (a, b)
        hit = self._bichar.get(key)
        if hit is None:
            hit = self._bichar[key] = self.braiding.bichar(self.degree[a], self.degree[b])
        return hit


@lru_cache(maxsize=None)
def nichols_hopf(br: Braiding) -> NicholsHopf:
    return NicholsHopf(br)
