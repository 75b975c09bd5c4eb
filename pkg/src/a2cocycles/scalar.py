"""Exact arithmetic in cyclotomic fields Q(zeta_L) and q-combinatorics."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from a2cocycles import _kernel


class ScalarError(ArithmeticError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # integer polynomials, coefficient lists low-to-high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num), "inexact division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the L-th cyclotomic polynomial."""
    if L < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """Reduction data for Q(zeta_L); one shared instance per order."""

    _cache: dict[int, CyclotomicField] = {}

    def __init__(self, L: int):
        self.order = L
        phi = cyclotomic_polynomial(L)
        d = len(phi) - 1
        self.degree = d
        # canonical coordinates of zeta^k for k = 0 .. max(L, 2d) - 1
        top = max(L, 2 * d)
        powers: list[tuple[int, ...]] = []
        cur = [1] + [0] * (d - 1) if d > 0 else []
        for _ in range(top):
            powers.append(tuple(cur))
            # multiply by zeta and reduce with the monic relation
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for t in range(d):
                    cur[t] -= lead * phi[t]
        self.powers = tuple(powers)
        self.red = tuple(powers[d:2 * d - 1])
        self.zero = (0,) * d
        self.one = powers[0]

    @classmethod
    def get(cls, L: int) -> CyclotomicField:
        fld = cls._cache.get(L)
        if fld is None:
            fld = cls._cache[L] = cls(L)
        return fld

    def __repr__(self):
        return f"CyclotomicField({self.order})"


class Cyclotomic:
    """An element of Q(zeta_L) in canonical reduced coordinates.

    ``num[i] / den`` is the coefficient of ``zeta_L**i`` for ``i < phi(L)``.
    Instances are immutable and hashable.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, num: tuple, den: int = 1, _normalized: bool = False):
        if not _normalized:
            num, den = _kernel.normalize(tuple(int(x) for x in num), int(den))
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def from_rational(cls, L: int, value) -> Cyclotomic:
        fld = CyclotomicField.get(L)
        value = Fraction(value)
        num = (value.numerator,) + (0,) * (fld.degree - 1)
        return cls(fld, num, value.denominator, _normalized=True)

    @classmethod
    def from_coeffs(cls, L: int, coeffs) -> Cyclotomic:
        fld = CyclotomicField.get(L)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != fld.degree:
            raise ValueError(f"expected {fld.degree} coefficients for order {L}, got {len(coeffs)}")
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        return cls(fld, tuple(int(c * den) for c in coeffs), den)

    @classmethod
    def from_power_sum(cls, L: int, coeffs) -> Cyclotomic:
        """Build sum(coeffs[k] * zeta_L**k) for any number of powers."""
        fld = CyclotomicField.get(L)
        out = cls(fld, fld.zero, 1, _normalized=True)
        for k, c in enumerate(coeffs):
            if c:
                out = out + cyc_root(L, k) * c
        return out

    @property
    def order(self) -> int:
        return self.field.order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    # coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is self.field:
                return self, other
            M = _lcm(self.order, other.order)
            return self.embed(M), other.embed(M)
        if isinstance(other, (int, Rational)):
            return self, Cyclotomic.from_rational(self.order, other)
        return None, None

    def embed(self, M: int) -> Cyclotomic:
        """Image under Q(zeta_L) -> Q(zeta_M), zeta_L -> zeta_M**(M/L)."""
        L = self.order
        if M == L:
            return self
        if M % L:
            raise ValueError(f"cannot embed order {L} into order {M}")
        step = M // L
        out = Cyclotomic(CyclotomicField.get(M), CyclotomicField.get(M).zero, 1, _normalized=True)
        for i, c in enumerate(self.num):
            if c:
                out = out + cyc_root(M, i * step) * Fraction(c, self.den)
        return out

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n, d = _kernel.add(a.num, a.den, b.num, b.den)
        return Cyclotomic(a.field, n, d, _normalized=True)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n, d = _kernel.sub(a.num, a.den, b.num, b.den)
        return Cyclotomic(a.field, n, d, _normalized=True)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-x for x in self.num), self.den, _normalized=True)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field_zero()
            n, d = _kernel.normalize(tuple(x * other for x in self.num), self.den)
            return Cyclotomic(self.field, n, d, _normalized=True)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        n, d = _kernel.mul(a.num, a.den, b.num, b.den, a.field.red)
        return Cyclotomic(a.field, n, d, _normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        d = self.field.degree
        # columns: coordinates of self * zeta^j; solve M x = e_0
        cols = []
        for j in range(d):
            col = self * Cyclotomic(self.field, self.field.powers[j], 1, _normalized=True)
            cols.append(col.coeffs)
        rows = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if rows[r][c] != 0)
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [x / piv for x in rows[c]]
            for r in range(d):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return Cyclotomic.from_coeffs(self.order, [rows[i][d] for i in range(d)])

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field_one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def field_zero(self) -> Cyclotomic:
        return Cyclotomic(self.field, self.field.zero, 1, _normalized=True)

    def field_one(self) -> Cyclotomic:
        return Cyclotomic(self.field, self.field.one, 1, _normalized=True)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is self.field:
                return self.den == other.den and self.num == other.num
            a, b = self._coerce(other)
            return a.den == b.den and a.num == b.num
        if isinstance(other, (int, Rational)):
            return not any(self.num[1:]) and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.order, self.num, self.den))
        return self._hash

    # output -------------------------------------------------------------
    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_cyclotomic(self)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        return cls.from_coeffs(int(data["order"]), [Fraction(s) for s in data["coeffs"]])


def cyc_root(L: int, e: int) -> Cyclotomic:
    """zeta_L ** e in canonical form."""
    if L < 1:
        raise ValueError("order must be positive")
    fld = CyclotomicField.get(L)
    return Cyclotomic(fld, fld.powers[e % L], 1, _normalized=True)


def rational(L: int, value) -> Cyclotomic:
    return Cyclotomic.from_rational(L, value)


def as_cyclotomic(L: int, value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value if value.order == L else value.embed(L)
    return Cyclotomic.from_rational(L, value)


# pretty printing ----------------------------------------------------------

def power_lift(x: Cyclotomic) -> list[Fraction]:
    """Sparse coefficients c_0..c_{L-1} with x = sum c_k zeta^k.

    For prime L the relation 1 + zeta + ... + zeta^(L-1) = 0 is used to pick
    the representative with the fewest non-zero terms (ties keep the
    canonical one), so e.g. -3 - 3*zeta prints as 3*zeta^2.
    """
    L = x.order
    base = list(x.coeffs) + [Fraction(0)] * (L - len(x.coeffs))
    if x.field.degree != L - 1:
        return base
    best = base
    best_nz = sum(1 for c in base if c)
    for shift in set(base):
        if not shift:
            continue
        cand = [c - shift for c in base]
        nz = sum(1 for c in cand if c)
        if nz < best_nz:
            best, best_nz = cand, nz
    return best


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_cyclotomic(x: Cyclotomic, var: str = "q", var_exp: int = 1) -> str:
    """Render x as a polynomial in ``var = zeta_L**var_exp``.

    When var_exp is invertible mod L the powers are rewritten in terms of var,
    otherwise ``z`` (the primitive root itself) is used.
    """
    L = x.order
    lift = power_lift(x)
    if gcd(var_exp, L) != 1:
        var, inv = "z", 1
    else:
        inv = pow(var_exp, -1, L) if L > 1 else 0
    terms: dict[int, Fraction] = {}
    for k, c in enumerate(lift):
        if c:
            e = (k * inv) % L if L > 1 else 0
            terms[e] = terms.get(e, Fraction(0)) + c
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _fmt_frac(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_frac(a)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# q-combinatorics ----------------------------------------------------------

def _one_like(q):
    if isinstance(q, Cyclotomic):
        return q.field_one()
    return q ** 0 if not isinstance(q, (int, Fraction)) else 1


def q_int(n: int, q):
    """(n)_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    one = _one_like(q)
    total = one * 0
    p = one
    for _ in range(n):
        total = total + p
        p = p * q
    return total


def q_factorial(n: int, q):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = _one_like(q)
    for i in range(1, n + 1):
        out = out * q_int(i, q)
    return out


@lru_cache(maxsize=4096)
def _pascal_row(n: int, q) -> tuple:
    one = _one_like(q)
    if n == 0:
        return (one,)
    prev = _pascal_row(n - 1, q)
    row = [one]
    qk = one
    for k in range(1, n):
        qk = qk * q
        row.append(qk * prev[k] + prev[k - 1])
    row.append(one)
    return tuple(row)


def q_binom(n: int, k: int, q):
    """Gaussian binomial by the Pascal recursion (safe at roots of unity)."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"q_binom needs 0 <= k <= n, got n={n}, k={k}")
    return _pascal_row(n, q)[k]
