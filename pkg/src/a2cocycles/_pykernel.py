"""Pure-Python cyclotomic coefficient kernels.

Elements of Q(zeta_L) are packed as ``(num, den)`` where ``num`` is a tuple of
``phi(L)`` integers and ``den`` a positive integer with
``gcd(den, *num) == 1``.  ``red`` is the reduction table of the field: row
``k`` holds the canonical coordinates of ``zeta^(phi(L) + k)``.

The compiled twin in ``_ckernel.pyx`` exposes exactly the same functions.
"""

from __future__ import annotations

from math import gcd


def normalize(num, den):
    g = gcd(den, *num)
    if den < 0:
        g = -g
    if g == 1:
        return tuple(num), den
    return tuple(x // g for x in num), den // g


def add(an, ad, bn, bd):
    if ad == bd:
        return normalize([x + y for x, y in zip(an, bn)], ad)
    return normalize([x * bd + y * ad for x, y in zip(an, bn)], ad * bd)


def sub(an, ad, bn, bd):
    if ad == bd:
        return normalize([x - y for x, y in zip(an, bn)], ad)
    return normalize([x * bd - y * ad for x, y in zip(an, bn)], ad * bd)


def mul(an, ad, bn, bd, red):
    d = len(an)
    raw = [0] * (2 * d - 1)
    for i, x in enumerate(an):
        if x:
            for j, y in enumerate(bn):
                if y:
                    raw[i + j] += x * y
    out = raw[:d]
    for k in range(d, 2 * d - 1):
        c = raw[k]
        if c:
            row = red[k - d]
            for t in range(d):
                if row[t]:
                    out[t] += c * row[t]
    return normalize(out, ad * bd)


def dot(pairs, d, red):
    """Sum of products over an iterable of ``((an, ad), (bn, bd))`` pairs."""
    acc_n = (0,) * d
    acc_d = 1
    for (an, ad), (bn, bd) in pairs:
        pn, pd = mul(an, ad, bn, bd, red)
        acc_n, acc_d = add(acc_n, acc_d, pn, pd)
    return acc_n, acc_d
