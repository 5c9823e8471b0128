"""Binary polynomial arithmetic and factorization of x^n - 1 over F2.

Same representation convention as z4poly: tuples of bits, ascending
degree, no trailing zeros, () for the zero polynomial.  Only what the
Z4 layer needs lives here: ring ops, gcd/xgcd, and Berlekamp
factorization of the squarefree polynomial x^n - 1 (n odd).
"""

from __future__ import annotations

from .errors import BothZero, EvenLength, InternalCheckFailed

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def canon(coeffs) -> Poly:
    out = [c % 2 for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return canon(out)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] ^= x & y
    return canon(out)


def xn_plus_1(n: int) -> Poly:
    """x^n + 1, which equals x^n - 1 over F2."""
    return canon([1] + [0] * (n - 1) + [1])


def polydivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i]:
            q[i - db] = 1
            for j, c in enumerate(b):
                rem[i - db + j] ^= c
    return canon(q), canon(rem)


def polymod(a: Poly, b: Poly) -> Poly:
    return polydivmod(a, b)[1]


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; not both arguments may be zero."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, polymod(a, b)
    return a  # nonzero over F2 is automatically monic


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = polydivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, mul(q, s1))
        t0, t1 = t1, add(t0, mul(q, t1))
    return r0, s0, t0


def mulmod(a: Poly, b: Poly, m: Poly) -> Poly:
    return polymod(mul(a, b), m)


def _left_nullspace(rows: list[Poly], d: int) -> list[Poly]:
    """Basis of {v : sum_i v_i * rows[i] = 0} with rows padded to length d.

    One linear constraint per column; solved by reduced row echelon form
    over F2 with free variables set one at a time.
    """
    constraints = [[rows[i][j] if j < len(rows[i]) else 0 for i in range(d)]
                   for j in range(d)]
    pivots: list[int] = []
    reduced: list[list[int]] = []
    for row in constraints:
        row = row[:]
        for pc, pr in zip(pivots, reduced):
            if row[pc]:
                row = [a ^ b for a, b in zip(row, pr)]
        lead = next((i for i, c in enumerate(row) if c), None)
        if lead is None:
            continue
        for idx, pr in enumerate(reduced):
            if pr[lead]:
                reduced[idx] = [a ^ b for a, b in zip(pr, row)]
        pivots.append(lead)
        reduced.append(row)
    pivot_set = set(pivots)
    basis = []
    for free in range(d):
        if free in pivot_set:
            continue
        v = [0] * d
        v[free] = 1
        for pc, pr in zip(pivots, reduced):
            if pr[free]:
                v[pc] = 1
        basis.append(canon(v))
    return basis


def factor_cyclic(n: int) -> frozenset[Poly]:
    """Distinct monic irreducible factors of x^n - 1 over F2.

    n odd makes x^n - 1 squarefree, so plain Berlekamp splitting applies:
    the nullity of the Frobenius-minus-identity map counts the factors,
    and gcds against Berlekamp subalgebra elements separate them.
    """
    if n % 2 == 0:
        raise EvenLength(f"n must be odd, got {n}")
    f = xn_plus_1(n)
    if n == 1:
        return frozenset({f})
    d = n
    # rows[i] = x^(2i) mod f
    rows: list[Poly] = []
    cur: Poly = ONE
    xsq = polymod((0, 0, 1), f)
    for _ in range(d):
        rows.append(cur)
        cur = mulmod(cur, xsq, f)
    # Q - I, acting on coefficient row vectors
    qmi = []
    for i in range(d):
        row = list(rows[i]) + [0] * (d - len(rows[i]))
        row[i] ^= 1
        qmi.append(canon(row))
    basis = _left_nullspace(qmi, d)
    k = len(basis)
    factors: list[Poly] = [f]
    for v in basis:
        if len(factors) == k:
            break
        out: list[Poly] = []
        for u in factors:
            if degree(u) <= 1:
                out.append(u)
                continue
            vu = polymod(v, u)
            g0 = gcd(u, vu) if vu else u
            pieces = []
            if g0 != ONE and g0 != u:
                pieces = [g0, polydivmod(u, g0)[0]]
            else:
                g1 = gcd(u, add(vu, ONE))
                if g1 != ONE and g1 != u:
                    pieces = [g1, polydivmod(u, g1)[0]]
            out.extend(pieces if pieces else [u])
        factors = out
    if len(factors) != k:
        raise InternalCheckFailed(f"Berlekamp split of x^{n}-1 found "
                                  f"{len(factors)} of {k} factors")
    prod = ONE
    for u in factors:
        prod = mul(prod, u)
    if prod != f:
        raise InternalCheckFailed(f"factor product mismatch for x^{n}-1")
    return frozenset(factors)
