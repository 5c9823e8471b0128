"""Shared fixtures and independent oracles.

The oracles here are deliberately naive re-implementations (longhand
convolution, exhaustive span enumeration, shift-by-shift inner
products) kept separate from the library paths they check.
"""

from __future__ import annotations

import random
from itertools import product

import pytest

from z4dc import f2poly, z4poly
from z4dc.code import validate
from z4dc.errors import Z4DCError


@pytest.fixture
def rng():
    return random.Random(0xC0DE)


# -- naive polynomial oracles --------------------------------------------


def naive_mul(a, b):
    """Longhand convolution over Z4, independent of z4poly.mul."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % 4
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def naive_mod_cyclic(a, n):
    out = [0] * n
    for i, c in enumerate(a):
        out[i % n] = (out[i % n] + c) % 4
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def all_polys(max_len, alphabet=4):
    """Every coefficient tuple with fewer than max_len entries."""
    for length in range(max_len + 1):
        for coeffs in product(range(alphabet), repeat=length):
            yield tuple(coeffs)


def random_poly(rng, max_deg, alphabet=4):
    return z4poly.canon(rng.randrange(alphabet) for _ in range(max_deg + 1))


# -- exhaustive span oracle ----------------------------------------------


def brute_span(rows, ncols):
    """All Z4-combinations of the rows, as a set of tuples."""
    out = set()
    for coeffs in product(range(4), repeat=len(rows)):
        v = tuple(sum(c * row[k] for c, row in zip(coeffs, rows)) % 4
                  for k in range(ncols))
        out.add(v)
    return out


# -- random code factory ---------------------------------------------------


def divisor_lattice_of(n):
    from z4dc.search import divisor_lattice

    return divisor_lattice(n)


def random_code(rng, r_choices=(1, 3, 5, 7), s_choices=(1, 3, 5, 7),
                max_size=None, free_only=False, max_tries=200):
    """Rejection-sample a valid code from the divisor lattices."""
    for _ in range(max_tries):
        r = rng.choice(r_choices)
        s = rng.choice(s_choices)
        D_r = divisor_lattice_of(r)
        D_s = divisor_lattice_of(s)
        f1 = rng.choice(D_r)
        g1 = f1 if free_only else rng.choice([d for d in D_r
                                              if z4poly.divides(d, f1)])
        f2 = rng.choice(D_s)
        g2 = f2 if free_only else rng.choice([d for d in D_s
                                              if z4poly.divides(d, f2)])
        t1 = z4poly.degree(f1)
        l = random_poly(rng, max(t1 - 1, 0)) if rng.random() < 0.8 else ()
        try:
            c = validate(r, s, f1=f1, g1=g1, l=l, f2=f2, g2=g2)
        except Z4DCError:
            continue
        if max_size is not None:
            from z4dc.code import code_size

            if code_size(c) > max_size:
                continue
        return c
    raise AssertionError("random_code failed to produce a valid code")


def gcd_f2_oracle(a, b):
    """Euclid over F2, independent of f2poly.gcd."""
    a, b = tuple(a), tuple(b)

    def mod(x, y):
        x = list(x)
        while len(x) >= len(y) and any(x):
            while x and x[-1] == 0:
                x.pop()
            if len(x) < len(y):
                break
            shift = len(x) - len(y)
            for i, c in enumerate(y):
                x[shift + i] ^= c
        while x and x[-1] == 0:
            x.pop()
        return tuple(x)

    while b:
        a, b = b, mod(a, b)
    return a
