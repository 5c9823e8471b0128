"""Double cyclic codes of length (r, s) over Z4.

A code is stored as the canonical generator quintuple (f1, g1, l, f2,
g2): the code is generated by (F1|0) and (l|F2) with F1 = f1 + 2*g1 and
F2 = f2 + 2*g2, subject to g1 | f1 | x^r-1 and g2 | f2 | x^s-1.  Absent
generators are encoded by sentinels that make every degree formula
specialize correctly:

  * no left-only generator:  f1 = g1 = x^r - 1   (so F1 = 0 in the ring)
  * no mixed generator:      l = 0, f2 = g2 = x^s - 1

The f/g parts are stored monic; the combined F may carry a unit factor
3 (for example F = 3*f when f = g), which never matters because ideals
are compared by span, not by coefficients.

Codes are immutable after validation; enumeration is a deterministic
mixed-radix counter (S1 digits most significant, then S2, S3, S4, each
coefficient block ascending) whose index space partitions into
contiguous sub-ranges for parallel consumers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import f2poly, linalg, polytext
from .errors import (
    BrokenDivisibilityChain,
    DegenerateGenerators,
    DegreeOverflow,
    DimensionMismatch,
    EnumerationCapExceeded,
    EvenLength,
    InternalCheckFailed,
    MixingConstraintViolation,
    NotMonic,
)
from .z4poly import (
    Poly,
    ZERO,
    add,
    canon,
    degree,
    divides,
    divmod_monic,
    exact_div,
    hensel_lift,
    is_monic,
    mod_cyclic,
    monomial,
    mul,
    mul_mod_cyclic,
    reduce_mod2,
    scale,
    xn_minus_1,
)

DEFAULT_ENUM_CAP = 1 << 26


@dataclass(frozen=True)
class CodeVector:
    """A codeword split into its left (length r) and right (length s) blocks."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def concat(self) -> tuple[int, ...]:
        return self.left + self.right


def vector(left, right) -> CodeVector:
    return CodeVector(tuple(c % 4 for c in left), tuple(c % 4 for c in right))


def from_concat(v, r: int, s: int) -> CodeVector:
    v = tuple(c % 4 for c in v)
    if len(v) != r + s:
        raise DimensionMismatch(f"vector length {len(v)} != r+s = {r + s}")
    return CodeVector(v[:r], v[r:])


def shift_T(v: CodeVector) -> CodeVector:
    """Simultaneous right rotation of both blocks by one position."""
    return CodeVector(v.left[-1:] + v.left[:-1], v.right[-1:] + v.right[:-1])


def tau(v: CodeVector) -> tuple[Poly, Poly]:
    """Coordinates-to-coefficients correspondence."""
    return canon(v.left), canon(v.right)


def tau_inv(pair: tuple[Poly, Poly], r: int, s: int) -> CodeVector:
    p, q = canon(pair[0]), canon(pair[1])
    if degree(p) >= r or degree(q) >= s:
        raise DegreeOverflow(
            f"degrees ({degree(p)}, {degree(q)}) do not fit lengths ({r}, {s})")
    return CodeVector(p + (0,) * (r - len(p)), q + (0,) * (s - len(q)))


def xstar_mul(p: Poly, pair: tuple[Poly, Poly], r: int, s: int) -> tuple[Poly, Poly]:
    """Componentwise polynomial action, reduced mod x^r-1 and x^s-1."""
    return mul_mod_cyclic(p, pair[0], r), mul_mod_cyclic(p, pair[1], s)


@dataclass(frozen=True)
class DoubleCyclicCode:
    r: int
    s: int
    f1: Poly
    g1: Poly
    l: Poly
    f2: Poly
    g2: Poly
    case: str  # "i", "ii" or "iii"

    # -- derived generator data ------------------------------------------

    @property
    def F1(self) -> Poly:
        """f1 + 2*g1 as a plain polynomial (not yet reduced mod x^r-1)."""
        return add(self.f1, scale(2, self.g1))

    @property
    def F2(self) -> Poly:
        return add(self.f2, scale(2, self.g2))

    @property
    def F1_mod(self) -> Poly:
        return mod_cyclic(self.F1, self.r)

    @property
    def F2_mod(self) -> Poly:
        return mod_cyclic(self.F2, self.s)

    @property
    def left_present(self) -> bool:
        return self.F1_mod != ZERO

    @property
    def right_present(self) -> bool:
        return self.F2_mod != ZERO

    @property
    def t1(self) -> int:
        return degree(self.f1)

    @property
    def t2(self) -> int:
        return degree(self.g1)

    @property
    def r1(self) -> int:
        return degree(self.f2)

    @property
    def r2(self) -> int:
        return degree(self.g2)

    @property
    def h1(self) -> Poly:
        return exact_div(xn_minus_1(self.r), self.f1)

    @property
    def h2(self) -> Poly:
        return exact_div(xn_minus_1(self.s), self.f2)

    @property
    def is_free(self) -> bool:
        """Free module test: f = g on both sides of the quintuple."""
        return self.f1 == self.g1 and self.f2 == self.g2


def _ideal_rows(p: Poly, n: int) -> list[tuple[int, ...]]:
    """Coefficient rows of x^i * p mod x^n-1 for i < n (the module span
    of the ideal generated by p in Z4[x]/(x^n-1))."""
    pm = mod_cyclic(p, n)
    if pm == ZERO:
        return []
    rows = []
    cur = list(pm) + [0] * (n - len(pm))
    for _ in range(n):
        rows.append(tuple(cur))
        cur = [cur[-1]] + cur[:-1]
    return rows


@functools.lru_cache(maxsize=256)
def _ideal_howell(p: Poly, n: int) -> linalg.HowellForm:
    rows = _ideal_rows(p, n)
    return linalg.howell(linalg.MatZ4(tuple(rows), n))


def poly_to_vec(p: Poly, n: int) -> tuple[int, ...]:
    p = mod_cyclic(p, n)
    return p + (0,) * (n - len(p))


def ideal_contains(gen: Poly, n: int, w: Poly) -> bool:
    """Membership of w in the ideal (gen) of Z4[x]/(x^n-1)."""
    wm = mod_cyclic(w, n)
    if wm == ZERO:
        return True
    if mod_cyclic(gen, n) == ZERO:
        return False
    return linalg.membership(_ideal_howell(mod_cyclic(gen, n), n), poly_to_vec(wm, n))


def _check_chain(gsmall: Poly, gbig: Poly, modulus: Poly, names: str):
    if not divides(gsmall, gbig):
        raise BrokenDivisibilityChain(f"chain broken: {names.split(' | ')[0]} "
                                      f"does not divide {names.split(' | ')[1]}")
    if not divides(gbig, modulus):
        raise BrokenDivisibilityChain(f"chain broken: {names.split(' | ')[1]} "
                                      f"does not divide {names.split(' | ')[2]}")


def validate(r: int, s: int, f1: Poly | None = None, g1: Poly | None = None,
             l: Poly | None = None, f2: Poly | None = None,
             g2: Poly | None = None) -> DoubleCyclicCode:
    """Check every generator invariant and return the immutable code.

    Absent generators are passed as None (both of f1/g1, or any of
    l/f2/g2); sentinels are substituted internally.  The mixing
    polynomial is degree-normalized against F1 before the constraints
    are checked; an incompatible mixing polynomial is an error rather
    than a silent recanonicalization (canonicalize_ideal is the
    recovery path for non-canonical generating sets).
    """
    for name, n in (("r", r), ("s", s)):
        if not isinstance(n, int) or n < 1 or n % 2 == 0:
            raise EvenLength(f"{name} must be a positive odd integer, got {n!r}")

    if (f1 is None) != (g1 is None):
        raise DegenerateGenerators("f1 and g1 must be supplied together")
    if f1 is None:
        f1 = g1 = xn_minus_1(r)
    if (f2 is None) != (g2 is None):
        raise DegenerateGenerators("f2 and g2 must be supplied together")
    if f2 is None:
        if l is not None and canon(l) != ZERO:
            raise DegenerateGenerators(
                "a mixing polynomial requires a right-block generator")
        f2 = g2 = xn_minus_1(s)
    l = ZERO if l is None else canon(l)
    f1, g1, f2, g2 = canon(f1), canon(g1), canon(f2), canon(g2)

    for name, p in (("f1", f1), ("g1", g1), ("f2", f2), ("g2", g2)):
        if not is_monic(p):
            raise NotMonic(f"{name} must be monic, got {polytext.render(p)!r}")
    _check_chain(g1, f1, xn_minus_1(r), "g1 | f1 | x^r-1")
    _check_chain(g2, f2, xn_minus_1(s), "g2 | f2 | x^s-1")

    F1 = add(f1, scale(2, g1))
    l = divmod_monic(mod_cyclic(l, r), F1)[1]

    F2_mod = mod_cyclic(add(f2, scale(2, g2)), s)
    if F2_mod == ZERO and l != ZERO:
        raise DegenerateGenerators(
            "mixing polynomial with a vanishing right generator: the pair "
            "(l|0) is not canonical; fold it into the left ideal instead")

    # compatibility of the mixing polynomial: ((x^s-1)/g2) * l must lie
    # in the ideal generated by F1 (for an absent left generator this
    # ideal is zero, forcing (x^r-1) | ((x^s-1)/g2) * l)
    w = mod_cyclic(mul(exact_div(xn_minus_1(s), g2), l), r)
    if not ideal_contains(F1, r, w):
        raise MixingConstraintViolation(
            f"((x^s-1)/g2)*l = {polytext.render(w)} mod x^{r}-1 is outside "
            f"the ideal generated by f1+2g1", witness=w)
    # second compatibility condition: 2 * ((x^s-1)/f2) * l must lie in the
    # same ideal.  Together with the first this makes the kernel of the
    # right projection exactly the (F1|0)-generated submodule, which the
    # generating-set size count relies on; it is implied by the first
    # condition when f2 = g2 but independent otherwise.
    w2 = mod_cyclic(scale(2, mul(exact_div(xn_minus_1(s), f2), l)), r)
    if not ideal_contains(F1, r, w2):
        raise MixingConstraintViolation(
            f"2*((x^s-1)/f2)*l = {polytext.render(w2)} mod x^{r}-1 is "
            f"outside the ideal generated by f1+2g1", witness=w2)

    right_present = F2_mod != ZERO
    left_present = mod_cyclic(F1, r) != ZERO
    if left_present and right_present:
        case = "iii"
    elif left_present or not right_present:
        case = "i"
    else:
        case = "ii"
    c = DoubleCyclicCode(r, s, f1, g1, l, f2, g2, case)

    # With both mixing conditions in force the kernel of the right
    # projection is exactly the (F1|0)-submodule, which makes the size
    # formula a theorem; a mismatch here is a bug, not a user error.
    if linalg.span_size(_generator_howell(c)) != code_size(c):
        raise InternalCheckFailed(
            "validated generators span a module of the wrong size")
    return c


def from_spec_dict(d: dict) -> DoubleCyclicCode:
    """Build a code from the JSON spec form (strings or coefficient arrays)."""
    kwargs = {}
    for key in ("f1", "g1", "l", "f2", "g2"):
        if key in d and d[key] is not None:
            kwargs[key] = polytext.from_json(d[key])
    return validate(d["r"], d["s"], **kwargs)


def spec_dict(c: DoubleCyclicCode) -> dict:
    """Canonical JSON echo; absent generators are omitted."""
    out: dict = {"r": c.r, "s": c.s}
    if c.left_present:
        out["f1"] = polytext.render(c.f1)
        out["g1"] = polytext.render(c.g1)
    if c.right_present:
        if c.l != ZERO:
            out["l"] = polytext.render(c.l)
        out["f2"] = polytext.render(c.f2)
        out["g2"] = polytext.render(c.g2)
    return out


def minimal_generating_set(c: DoubleCyclicCode) -> list[tuple[CodeVector, int]]:
    """The S1, S2, S3, S4 rows with their orders (4 or 2), in that order.

    Sizes are r-t1, t1-t2, s-r1 and r1-r2; the sentinel encodings make
    the ranges of absent families empty.
    """
    r, s = c.r, c.s
    out = []
    F1 = (mod_cyclic(c.F1, r), ZERO)
    for i in range(r - c.t1):
        out.append((tau_inv(xstar_mul(monomial(i), F1, r, s), r, s), 4))
    S2 = (mod_cyclic(scale(2, mul(c.h1, c.g1)), r), ZERO)
    for i in range(c.t1 - c.t2):
        out.append((tau_inv(xstar_mul(monomial(i), S2, r, s), r, s), 2))
    S3 = (c.l, mod_cyclic(c.F2, s))
    for i in range(s - c.r1):
        out.append((tau_inv(xstar_mul(monomial(i), S3, r, s), r, s), 4))
    S4 = (mod_cyclic(mul(c.h2, c.l), r), mod_cyclic(scale(2, mul(c.h2, c.g2)), s))
    for i in range(c.r1 - c.r2):
        out.append((tau_inv(xstar_mul(monomial(i), S4, r, s), r, s), 2))
    return out


def generator_matrix(c: DoubleCyclicCode) -> linalg.MatZ4:
    rows = tuple(v.concat() for v, _ in minimal_generating_set(c))
    return linalg.MatZ4(rows, c.r + c.s)


def code_size(c: DoubleCyclicCode) -> int:
    """4^(r+s-t1-r1) * 2^(t1+r1-t2-r2), exact."""
    return 4 ** (c.r + c.s - c.t1 - c.r1) * 2 ** (c.t1 + c.r1 - c.t2 - c.r2)


@functools.lru_cache(maxsize=64)
def _generator_howell(c: DoubleCyclicCode) -> linalg.HowellForm:
    return linalg.howell(generator_matrix(c))


def contains(c: DoubleCyclicCode, v: CodeVector) -> bool:
    """Membership via the cached Howell form of the generator matrix."""
    if len(v.left) != c.r or len(v.right) != c.s:
        raise DimensionMismatch(
            f"vector blocks ({len(v.left)}, {len(v.right)}) != ({c.r}, {c.s})")
    return linalg.membership(_generator_howell(c), v.concat())


# -- codeword enumeration -----------------------------------------------


@functools.lru_cache(maxsize=64)
def enumeration_basis(c: DoubleCyclicCode):
    """Generating rows with their digit radices, in counter order."""
    gens = minimal_generating_set(c)
    rows = tuple(v.concat() for v, _ in gens)
    radices = tuple(order for _, order in gens)
    return rows, radices


def _digits_of(index: int, radices: list[int]) -> list[int]:
    digits = [0] * len(radices)
    for pos in range(len(radices) - 1, -1, -1):
        index, digits[pos] = divmod(index, radices[pos])
    return digits


def codeword_at(c: DoubleCyclicCode, index: int) -> CodeVector:
    """The index-th codeword of the canonical enumeration order."""
    rows, radices = enumeration_basis(c)
    digits = _digits_of(index, radices)
    n = c.r + c.s
    acc = [0] * n
    for d, row in zip(digits, rows):
        if d:
            for k in range(n):
                acc[k] = (acc[k] + d * row[k]) % 4
    return from_concat(acc, c.r, c.s)


def enumerate_codewords(c: DoubleCyclicCode, cap: int = DEFAULT_ENUM_CAP,
                        start: int = 0, stop: int | None = None) -> Iterator[CodeVector]:
    """Stream the codewords for indices [start, stop) in counter order.

    Yields exactly code_size(c) distinct vectors over the full range;
    disjoint sub-ranges may be consumed by parallel workers.
    """
    size = code_size(c)
    if size > cap:
        raise EnumerationCapExceeded(f"code size {size} exceeds cap {cap}")
    if stop is None:
        stop = size
    rows, radices = enumeration_basis(c)
    n = c.r + c.s
    digits = _digits_of(start, radices)
    acc = list(codeword_at(c, start).concat()) if start else [0] * n
    idx = start
    while idx < stop:
        yield CodeVector(tuple(acc[:c.r]), tuple(acc[c.r:]))
        idx += 1
        pos = len(digits) - 1
        while pos >= 0:
            digits[pos] += 1
            row = rows[pos]
            if digits[pos] < radices[pos]:
                for k in range(n):
                    acc[k] = (acc[k] + row[k]) % 4
                break
            digits[pos] = 0
            back = radices[pos] - 1
            for k in range(n):
                acc[k] = (acc[k] - back * row[k]) % 4
            pos -= 1


class BlockEnumerator:
    """Vectorized view of the enumeration order in contiguous blocks.

    Block h holds codewords with indices [h*block_size, (h+1)*block_size):
    the trailing digits are precomputed as a table, the leading digits
    become a per-block offset vector.  Output is bit-identical to the
    scalar enumeration.
    """

    def __init__(self, c: DoubleCyclicCode, max_block: int = 1 << 16):
        rows, radices = enumeration_basis(c)
        n = c.r + c.s
        split = len(radices)
        width = 1
        while split > 0 and width * radices[split - 1] <= max_block:
            width *= radices[split - 1]
            split -= 1
        self.code = c
        self.ncols = n
        self.block_size = width
        self._high = list(zip(rows[:split], radices[:split]))
        self.nblocks = 1
        for _, rad in self._high:
            self.nblocks *= rad
        table = np.zeros((1, n), dtype=np.int8)
        for row, rad in zip(rows[split:], radices[split:]):
            vals = np.arange(rad, dtype=np.int8)[None, :, None]
            rowv = np.asarray(row, dtype=np.int8)[None, None, :]
            table = ((table[:, None, :] + vals * rowv) % 4).reshape(-1, n)
        self._table = table

    def block(self, h: int) -> np.ndarray:
        """(block_size, r+s) array of codewords for block h."""
        offset = np.zeros(self.ncols, dtype=np.int8)
        rem = h
        for row, rad in reversed(self._high):
            rem, d = divmod(rem, rad)
            if d:
                offset = (offset + d * np.asarray(row, dtype=np.int8)) % 4
        return (self._table + offset) % 4


# -- ideal canonicalization and residue code ----------------------------


def canonicalize_ideal(spanning, n: int) -> tuple[Poly, Poly]:
    """Canonical (f, g) with g | f | x^n-1 generating the same ideal.

    The ideal of Z4[x]/(x^n-1) spanned by the given polynomials is
    probed per irreducible residue factor p of x^n-1: the lifted
    cofactor (x^n-1)/p acts as a unit in the p-component and zero
    elsewhere, so two Howell membership tests classify the component as
    full, 2-torsion or zero.  f collects the non-full components, g the
    zero ones; both are Hensel lifts so the chain g | f | x^n-1 holds.
    The zero ideal comes out as the sentinel f = g = x^n-1 and the full
    ring as f = g = 1.
    """
    rows = []
    for w in spanning:
        rows.extend(_ideal_rows(canon(w), n))
    h = linalg.howell(linalg.MatZ4(tuple(rows), n))
    fbar: f2poly.Poly = f2poly.ONE
    gbar: f2poly.Poly = f2poly.ONE
    for p in sorted(f2poly.factor_cyclic(n)):
        cof = hensel_lift(f2poly.polydivmod(f2poly.xn_plus_1(n), p)[0], n)
        vec = poly_to_vec(cof, n)
        if linalg.membership(h, vec):
            continue
        fbar = f2poly.mul(fbar, p)
        if not linalg.membership(h, tuple((2 * x) % 4 for x in vec)):
            gbar = f2poly.mul(gbar, p)
    f = hensel_lift(fbar, n)
    g = hensel_lift(gbar, n)
    rebuilt = _ideal_rows(mod_cyclic(add(f, scale(2, g)), n), n)
    if linalg.howell(linalg.MatZ4(tuple(rebuilt), n)).matrix.rows != h.matrix.rows:
        raise InternalCheckFailed("canonicalized ideal does not reproduce the span")
    return f, g


def _f2_rows_reduce(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Row echelon basis over F2 (vectors as 0/1 tuples)."""
    basis: list[list[int]] = []
    leads: list[int] = []
    for row in rows:
        cur = [c & 1 for c in row]
        for lead, b in zip(leads, basis):
            if cur[lead]:
                cur = [a ^ x for a, x in zip(cur, b)]
        pos = next((i for i, c in enumerate(cur) if c), None)
        if pos is not None:
            leads.append(pos)
            basis.append(cur)
    order = sorted(range(len(leads)), key=lambda i: leads[i])
    return [tuple(basis[i]) for i in order]


@dataclass(frozen=True)
class ResidueCode:
    """The mod-2 image: a binary double cyclic code of the same lengths.

    Stored as residue generators; the generating matrix carries {0,1}
    entries inside a MatZ4 container, with membership and size computed
    over F2.
    """

    r: int
    s: int
    F1bar: f2poly.Poly
    lbar: f2poly.Poly
    F2bar: f2poly.Poly

    def generator_rows(self) -> list[tuple[int, ...]]:
        rows = []
        left = list(self.F1bar) + [0] * (self.r - len(self.F1bar))
        for _ in range(self.r):
            rows.append(tuple(left) + (0,) * self.s)
            left = [left[-1]] + left[:-1]
        lpart = list(self.lbar) + [0] * (self.r - len(self.lbar))
        rpart = list(self.F2bar) + [0] * (self.s - len(self.F2bar))
        for _ in range(self.s):
            rows.append(tuple(lpart) + tuple(rpart))
            lpart = [lpart[-1]] + lpart[:-1]
            rpart = [rpart[-1]] + rpart[:-1]
        return [row for row in rows if any(row)]

    def matrix(self) -> linalg.MatZ4:
        return linalg.MatZ4(tuple(self.generator_rows()), self.r + self.s)

    def size(self) -> int:
        return 2 ** len(_f2_rows_reduce(self.generator_rows()))

    def contains(self, v) -> bool:
        v = tuple(c & 1 for c in v)
        if len(v) != self.r + self.s:
            raise DimensionMismatch(f"vector length {len(v)} != {self.r + self.s}")
        basis = _f2_rows_reduce(self.generator_rows() + [v])
        return len(basis) == len(_f2_rows_reduce(self.generator_rows()))


def residue_code(c: DoubleCyclicCode) -> ResidueCode:
    """The binary double cyclic code of codewords reduced mod 2."""
    F1bar = f2poly.polymod(reduce_mod2(c.F1), f2poly.xn_plus_1(c.r))
    lbar = f2poly.polymod(reduce_mod2(c.l), f2poly.xn_plus_1(c.r))
    F2bar = f2poly.polymod(reduce_mod2(c.F2), f2poly.xn_plus_1(c.s))
    return ResidueCode(c.r, c.s, F1bar, lbar, F2bar)
