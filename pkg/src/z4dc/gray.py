"""Lee metric and Gray map analytics.

Symbol Lee weights over Z4 are 0, 1, 2, 1 for 0, 1, 2, 3; the Gray map
sends 0, 1, 2, 3 to 00, 01, 11, 10 and is distance-preserving from Lee
to Hamming (but not additive).  Minimum Lee distance equals minimum
nonzero Lee weight because codes are Z4-linear, and is certified by
exhaustive enumeration; weight histograms are computed blockwise with
64-bit counters and merge associatively, so sharded runs reproduce the
sequential histogram bit for bit.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random

import numpy as np

from .code import (
    BlockEnumerator,
    DEFAULT_ENUM_CAP,
    DoubleCyclicCode,
    code_size,
    codeword_at,
    contains,
    from_concat,
)
from .errors import DimensionMismatch, EnumerationCapExceeded, ZeroCode

LEE_WEIGHTS = (0, 1, 2, 1)
_GRAY_PAIRS = ((0, 0), (0, 1), (1, 1), (1, 0))
_GRAY_INV = {pair: sym for sym, pair in enumerate(_GRAY_PAIRS)}
_LEE_LUT = np.array(LEE_WEIGHTS, dtype=np.int64)
_GRAY_LUT = np.array(_GRAY_PAIRS, dtype=np.uint8)


def lee_weight_symbol(a: int) -> int:
    return LEE_WEIGHTS[a % 4]


def lee_weight(v) -> int:
    return sum(LEE_WEIGHTS[c % 4] for c in v)


def lee_distance(u, v) -> int:
    if len(u) != len(v):
        raise DimensionMismatch(f"lengths {len(u)} != {len(v)}")
    return sum(LEE_WEIGHTS[(a - b) % 4] for a, b in zip(u, v))


def gray_map(v) -> tuple[int, ...]:
    """Symbolwise substitution, each symbol contributing its pair in order."""
    out = []
    for c in v:
        out.extend(_GRAY_PAIRS[c % 4])
    return tuple(out)


def gray_inverse(bits) -> tuple[int, ...]:
    """The Gray map is a bijection per symbol, so any even-length binary
    word decodes uniquely."""
    if len(bits) % 2:
        raise DimensionMismatch("binary word length must be even")
    return tuple(_GRAY_INV[(bits[2 * i] & 1, bits[2 * i + 1] & 1)]
                 for i in range(len(bits) // 2))


@dataclass(frozen=True)
class LeeEnumerator:
    """Exact map from Lee weight to codeword count."""

    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def min_nonzero_weight(self) -> int:
        keys = [w for w in self.counts if w > 0]
        if not keys:
            raise ZeroCode("the zero code has no nonzero codeword")
        return min(keys)

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def _histogram_range(be: BlockEnumerator, lo: int, hi: int) -> np.ndarray:
    acc = np.zeros(2 * be.ncols + 1, dtype=np.int64)
    for h in range(lo, hi):
        weights = _LEE_LUT[be.block(h)].sum(axis=1)
        acc += np.bincount(weights, minlength=acc.size)
    return acc


def lee_enumerator(c: DoubleCyclicCode, cap: int = DEFAULT_ENUM_CAP,
                   jobs: int = 1) -> LeeEnumerator:
    """Exact Lee weight histogram over all codewords."""
    size = code_size(c)
    if size > cap:
        raise EnumerationCapExceeded(f"code size {size} exceeds cap {cap}")
    be = BlockEnumerator(c)
    if jobs <= 1 or be.nblocks < 2 * jobs:
        total = _histogram_range(be, 0, be.nblocks)
    else:
        bounds = [be.nblocks * i // jobs for i in range(jobs + 1)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda ab: _histogram_range(be, *ab),
                                  zip(bounds, bounds[1:])))
        total = np.zeros(2 * be.ncols + 1, dtype=np.int64)
        for part in parts:
            total += part
    return LeeEnumerator({w: int(n) for w, n in enumerate(total) if n})


def min_lee_distance(c: DoubleCyclicCode, cap: int = DEFAULT_ENUM_CAP,
                     jobs: int = 1) -> int:
    """Minimum Lee weight over nonzero codewords (= minimum distance,
    by linearity over Z4)."""
    return lee_enumerator(c, cap=cap, jobs=jobs).min_nonzero_weight()


@dataclass(frozen=True)
class GrayImageParams:
    """Binary parameters (n, M, d) of the Gray image, plus linearity.

    linear_image is True/False when certified (full closure check for
    images up to 2^16 words, or an explicit violating pair), and None
    when a sampled search found no violation but could not certify
    linearity.  For a nonlinear image, witness holds two image words
    whose XOR is not an image word.
    """

    n: int
    M: int
    d: int | None
    linear_image: bool | None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None


_FULL_CHECK_LIMIT = 1 << 16


def _packed_words(be: BlockEnumerator) -> tuple[list[int], np.ndarray]:
    ints = []
    blocks = []
    for h in range(be.nblocks):
        blk = be.block(h)
        bits = _GRAY_LUT[blk].reshape(blk.shape[0], -1)
        blocks.append(bits)
        packed = np.packbits(bits, axis=1)
        ints.extend(int.from_bytes(row.tobytes(), "big") for row in packed)
    return ints, np.concatenate(blocks, axis=0)


def _span_dimension(words: list[int]) -> int:
    lead: dict[int, int] = {}
    for w in words:
        cur = w
        while cur:
            bl = cur.bit_length()
            if bl in lead:
                cur ^= lead[bl]
            else:
                lead[bl] = cur
                break
    return len(lead)


def gray_image_params(c: DoubleCyclicCode, cap: int = DEFAULT_ENUM_CAP,
                      jobs: int = 1, sample_pairs: int = 512,
                      seed: int = 0) -> GrayImageParams:
    """Report (2(r+s), |C|, min Lee distance, linearity) of the Gray image.

    Nonlinearity is certified only by an explicit XOR witness; linearity
    only by the full closure check (via the F2 span dimension of the
    image, which is exact).  Beyond the full-check limit a seeded pair
    sample hunts for a witness and reports None when it finds nothing.
    """
    M = code_size(c)
    if M > cap:
        raise EnumerationCapExceeded(f"code size {M} exceeds cap {cap}")
    n = 2 * (c.r + c.s)
    if M == 1:
        return GrayImageParams(n, 1, None, True, None)
    d = min_lee_distance(c, cap=cap, jobs=jobs)
    if M <= _FULL_CHECK_LIMIT:
        be = BlockEnumerator(c)
        ints, bits = _packed_words(be)
        if 2 ** _span_dimension(ints) == M:
            return GrayImageParams(n, M, d, True, None)
        word_set = set(ints)
        for i, u in enumerate(ints):
            for j in range(i + 1):
                if (u ^ ints[j]) not in word_set:
                    witness = (tuple(int(b) for b in bits[i]),
                               tuple(int(b) for b in bits[j]))
                    return GrayImageParams(n, M, d, False, witness)
        raise AssertionError("span said nonlinear but no witness exists")
    rng = Random(seed)
    for _ in range(sample_pairs):
        u = codeword_at(c, rng.randrange(M))
        v = codeword_at(c, rng.randrange(M))
        gu, gv = gray_map(u.concat()), gray_map(v.concat())
        x = tuple(a ^ b for a, b in zip(gu, gv))
        if not contains(c, from_concat(gray_inverse(x), c.r, c.s)):
            return GrayImageParams(n, M, d, False, (gu, gv))
    return GrayImageParams(n, M, d, None, None)


def gray_words(c: DoubleCyclicCode, cap: int = DEFAULT_ENUM_CAP):
    """Stream the Gray image, one 0/1 string per codeword, in
    enumeration order."""
    size = code_size(c)
    if size > cap:
        raise EnumerationCapExceeded(f"code size {size} exceeds cap {cap}")
    be = BlockEnumerator(c)
    for h in range(be.nblocks):
        bits = _GRAY_LUT[be.block(h)].reshape(be.block_size, -1)
        for row in bits:
            yield "".join("1" if b else "0" for b in row)
