"""Distinct circular layouts of K_{m,n} up to rotation and reflection.

A circular drawing is determined by the cyclic black/white ordering, so the
distinct drawings are the orbits of binary strings (black = 1, white = 0)
under the dihedral group D_{m+n}.  Orbits are represented by the
lexicographically minimal string over all rotations of the string and of its
reversal.

The enumerator canonicalizes the whole 2**(m+n) value space at once with
vectorized rotate/reflect passes and buckets by popcount; the table is cached
per word length, so scanning every (m, n) with the same m+n costs one pass.
This is ample for desk scale (m+n <= 24) and is deliberately not a general
bracelet-generation algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterator

import numpy as np

from .drawings import CircularLayout

MAX_BITS = 24  # full-space table: 2**24 uint32 entries per array


@dataclass(frozen=True)
class NecklaceClass:
    """One D_{m+n}-orbit: its minimal bitstring and the orbit's size.

    ``orbit_size`` counts the distinct linear strings in the orbit; it always
    divides 2(m+n).
    """

    canonical: str
    orbit_size: int


def canonical_form(s: str) -> str:
    """Lexicographic minimum over all rotations of s and of reversed s."""
    if not s:
        raise ValueError("empty string")
    best = s
    for t in (s, s[::-1]):
        for r in range(len(t)):
            cand = t[r:] + t[:r]
            if cand < best:
                best = cand
    return best


def _popcount32(v: np.ndarray) -> np.ndarray:
    x = v - ((v >> 1) & np.uint32(0x55555555))
    x = (x & np.uint32(0x33333333)) + ((x >> 2) & np.uint32(0x33333333))
    x = (x + (x >> 4)) & np.uint32(0x0F0F0F0F)
    return ((x * np.uint32(0x01010101)) >> 24).astype(np.uint8)


@lru_cache(maxsize=3)
def _canonical_table(nbits: int) -> tuple[np.ndarray, np.ndarray]:
    """(canonical value, popcount) for every nbits-wide value.

    Bit nbits-1 of a value is the string's first character, so numeric order
    on values equals lexicographic order on strings.
    """
    if nbits > MAX_BITS:
        raise ValueError(f"m+n = {nbits} exceeds the supported table size ({MAX_BITS})")
    size = 1 << nbits
    mask = np.uint32(size - 1)
    v = np.arange(size, dtype=np.uint32)
    canon = v.copy()
    # left rotation of the string: s -> s[1:] + s[0]
    r = v.copy()
    for _ in range(nbits - 1):
        r = ((r << np.uint32(1)) & mask) | (r >> np.uint32(nbits - 1))
        np.minimum(canon, r, out=canon)
    rev = np.zeros(size, dtype=np.uint32)
    for i in range(nbits):
        rev = (rev << np.uint32(1)) | ((v >> np.uint32(i)) & np.uint32(1))
    r = rev
    np.minimum(canon, r, out=canon)
    for _ in range(nbits - 1):
        r = ((r << np.uint32(1)) & mask) | (r >> np.uint32(nbits - 1))
        np.minimum(canon, r, out=canon)
    return canon, _popcount32(v)


def necklace_classes(m: int, n: int) -> list[NecklaceClass]:
    """All orbit classes for m blacks and n whites, canonical strings ascending."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    nbits = m + n
    canon, pc = _canonical_table(nbits)
    values, counts = np.unique(canon[pc == m], return_counts=True)
    width = nbits
    return [
        NecklaceClass(format(int(val), f"0{width}b"), int(cnt))
        for val, cnt in zip(values, counts)
    ]


def layout_from_string(s: str) -> CircularLayout:
    """Layout for a black/white pattern; indices assigned clockwise from position 0."""
    seq = []
    bi = wi = 0
    for ch in s:
        if ch == "1":
            seq.append(("b", bi))
            bi += 1
        elif ch == "0":
            seq.append(("w", wi))
            wi += 1
        else:
            raise ValueError(f"pattern must be over '0'/'1', got {ch!r}")
    if bi == 0 or wi == 0:
        raise ValueError("pattern needs at least one black and one white vertex")
    return CircularLayout(tuple(seq), bi, wi)


def enumerate_layouts(m: int, n: int) -> Iterator[CircularLayout]:
    """One layout per dihedral orbit, in canonical (lexicographic) order."""
    for cls in necklace_classes(m, n):
        yield layout_from_string(cls.canonical)


def count_formula(m: int, n: int) -> int:
    """Closed-form number of distinct circular drawings of K_{m,n}.

    Orbit count of D_{m+n} acting on the C(m+n, m) two-colored cyclic
    orderings: the reflection term depends on the parities of m and n, the
    rotation term sums over the subgroup orders o(t) = d / gcd(t, d) with
    d = gcd(m, n).  The (m even, n odd) case is evaluated with the arguments
    swapped; the count is symmetric.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m % 2 == 0 and n % 2 == 1:
        return count_formula(n, m)
    total = m + n
    d = gcd(m, n)
    rotations = 0
    for t in range(d):
        o = d // gcd(t, d)
        rotations += comb(total // o, m // o)
    if m % 2 == 0 and n % 2 == 0:
        reflections = (total // 2) * (
            comb(total // 2, n // 2)
            + comb((total - 2) // 2, m // 2)
            + comb((total - 2) // 2, n // 2)
        )
    elif m % 2 == 1 and n % 2 == 0:
        reflections = total * comb((total - 1) // 2, n // 2)
    else:  # both odd
        reflections = total * comb((total - 2) // 2, (m - 1) // 2)
    value, rem = divmod(reflections + rotations, 2 * total)
    if rem:
        raise ArithmeticError(f"orbit count for ({m},{n}) is not integral; formula bug")
    return value
