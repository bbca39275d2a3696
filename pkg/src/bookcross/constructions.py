"""Explicit drawing families with known exact crossing counts.

Four constructions:

* ``riskin_drawing``   -- 1-page drawing with the black vertices spread evenly
  among the whites; optimal when m divides n.
* ``balanced_embedding`` -- crossing-free k-page embedding of
  K_{k+1, floor((k+1)^2/4)} in which every white vertex has load 2 on exactly
  one page.
* ``blowup``           -- expands each white vertex of a balanced embedding
  into a cluster of copies, giving a drawing of K_{k+1,n} for any n.
* ``block_cyclic``     -- splits both sides into k near-equal groups placed
  alternately on the circle, page i taking the group products with index sum i.

Balanced-embedding edge rules (the six families below) place windows of
consecutive white vertices onto single black vertices.  Every window already
falls inside [0, s*t) for every k, so the modular reduction on white indices
never wraps; block indices reduce mod t and black indices mod s+t.
Correctness is not taken on faith: every constructed embedding is validated
(each edge placed exactly once, zero crossings, balanced loads) and a
violation raises ConstructionError.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .drawings import (
    BookDrawing,
    CircularLayout,
    is_balanced_embedding,
)


class ConstructionError(RuntimeError):
    """A construction produced an invalid drawing (internal bug guard)."""


def riskin_drawing(m: int, n: int) -> BookDrawing:
    """1-page drawing of K_{m,n} with blacks inserted at evenly spaced gaps.

    For m | n the gaps all hold n/m whites and the crossing count equals
    n(m-1)(2mn-3m-n)/12.  For m not dividing n the whites are distributed as
    evenly as possible (lowest-indexed gaps get the extra vertex); this
    extension is flagged with a UserWarning since the optimality guarantee
    only covers the divisible case.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    group, rem = divmod(n, m)
    if rem:
        warnings.warn(
            f"{m} does not divide {n}: distributing whites as evenly as possible; "
            "the closed-form crossing count does not apply",
            stacklevel=2,
        )
    seq: list[tuple[str, int]] = []
    w = 0
    for i in range(m):
        seq.append(("b", i))
        size = group + 1 if i < rem else group
        for _ in range(size):
            seq.append(("w", w))
            w += 1
    layout = CircularLayout(tuple(seq), m, n)
    pages = {(i, j): 0 for i in range(m) for j in range(n)}
    return BookDrawing(layout, 1, pages)


def riskin_crossing_count(m: int, n: int) -> int:
    """Closed-form 1-page count n(m-1)(2mn-3m-n)/12; requires m | n."""
    if n % m:
        raise ValueError("closed form requires m | n")
    value, rem = divmod(n * (m - 1) * (2 * m * n - 3 * m - n), 12)
    if rem:
        raise ArithmeticError(f"1-page count for ({m},{n}) not integral")
    return value


@dataclass(frozen=True)
class BalancedParams:
    """Shape of a balanced k-page embedding: s+t = k+1 blacks, t white blocks
    of s whites each (so s*t = floor((k+1)^2/4) whites in total)."""

    k: int
    s: int
    t: int

    def __post_init__(self):
        if self.t not in (self.s, self.s + 1) or self.s + self.t != self.k + 1:
            raise ValueError(f"inconsistent balanced parameters {self}")

    @classmethod
    def for_pages(cls, k: int) -> "BalancedParams":
        if k < 1:
            raise ValueError("k must be positive")
        s = (k + 1) // 2
        return cls(k, s, (k + 1) - s)

    @property
    def white_count(self) -> int:
        return self.s * self.t

    def white_block(self, i: int) -> range:
        """Indices of block W_i (i taken mod t)."""
        base = (i % self.t) * self.s
        return range(base, base + self.s)


def balanced_parameters(k: int) -> tuple[int, int]:
    """(s, t) with s = floor((k+1)/2), t = ceil((k+1)/2); s*t = floor((k+1)^2/4)."""
    p = BalancedParams.for_pages(k)
    return p.s, p.t


def balanced_embedding(k: int) -> BookDrawing:
    """Balanced k-page embedding of K_{k+1, floor((k+1)^2/4)}.

    Layout: blacks b_0..b_{s+t-1} clockwise with the white block
    W_i = {w_{i s}, ..., w_{i s + s - 1}} inserted between b_{s+i} and
    b_{s+i+1} for i = 0..t-1.  Pages 0..s-1 take edge families I-III, pages
    s..s+t-2 take families IV-VI.  The result is validated before returning.
    """
    params = BalancedParams.for_pages(k)
    s, t = params.s, params.t
    m = s + t  # = k + 1
    st = params.white_count

    seq: list[tuple[str, int]] = [("b", i) for i in range(s + 1)]
    for i in range(t):
        seq.extend(("w", j) for j in params.white_block(i))
        if i < t - 1:
            seq.append(("b", s + i + 1))
    layout = CircularLayout(tuple(seq), m, st)

    pages: dict[tuple[int, int], int] = {}

    def put(bi: int, wj: int, page: int) -> None:
        e = (bi % m, wj % st)
        if e in pages:
            raise ConstructionError(f"edge {e} assigned twice (pages {pages[e]} and {page})")
        pages[e] = page

    def put_block(bi: int, block: int, page: int) -> None:
        for x in params.white_block(block):
            put(bi, x, page)

    for r in range(s):
        # family I: fan of whole blocks onto the late blacks
        for i in range(r + 1, t + 1):
            put_block(s + i, t + r - i, r)
        # family II: sliding windows of s whites onto b_1..b_r
        for i in range(1, r + 1):
            lo = r * s - i * (s - 1)
            for x in range(lo, lo + s):
                put(i, x, r)
        # family III: prefix w_0..w_r onto b_{r+1}
        for x in range(r + 1):
            put(r + 1, x, r)

    for r in range(s, s + t - 1):
        # family IV: whole blocks onto b_s..b_{r+1}
        for i in range(r - s + 2):
            put_block(s + i, r - s - i + 1, r)
        # family V: sliding windows of s whites onto b_{s-1}, b_{s-2}, ...
        for i in range(1, s - r + t - 1):
            lo = (i + r - s + 1) * s - i
            for x in range(lo, lo + s):
                put(s - i, x, r)
        # family VI: suffix onto b_{r-t+1}
        for x in range(st - t + r - s + 1, st):
            put(r - t + 1, x, r)

    if len(pages) != m * st:
        raise ConstructionError(f"{len(pages)} edges assigned, expected {m * st}")
    drawing = BookDrawing(layout, k, pages)
    if not is_balanced_embedding(drawing):
        raise ConstructionError(f"k={k} construction failed the balance/planarity check")
    return drawing


def blowup(base: BookDrawing, n: int) -> BookDrawing:
    """Expand the white side of a balanced k-page embedding to n vertices.

    With ell whites in the base and q = n mod ell, the q lowest-indexed white
    vertices become ((n-q)/ell + 1)-clusters and the rest ((n-q)/ell)-clusters.
    Cluster copies sit contiguously at the source vertex's position (clockwise
    after the original) and inherit its page per edge.  The resulting total is
    q*C((n-q)/ell + 1, 2) + (ell-q)*C((n-q)/ell, 2).
    """
    if not is_balanced_embedding(base):
        raise ValueError("blow-up base must be a balanced embedding")
    ell = base.n
    if n < ell:
        raise ValueError(f"target white count {n} is below the base's {ell}")
    q, size = n % ell, (n - n % ell) // ell
    cluster = [size + 1 if j < q else size for j in range(ell)]
    offset = [0] * ell
    for j in range(1, ell):
        offset[j] = offset[j - 1] + cluster[j - 1]

    seq: list[tuple[str, int]] = []
    for c, idx in base.layout.seq:
        if c == "b":
            seq.append(("b", idx))
        else:
            seq.extend(("w", offset[idx] + copy) for copy in range(cluster[idx]))
    layout = CircularLayout(tuple(seq), base.m, n)

    pages: dict[tuple[int, int], int] = {}
    for (i, j), p in base.pages.items():
        for copy in range(cluster[j]):
            pages[(i, offset[j] + copy)] = p
    return BookDrawing(layout, base.k, pages)


def blowup_crossing_count(k: int, n: int) -> int:
    """Closed-form crossing total of ``blowup(balanced_embedding(k), n)``."""
    s, t = balanced_parameters(k)
    ell = s * t
    if n < ell:
        raise ValueError(f"n must be at least {ell}")
    q = n % ell
    c = (n - q) // ell
    return q * comb(c + 1, 2) + (ell - q) * comb(c, 2)


def block_cyclic(m: int, n: int, k: int) -> BookDrawing:
    """Block-cyclic k-page drawing of K_{m,n}.

    Blacks split into groups B_0..B_{k-1} (the first k-r of size p where
    m = kp + r), whites into W_0..W_{k-1} likewise; the circle reads
    B_0, W_0, B_1, W_1, ..., B_{k-1}, W_{k-1} and page i holds the edges
    B_j x W_t with j + t = i (mod k).  The crossing total is
    (m-r)(n-s)(m-k+r)(n-k+s) / (4 k^2).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    p, r = divmod(m, k)
    q, s = divmod(n, k)
    b_groups: list[range] = []
    w_groups: list[range] = []
    seq: list[tuple[str, int]] = []
    bi = wi = 0
    for g in range(k):
        bsize = p + 1 if g >= k - r else p
        wsize = q + 1 if g >= k - s else q
        b_groups.append(range(bi, bi + bsize))
        w_groups.append(range(wi, wi + wsize))
        seq.extend(("b", i) for i in b_groups[g])
        seq.extend(("w", j) for j in w_groups[g])
        bi += bsize
        wi += wsize
    layout = CircularLayout(tuple(seq), m, n)
    pages: dict[tuple[int, int], int] = {}
    for j in range(k):
        for t in range(k):
            page = (j + t) % k
            for i in b_groups[j]:
                for jj in w_groups[t]:
                    pages[(i, jj)] = page
    return BookDrawing(layout, k, pages)


def block_cyclic_crossing_count(m: int, n: int, k: int) -> int:
    """Closed-form crossing total of ``block_cyclic(m, n, k)``."""
    if k < 1:
        raise ValueError("k must be positive")
    r = m % k
    s = n % k
    value, rem = divmod((m - r) * (n - s) * (m - k + r) * (n - k + s), 4 * k * k)
    if rem:
        raise ArithmeticError(f"block-cyclic count for ({m},{n},{k}) not integral")
    return value
