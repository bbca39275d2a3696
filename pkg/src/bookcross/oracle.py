"""Brute-force ground truth for tiny instances.

Minimizes crossings over every distinct circular layout and every page
assignment.  Restricting layouts to dihedral orbit representatives is sound
because crossing counts are invariant under rotations and reflections of the
circle; this is the oracle's one non-trivial optimization.  Page assignments
are explored by branch and bound over edges in a fixed order (most-crossing
edges first), pruning as soon as the partial count reaches the incumbent,
with page symmetry broken by letting each new page be introduced by the first
edge placed on it.  Incumbents come from the explicit constructions, so they
are genuine drawings, not formula values.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass

from .constructions import balanced_embedding, balanced_parameters, block_cyclic, blowup, riskin_drawing
from .drawings import BookDrawing, CircularLayout, count_crossings, edges_cross
from .enumeration import enumerate_layouts


class OracleLimitError(RuntimeError):
    """Instance or search exceeds the configured oracle limits."""


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 10  # m + n
    max_pages: int = 3
    node_budget: int = 100_000_000


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class OracleRun:
    m: int
    n: int
    k: int
    value: int
    nodes: int
    millis: float

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "nodes": self.nodes,
            "millis": round(self.millis, 3),
        }


def _construction_incumbent(m: int, n: int, k: int) -> tuple[int, BookDrawing]:
    """Best crossing count among the explicit constructions (counted, not assumed)."""
    candidates: list[BookDrawing] = [block_cyclic(m, n, k)]
    if k == 1:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            candidates.append(riskin_drawing(m, n))
    for mm, nn, swap in ((m, n, False), (n, m, True)):
        if mm == k + 1:
            s, t = balanced_parameters(k)
            if nn >= s * t:
                d = blowup(balanced_embedding(k), nn)
                if swap:
                    d = _transpose(d)
                candidates.append(d)
    best = min(candidates, key=lambda d: count_crossings(d).total)
    return count_crossings(best).total, best


def _transpose(d: BookDrawing) -> BookDrawing:
    """Swap the two color classes (K_{m,n} is isomorphic to K_{n,m})."""
    seq = tuple(("w", i) if c == "b" else ("b", i) for c, i in d.layout.seq)
    layout = CircularLayout(seq, d.layout.n, d.layout.m)
    pages = {(j, i): p for (i, j), p in d.pages.items()}
    return BookDrawing(layout, d.k, pages)


def _layout_minimum(layout: CircularLayout, k: int, best: int, budget: int) -> tuple[int, int]:
    """Min crossings over page assignments strictly better than ``best``.

    Returns (new best, nodes used).  Never reports a value >= best, so the
    caller keeps its incumbent unless a strictly better assignment exists.
    """
    m, n = layout.m, layout.n
    edges = [(i, j) for i in range(m) for j in range(n)]
    cross_of: list[int] = []
    for a, e in enumerate(edges):
        mask = 0
        for b, f in enumerate(edges):
            if b != a and edges_cross(layout, e, f):
                mask |= 1 << b
        cross_of.append(mask)
    order = sorted(range(len(edges)), key=lambda a: (-cross_of[a].bit_count(), a))
    remap = {old: new for new, old in enumerate(order)}
    masks = [0] * len(edges)
    for new, old in enumerate(order):
        w = cross_of[old]
        acc = 0
        while w:
            low = w & -w
            acc |= 1 << remap[low.bit_length() - 1]
            w ^= low
        masks[new] = acc

    nedges = len(edges)
    page_bits = [0] * k
    nodes = 0

    def walk(t: int, used: int, partial: int) -> None:
        nonlocal best, nodes
        if partial >= best:
            return
        if t == nedges:
            best = partial
            return
        mask = masks[t]
        bit = 1 << t
        for p in range(min(used + 1, k)):
            nodes += 1
            if nodes > budget:
                raise OracleLimitError("oracle node budget exhausted")
            add = (mask & page_bits[p]).bit_count()
            if partial + add < best:
                page_bits[p] |= bit
                walk(t + 1, max(used, p + 1), partial + add)
                page_bits[p] &= ~bit
        return

    walk(0, 0, 0)
    return best, nodes


def brute_force_run(m: int, n: int, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> OracleRun:
    """Exact minimum crossings over all k-page drawings of K_{m,n}, with stats."""
    if m < 1 or n < 1 or k < 1:
        raise ValueError("m, n, k must be positive")
    if m + n > limits.max_vertices:
        raise OracleLimitError(
            f"m+n = {m + n} exceeds the oracle limit of {limits.max_vertices} vertices"
        )
    if k > limits.max_pages:
        raise OracleLimitError(f"k = {k} exceeds the oracle limit of {limits.max_pages} pages")
    start = time.perf_counter()
    best, _ = _construction_incumbent(m, n, k)
    nodes = 0
    budget = limits.node_budget
    if best > 0:
        for layout in enumerate_layouts(m, n):
            best, used = _layout_minimum(layout, k, best, budget - nodes)
            nodes += used
            if best == 0:
                break
    millis = (time.perf_counter() - start) * 1000.0
    return OracleRun(m, n, k, best, nodes, millis)


def brute_force_nu(m: int, n: int, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact k-page crossing number of K_{m,n} on a tiny instance."""
    return brute_force_run(m, n, k, limits).value


def brute_force_pagenumber(m: int, n: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Smallest k with a crossing-free k-page drawing, within limits."""
    for k in range(1, limits.max_pages + 1):
        if brute_force_nu(m, n, k, limits) == 0:
            return k
    raise OracleLimitError(
        f"pagenumber of K_{{{m},{n}}} exceeds the oracle limit of {limits.max_pages} pages"
    )
