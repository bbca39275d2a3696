"""Shared reference implementations (kept independent of the fast paths)."""

import random

from bookcross.drawings import BookDrawing, CircularLayout, edges_cross


def pairwise_crossing_total(d: BookDrawing) -> int:
    """O(E^2) reference count straight from the pairwise predicate."""
    edges = sorted(d.pages)
    total = 0
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            e, f = edges[a], edges[b]
            if d.pages[e] == d.pages[f] and edges_cross(d.layout, e, f):
                total += 1
    return total


def random_layout(rng: random.Random, m: int, n: int) -> CircularLayout:
    seq = [("b", i) for i in range(m)] + [("w", j) for j in range(n)]
    rng.shuffle(seq)
    return CircularLayout(tuple(seq), m, n)


def random_drawing(rng: random.Random, m: int, n: int, k: int) -> BookDrawing:
    layout = random_layout(rng, m, n)
    pages = {(i, j): rng.randrange(k) for i in range(m) for j in range(n)}
    return BookDrawing(layout, k, pages)
