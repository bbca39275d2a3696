#!/usr/bin/env python3
"""Build a book drawing by hand and count its crossings.

A k-page book drawing of K_{m,n} in the circular model: all vertices on a
circle (the spine order), every edge a chord, each edge assigned to one of k
pages.  Two edges cross iff they land on the same page and their chords
interleave.
"""

from bookcross import (
    BookDrawing,
    CircularLayout,
    count_crossings,
    edges_cross,
    from_json,
    page_loads,
    to_json,
)

# --- the chord-interleaving rule ------------------------------------------
lay = CircularLayout.of([("b", 0), ("b", 1), ("w", 0), ("w", 1)])
print("layout:", " ".join(f"{c}{i}" for c, i in lay.seq))
print("(b0,w0) x (b1,w1):", edges_cross(lay, (0, 0), (1, 1)), " <- interleaved")
print("(b0,w0) x (b0,w1):", edges_cross(lay, (0, 0), (0, 1)), " <- shared endpoint")

# --- a full drawing of K_{2,2} on one page vs two pages --------------------
one_page = BookDrawing(lay, 1, {(i, j): 0 for i in range(2) for j in range(2)})
print("\nK_{2,2} on 1 page:", count_crossings(one_page))

two_pages = BookDrawing(lay, 2, {(0, 0): 0, (1, 1): 1, (0, 1): 0, (1, 0): 0})
report = count_crossings(two_pages)
print("K_{2,2} on 2 pages:", report, "-> moving one edge removes the crossing")

# --- loads: how many edges a white vertex puts on each page ----------------
print("\nloads of w0 in the 2-page drawing:", page_loads(two_pages, 0))

# --- drawings serialize to a canonical JSON form ---------------------------
doc = to_json(two_pages)
print("\nJSON form:")
print(doc)
assert from_json(doc) == two_pages
print("round trip: OK")
