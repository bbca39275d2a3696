#!/usr/bin/env python3
"""Render drawings to SVG, one circle per page.

Writes a small gallery into demos/out/.  Black vertices are filled discs,
white vertices are open circles; every panel repeats the same spine order
and is annotated with its crossing count.
"""

import os

from bookcross import balanced_embedding, block_cyclic, blowup, render_svg, riskin_drawing

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

gallery = {
    "balanced_k5_K69.svg": balanced_embedding(5),
    "blowup_K45_3pages.svg": blowup(balanced_embedding(3), 5),
    "block_cyclic_K45_3pages.svg": block_cyclic(4, 5, 3),
    "riskin_K36_1page.svg": riskin_drawing(3, 6),
}

for name, drawing in gallery.items():
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(drawing))
    print(f"wrote {path}  (K_{{{drawing.m},{drawing.n}}}, {drawing.k} pages)")

print("\nopen the files in a browser; identical inputs always render byte-identically")
