"""Conflict graphs of 1-page layouts and exact k-colorability decisions.

The conflict graph of a circular layout has one vertex per edge of K_{m,n}
(vertex index i*n + j for the edge joining black i to white j); two vertices
are adjacent iff the edges cross when drawn on a single page.  A layout
extends to a crossing-free k-page drawing iff its conflict graph is
k-colorable (colors = pages), so "no layout is k-colorable" certifies that
every k-page drawing of K_{m,n} has a crossing.

Colorability is decided by exhaustive DSATUR-ordered backtracking with two
sound symmetry reductions: the vertices of one clique are pre-colored
0, 1, 2, ... and new color classes are only introduced in first-use order.
At desk scale (<= 91 vertices) this is exact, so no spectral or SDP lower
bound machinery is needed; a clique bound does the cheap pruning.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .drawings import BookDrawing, CircularLayout
from .enumeration import enumerate_layouts, layout_from_string

DEFAULT_NODE_BUDGET = 10**9

COLORABLE = "colorable"
NOT_COLORABLE = "not_colorable"
BUDGET_EXCEEDED = "budget_exceeded"

PROVEN = "proven"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConflictGraph:
    """Crossing graph on the m*n edges of K_{m,n} for one layout."""

    m: int
    n: int
    adj: tuple[int, ...]  # bitmask of neighbors per vertex

    @property
    def vertex_count(self) -> int:
        return self.m * self.n

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.vertex_count):
            w = self.adj[u] >> (u + 1)
            base = u + 1
            while w:
                low = w & -w
                yield (u, base + low.bit_length() - 1)
                w ^= low

    def is_proper(self, colors: Sequence[int]) -> bool:
        return all(colors[u] != colors[v] for u, v in self.edges())


def conflict_graph(layout: CircularLayout) -> ConflictGraph:
    """Build the conflict graph of a layout (vectorized interleaving test)."""
    m, n = layout.m, layout.n
    bpos = np.asarray(layout.black_positions, dtype=np.int64)
    wpos = np.asarray(layout.white_positions, dtype=np.int64)
    # vertex v = i*n + j; chord endpoints normalized to lo < hi
    x = np.repeat(bpos, n)
    y = np.tile(wpos, m)
    lo = np.minimum(x, y)
    hi = np.maximum(x, y)
    half = (lo[:, None] < lo) & (lo < hi[:, None]) & (hi[:, None] < hi)
    cross = half | half.T
    masks = []
    for row in cross:
        mask = 0
        for v in np.flatnonzero(row):
            mask |= 1 << int(v)
        masks.append(mask)
    return ConflictGraph(m, n, tuple(masks))


# ---------------------------------------------------------------------------
# Cliques
# ---------------------------------------------------------------------------

EXACT_CLIQUE_LIMIT = 30


def _greedy_clique(g: ConflictGraph) -> list[int]:
    nvert = g.vertex_count
    order = sorted(range(nvert), key=lambda v: (-g.degree(v), v))
    best: list[int] = []
    for seed in order:
        clique = [seed]
        cand = g.adj[seed]
        while cand:
            pick = -1
            pick_deg = -1
            w = cand
            while w:
                low = w & -w
                v = low.bit_length() - 1
                d = (g.adj[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
                w ^= low
            clique.append(pick)
            cand &= g.adj[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _exact_max_clique(g: ConflictGraph) -> list[int]:
    best = _greedy_clique(g)
    adj = g.adj

    def expand(stack: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(stack) > len(best):
                best = stack.copy()
            return
        while cand:
            if len(stack) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            stack.append(v)
            expand(stack, cand & adj[v])
            stack.pop()
            cand ^= low

    expand([], (1 << g.vertex_count) - 1)
    return best


def find_clique(g: ConflictGraph, exact_limit: int = EXACT_CLIQUE_LIMIT) -> list[int]:
    """A clique of g: the exact maximum up to ``exact_limit`` vertices,
    otherwise the best multi-start greedy extension."""
    if g.vertex_count == 0:
        return []
    if g.vertex_count <= exact_limit:
        return _exact_max_clique(g)
    return _greedy_clique(g)


def clique_lower_bound(g: ConflictGraph) -> int:
    """Size of the clique found by find_clique; always <= chi(g)."""
    return max(1, len(find_clique(g))) if g.vertex_count else 0


# ---------------------------------------------------------------------------
# Exact k-colorability
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColoringResult:
    """Outcome of one colorability search.

    ``status`` is one of COLORABLE (``assignment`` is a verified proper
    coloring), NOT_COLORABLE (search space exhausted) or BUDGET_EXCEEDED
    (never conflated with infeasibility).
    """

    status: str
    assignment: tuple[int, ...] | None
    nodes: int
    millis: float


class _Budget(Exception):
    pass


def is_k_colorable(g: ConflictGraph, k: int, budget: int = DEFAULT_NODE_BUDGET) -> ColoringResult:
    """Exhaustive DSATUR-ordered backtracking k-colorability decision.

    One clique is pre-colored 0,1,2,... and remaining color classes are
    introduced in first-use order; both reductions preserve completeness,
    so NOT_COLORABLE genuinely means no proper k-coloring exists.
    """
    if k < 1:
        raise ValueError("k must be positive")
    start = time.perf_counter()
    nvert = g.vertex_count
    if nvert == 0:
        return ColoringResult(COLORABLE, (), 0, _ms(start))

    clique = find_clique(g)
    if len(clique) > k:
        return ColoringResult(NOT_COLORABLE, None, 0, _ms(start))

    adj = g.adj
    degree = [g.degree(v) for v in range(nvert)]
    color = [-1] * nvert
    sat_mask = [0] * nvert  # colors present among colored neighbors
    sat_count = [[0] * k for _ in range(nvert)]  # colored neighbors per color
    nodes = 0

    def paint(v: int, c: int) -> None:
        color[v] = c
        bit = 1 << c
        w = adj[v]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            sat_count[u][c] += 1
            sat_mask[u] |= bit
            w ^= low

    def unpaint(v: int, c: int) -> None:
        color[v] = -1
        w = adj[v]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            sat_count[u][c] -= 1
            if sat_count[u][c] == 0:
                sat_mask[u] &= ~(1 << c)
            w ^= low

    for c, v in enumerate(clique):
        paint(v, c)
    used = max(len(clique), 1)

    def select() -> int:
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(nvert):
            if color[v] < 0:
                key = (sat_mask[v].bit_count(), degree[v], -v)
                if key > best_key:
                    best_key = key
                    best_v = v
        return best_v

    def extend(remaining: int, used: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        v = select()
        limit = min(used + 1, k)  # one fresh color at most
        allowed = ~sat_mask[v] & ((1 << limit) - 1)
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            nodes += 1
            if nodes > budget:
                raise _Budget
            paint(v, c)
            if extend(remaining - 1, max(used, c + 1)):
                return True
            unpaint(v, c)
            allowed ^= low
        return False

    try:
        ok = extend(nvert - len(clique), used)
    except _Budget:
        return ColoringResult(BUDGET_EXCEEDED, None, nodes, _ms(start))
    if not ok:
        return ColoringResult(NOT_COLORABLE, None, nodes, _ms(start))
    witness = tuple(color)
    if not g.is_proper(witness):
        raise AssertionError("search returned an improper coloring; internal bug")
    return ColoringResult(COLORABLE, witness, nodes, _ms(start))


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


# ---------------------------------------------------------------------------
# DIMACS CNF export and a small DPLL checker
# ---------------------------------------------------------------------------


def export_cnf(g: ConflictGraph, k: int) -> str:
    """Decision CNF: satisfiable iff g is k-colorable.

    Variable of (vertex v, color c) is v*k + c + 1.  One at-least-one clause
    per vertex plus one binary conflict clause per adjacent pair per color;
    at-most-one constraints are unnecessary for the decision variant.
    """
    if k < 1:
        raise ValueError("k must be positive")
    nvert = g.vertex_count
    lines = [f"p cnf {nvert * k} {nvert + g.edge_count * k}"]
    for v in range(nvert):
        lines.append(" ".join(str(v * k + c + 1) for c in range(k)) + " 0")
    for u, v in g.edges():
        for c in range(k):
            lines.append(f"-{u * k + c + 1} -{v * k + c + 1} 0")
    return "\n".join(lines) + "\n"


def coloring_satisfies_cnf(cnf: str, assignment: Sequence[int], k: int) -> bool:
    """Evaluate a color assignment (as x_{v,c} = [color(v) == c]) on a CNF."""
    true_vars = {v * k + assignment[v] + 1 for v in range(len(assignment))}
    for clause in _parse_dimacs(cnf)[1]:
        if not any((lit > 0) == (abs(lit) in true_vars) for lit in clause):
            return False
    return True


def _parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    nvars = 0
    clauses: list[list[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            nvars = int(parts[2])
            continue
        lits = [int(tok) for tok in line.split()]
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if lits:
            clauses.append(lits)
    return nvars, clauses


def solve_dimacs(text: str) -> dict[int, bool] | None:
    """Tiny DPLL (unit propagation + branching) for verification at desk scale.

    Returns a satisfying assignment or None.  Intended for the small
    colorability CNFs this package exports, not as a general SAT solver.
    """
    nvars, clauses = _parse_dimacs(text)
    assign: dict[int, bool] = {}

    def propagate(clauses: list[list[int]], assign: dict[int, bool]) -> list[list[int]] | None:
        changed = True
        while changed:
            changed = False
            next_clauses: list[list[int]] = []
            for clause in clauses:
                live: list[int] = []
                satisfied = False
                for lit in clause:
                    val = assign.get(abs(lit))
                    if val is None:
                        live.append(lit)
                    elif (lit > 0) == val:
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not live:
                    return None
                if len(live) == 1:
                    lit = live[0]
                    assign[abs(lit)] = lit > 0
                    changed = True
                else:
                    next_clauses.append(live)
            clauses = next_clauses
        return clauses

    def search(clauses: list[list[int]], assign: dict[int, bool]) -> dict[int, bool] | None:
        reduced = propagate(clauses, assign)
        if reduced is None:
            return None
        if not reduced:
            return assign
        counts: dict[int, int] = {}
        for clause in reduced:
            for lit in clause:
                counts[abs(lit)] = counts.get(abs(lit), 0) + 1
        var = max(counts, key=lambda v: (counts[v], -v))
        for value in (True, False):
            trial = dict(assign)
            trial[var] = value
            result = search([list(c) for c in reduced], trial)
            if result is not None:
                return result
        return None

    result = search(clauses, assign)
    if result is None:
        return None
    for v in range(1, nvars + 1):
        result.setdefault(v, False)
    return result


# ---------------------------------------------------------------------------
# Whole-pipeline verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayoutLog:
    canonical: str
    verdict: str
    nodes: int
    millis: float

    def to_dict(self) -> dict:
        return {
            "canonical_string": self.canonical,
            "verdict": self.verdict,
            "nodes": self.nodes,
            "millis": round(self.millis, 3),
        }


@dataclass(frozen=True)
class PipelineResult:
    """Outcome of checking every layout of K_{m,n} at page count k.

    ``status``: PROVEN (every conflict graph uncolorable, hence every k-page
    drawing has a crossing), REFUTED (``witness`` is a crossing-free k-page
    drawing built from a colorable layout) or INCONCLUSIVE (some budget ran
    out before a decision).
    """

    m: int
    n: int
    k: int
    status: str
    logs: tuple[LayoutLog, ...]
    witness: BookDrawing | None = None
    unfinished: tuple[str, ...] = ()


def coloring_to_drawing(layout: CircularLayout, colors: Sequence[int], k: int) -> BookDrawing:
    """Interpret a proper conflict-graph coloring as a page assignment."""
    n = layout.n
    pages = {(i, j): colors[i * n + j] for i in range(layout.m) for j in range(n)}
    return BookDrawing(layout, k, pages)


def check_layout(canonical: str, k: int, budget: int = DEFAULT_NODE_BUDGET) -> tuple[LayoutLog, tuple[int, ...] | None]:
    """Colorability verdict for one canonical layout string."""
    layout = layout_from_string(canonical)
    result = is_k_colorable(conflict_graph(layout), k, budget)
    return LayoutLog(canonical, result.status, result.nodes, result.millis), result.assignment


def _check_layout_task(args: tuple[str, int, int]) -> tuple[LayoutLog, tuple[int, ...] | None]:
    return check_layout(*args)


def verify_positive_crossing(
    m: int,
    n: int,
    k: int,
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
    completed: Mapping[str, LayoutLog] | None = None,
) -> PipelineResult:
    """Decide whether every k-page drawing of K_{m,n} has a crossing.

    Iterates all distinct circular layouts; PROVEN iff each conflict graph is
    uncolorable with k colors.  A colorable layout immediately REFUTES (its
    coloring is a page assignment with zero crossings).  ``completed`` maps
    canonical strings to prior logs so long runs can resume; ``jobs`` > 1
    fans layouts out to worker processes (the verdict, a conjunction, does
    not depend on completion order).
    """
    layouts = [lay.to_bitstring() for lay in enumerate_layouts(m, n)]
    done: dict[str, LayoutLog] = dict(completed or {})
    pending = [s for s in layouts if s not in done]

    witness_colors: dict[str, tuple[int, ...]] = {}
    if jobs > 1 and len(pending) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for log, colors in pool.map(
                _check_layout_task, [(s, k, budget) for s in pending], chunksize=1
            ):
                done[log.canonical] = log
                if colors is not None:
                    witness_colors[log.canonical] = colors
    else:
        for s in pending:
            log, colors = check_layout(s, k, budget)
            done[s] = log
            if colors is not None:
                witness_colors[s] = colors

    logs = tuple(done[s] for s in layouts)
    for log in logs:
        if log.verdict == COLORABLE:
            colors = witness_colors.get(log.canonical)
            if colors is None:  # resumed colorable entry: recompute the witness
                _, colors = check_layout(log.canonical, k, budget)
            witness = coloring_to_drawing(layout_from_string(log.canonical), colors, k)
            return PipelineResult(m, n, k, REFUTED, logs, witness=witness)
    unfinished = tuple(log.canonical for log in logs if log.verdict == BUDGET_EXCEEDED)
    if unfinished:
        return PipelineResult(m, n, k, INCONCLUSIVE, logs, unfinished=unfinished)
    return PipelineResult(m, n, k, PROVEN, logs)
