"""Closed-form bounds and exact values for k-page crossing numbers of K_{m,n}.

Everything here is exact integer or rational arithmetic.  The only irrational
quantity appearing in any formula is k^(7/4); it is bracketed with integer
fourth roots ( k^(7/4) = (k^7)^(1/4) ) and rounded conservatively:

* in ``asymptotic_bounds`` the lower bound's denominator is rounded *up*, so
  the reported lower bound is never overstated;
* in ``nonembeddable_width`` the width is the exact integer ceiling, computed
  by integer comparisons, so the claimed width is never understated.

``consistency_scan`` evaluates every applicable bound over a parameter grid
and *reports* lower>upper violations instead of asserting: the even-k
multiplanar lower bound is implemented verbatim as printed and genuinely
exceeds the exact value at some small n (e.g. k=4, n=12), which the scan is
expected to surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

Number = int | Fraction


@dataclass(frozen=True)
class BoundQuery:
    """Parameter bundle for bound evaluation; derived values are recomputed,
    never caller-supplied."""

    k: int
    m: int
    n: int

    @property
    def ell(self) -> int:
        return (self.k + 1) ** 2 // 4

    @property
    def q(self) -> int:
        return self.n % self.ell

    @property
    def r_mod_k(self) -> int:
        return self.m % self.k

    @property
    def s_mod_k(self) -> int:
        return self.n % self.k


@dataclass(frozen=True)
class BoundValue:
    """A formula evaluation plus whether the formula's validity range covers
    the arguments.

    Invalid values are still reported (for tables), but consistency verdicts
    ignore them.
    """

    value: Number
    valid: bool
    source: str


def zarankiewicz(m: int, n: int) -> int:
    """Z(m,n) = floor(m/2) floor((m-1)/2) floor(n/2) floor((n-1)/2)."""
    return (m // 2) * ((m - 1) // 2) * (n // 2) * ((n - 1) // 2)


def riskin_value(m: int, n: int) -> BoundValue:
    """Exact 1-page crossing number n(m-1)(2mn-3m-n)/12, valid iff m | n."""
    value = Fraction(n * (m - 1) * (2 * m * n - 3 * m - n), 12)
    valid = n % m == 0
    if valid:
        value = int(value)  # always integral in the valid range
    return BoundValue(value, valid, "riskin_value")


def turan_lower(k: int, n: int, s: int) -> int:
    """Clique-partition lower bound q*C((n-q)/s+1, 2) + (s-q)*C((n-q)/s, 2).

    Sound whenever K_{k+1,s+1} has no k-page embedding; the caller asserts
    that hypothesis (s = floor((k+1)^2/4) for k in 2..6, or the general
    non-embeddable width).  Zero for n <= s.
    """
    if s < 1:
        raise ValueError("s must be positive")
    q = n % s
    c = (n - q) // s
    return q * comb(c + 1, 2) + (s - q) * comb(c, 2)


def exact_crossing_number(k: int, n: int) -> int:
    """Exact k-page crossing number of K_{k+1,n} for k in 2..6.

    Equals the clique-partition bound at s = floor((k+1)^2/4), which the
    blow-up construction attains.  At k=2 this is Z(3,n).
    """
    if k not in (2, 3, 4, 5, 6):
        raise ValueError("exact values are only established for k in 2..6")
    return turan_lower(k, n, (k + 1) ** 2 // 4)


def _floor_fourth_root(x: int) -> int:
    return isqrt(isqrt(x))


def _ceil_scaled_k74(scale: int, k: int) -> int:
    """ceil(scale * k^(7/4)) exactly: scale*k^(7/4) = (scale^4 * k^7)^(1/4)."""
    radicand = scale**4 * k**7
    root = _floor_fourth_root(radicand)
    return root if root**4 == radicand else root + 1


def asymptotic_bounds(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Sandwich 2n^2/(k^2 + 2000 k^(7/4)) - n < value <= 2n^2/k^2 + n/2.

    The lower bound's irrational denominator term 2000 k^(7/4) is rounded up
    to the next integer, weakening (never overstating) the reported bound;
    the upper bound is exact.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    denom = k * k + _ceil_scaled_k74(2000, k)
    lower = Fraction(2 * n * n, denom) - n
    upper = Fraction(2 * n * n, k * k) + Fraction(n, 2)
    return lower, upper


def multiplanar_lower_even(k: int, n: int) -> int:
    """Even-k lower bound floor(n/(k(k-1))) * (n - (k/2)(k-1)(floor(..) - 1)).

    Implemented verbatim as printed.  It provably exceeds the exact value at
    some small n (for example k=4, n=12 gives 12 against the exact 6); the
    discrepancy is surfaced by consistency_scan rather than silently patched.
    """
    if k % 2:
        raise ValueError("this bound requires even k")
    blocks = n // (k * (k - 1))
    return blocks * (n - (k // 2) * (k - 1) * (blocks - 1))


def general_lower(k: int, m: int, n: int) -> BoundValue:
    """General lower bound C(m,2) C(n,2) / (3 (3 ceil(k/2) - 1)^2).

    Valid for m >= 6 ceil(k/2) - 1 and n >= max(6 ceil(k/2) - 1, 2 ceil(k/2)^2).
    """
    r = (k + 1) // 2
    value = Fraction(comb(m, 2) * comb(n, 2), 3 * (3 * r - 1) ** 2)
    valid = m >= 6 * r - 1 and n >= max(6 * r - 1, 2 * r * r)
    return BoundValue(value, valid, "general_lower")


def block_cyclic_bound(k: int, m: int, n: int) -> int:
    """Upper bound (m-r)(n-s)(m-k+r)(n-k+s)/(4k^2) from the block-cyclic drawing."""
    if k < 1:
        raise ValueError("k must be positive")
    r = m % k
    s = n % k
    value, rem = divmod((m - r) * (n - s) * (m - k + r) * (n - k + s), 4 * k * k)
    if rem:
        raise ArithmeticError(f"block-cyclic bound for ({k},{m},{n}) not integral")
    return value


def nonembeddable_width(k: int) -> int:
    """ceil(k^2/4 + 500 k^(7/4)): K_{k+1,n} has no k-page embedding for n at
    or beyond this width (exact integer ceiling, so never understated)."""
    if k < 1:
        raise ValueError("k must be positive")
    radicand = 500**4 * k**7  # (500 k^(7/4))^4
    # smallest integer w with 4w - k^2 >= 0 and (4w - k^2)^4 >= 256 * radicand
    w = (k * k + 4 * _floor_fourth_root(radicand)) // 4  # slightly below the target
    while 4 * w - k * k < 0 or (4 * w - k * k) ** 4 < 256 * radicand:
        w += 1
    return w


# ---------------------------------------------------------------------------
# Consistency scan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    k: int
    n: int
    source: str
    kind: str  # "lower" | "upper" | "exact"
    value: Number
    valid: bool

    def to_dict(self) -> dict:
        v = self.value
        return {
            "k": self.k,
            "m": self.k + 1,
            "n": self.n,
            "formula": self.source,
            "kind": self.kind,
            "value": v if isinstance(v, int) else str(v),
            "valid": self.valid,
        }


@dataclass(frozen=True)
class ScanViolation:
    k: int
    n: int
    lower_source: str
    lower_value: Number
    upper_source: str
    upper_value: Number

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "lower": {"formula": self.lower_source, "value": _jsonable(self.lower_value)},
            "upper": {"formula": self.upper_source, "value": _jsonable(self.upper_value)},
        }


def _jsonable(v: Number):
    return v if isinstance(v, int) else str(v)


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    violations: tuple[ScanViolation, ...]


def family_rows(k: int, n: int) -> list[ScanRow]:
    """Every applicable bound row for the family K_{k+1,n}."""
    rows: list[ScanRow] = []
    ell = (k + 1) ** 2 // 4
    if k in (2, 3, 4, 5, 6):
        rows.append(ScanRow(k, n, "exact_crossing_number", "exact", exact_crossing_number(k, n), True))
        rows.append(ScanRow(k, n, "turan_lower", "lower", turan_lower(k, n, ell), True))
    width = nonembeddable_width(k)
    rows.append(ScanRow(k, n, "turan_lower_general_width", "lower", turan_lower(k, n, width - 1), True))
    if k % 2 == 0:
        rows.append(ScanRow(k, n, "multiplanar_lower_even", "lower", multiplanar_lower_even(k, n), True))
    glb = general_lower(k, k + 1, n)
    rows.append(ScanRow(k, n, glb.source, "lower", glb.value, glb.valid))
    lo, hi = asymptotic_bounds(k, n)
    rows.append(ScanRow(k, n, "asymptotic_lower", "lower", lo, True))
    rows.append(ScanRow(k, n, "asymptotic_upper", "upper", hi, True))
    if k in (2, 3, 4, 5, 6) and n >= ell:
        from .constructions import blowup_crossing_count

        rows.append(ScanRow(k, n, "blowup_drawing", "upper", blowup_crossing_count(k, n), True))
    rows.append(ScanRow(k, n, "block_cyclic_bound", "upper", block_cyclic_bound(k, k + 1, n), True))
    return rows


def consistency_scan(k_range, n_range) -> ScanReport:
    """Evaluate all bounds over the grid and report lower>upper violations.

    Violations are reported, never raised: one printed formula is known to be
    inconsistent at small n, and the report is the designed surface for it.
    Exact values participate on both sides; invalid rows are listed but never
    enter verdicts.
    """
    rows: list[ScanRow] = []
    violations: list[ScanViolation] = []
    for k in k_range:
        for n in n_range:
            here = family_rows(k, n)
            rows.extend(here)
            lowers = [r for r in here if r.kind in ("lower", "exact") and r.valid]
            uppers = [r for r in here if r.kind in ("upper", "exact") and r.valid]
            for lo_row in lowers:
                for hi_row in uppers:
                    if lo_row.source == hi_row.source:
                        continue
                    if lo_row.value > hi_row.value:
                        violations.append(
                            ScanViolation(k, n, lo_row.source, lo_row.value, hi_row.source, hi_row.value)
                        )
    return ScanReport(tuple(rows), tuple(violations))
