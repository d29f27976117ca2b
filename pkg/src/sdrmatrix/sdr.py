"""Generalized Star-of-David checks on finite windows.

For a level ``p >= 2`` and rotation ``0 <= r <= p-1`` anchored at ``(n, k)``
the identity compares two products of ``p + 1`` entries each::

    prod_{i=0..r}     A[n+i,   k+r-i]   * prod_{i=0..p-r-1} A[n+p-i, k+r+i+1]
  = prod_{i=0..r}     A[n+p-i, k+p-r+i] * prod_{i=0..p-r-1} A[n+i,   k+p-r-i-1]

A matrix has SDR order ``m`` when every identity with ``2 <= p <= m-1`` holds.
Entries above the diagonal are zero and enter the products literally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import format_rational
from .triangle import Window

DEFAULT_MAX_VIOLATIONS = 100


@dataclass(frozen=True)
class IdentityInstance:
    p: int
    r: int
    n: int
    k: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r, "n": self.n, "k": self.k,
                "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs)}


@dataclass
class SdrReport:
    order: int
    rows: int
    violations: list = field(default_factory=list)
    violations_total: int = 0
    cells_checked: int = 0

    @property
    def verdict(self) -> str:
        return "pass" if self.violations_total == 0 else "fail"

    @property
    def passed(self) -> bool:
        return self.violations_total == 0

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "rows": self.rows,
            "verdict": self.verdict,
            "violations": [v.to_json() for v in self.violations],
            "violations_total": self.violations_total,
            "cells_checked": self.cells_checked,
        }


@dataclass(frozen=True)
class InfinityCertificate:
    sdr3_on_window: bool
    all_entries_nonzero_on_window: bool

    @property
    def conclusion(self) -> str:
        if self.sdr3_on_window and self.all_entries_nonzero_on_window:
            return "consistent-with-SDR-infinity (nonzero entries + SDR_3)"
        return "no evidence"

    @property
    def consistent(self) -> bool:
        return self.sdr3_on_window and self.all_entries_nonzero_on_window

    def to_json(self) -> dict:
        return {"sdr3_on_window": self.sdr3_on_window,
                "all_entries_nonzero_on_window": self.all_entries_nonzero_on_window,
                "conclusion": self.conclusion}


def _sides(get, p, r, n, k):
    lhs = Fraction(1)
    rhs = Fraction(1)
    for i in range(r + 1):
        lhs *= get(n + i, k + r - i)
        rhs *= get(n + p - i, k + p - r + i)
    for i in range(p - r):
        lhs *= get(n + p - i, k + r + i + 1)
        rhs *= get(n + i, k + p - r - i - 1)
    return lhs, rhs


def check_identity(w: Window, p: int, r: int, n: int, k: int) -> IdentityInstance:
    if p < 2:
        raise ValueError(f"level p must be >= 2, got {p}")
    if not 0 <= r <= p - 1:
        raise ValueError(f"rotation r must lie in [0, {p - 1}], got {r}")
    if not 0 <= k <= n:
        raise ValueError(f"anchor needs 0 <= k <= n, got n={n}, k={k}")
    if n + p > w.n_rows - 1:
        raise ValueError(f"anchor n={n} with p={p} needs row {n + p}, window has {w.n_rows} rows")
    lhs, rhs = _sides(w.entry, p, r, n, k)
    return IdentityInstance(p, r, n, k, lhs, rhs)


def instance_count(n_rows: int, m: int) -> int:
    """Number of identity instances checked for order ``m`` on ``n_rows`` rows."""
    total = 0
    for p in range(2, m):
        anchors = max(n_rows - p, 0)
        total += p * anchors * (anchors + 1) // 2
    return total


def _check_level(w: Window, p: int, report: SdrReport, max_violations: int) -> None:
    get = w.entry
    N = w.n_rows
    for r in range(p):
        for n in range(N - p):
            for k in range(n + 1):
                lhs, rhs = _sides(get, p, r, n, k)
                report.cells_checked += 1
                if lhs != rhs:
                    report.violations_total += 1
                    if len(report.violations) < max_violations:
                        report.violations.append(IdentityInstance(p, r, n, k, lhs, rhs))


def _require_rows(w: Window, m: int) -> None:
    if m < 3:
        raise ValueError(f"order m must be >= 3, got {m}")
    if w.n_rows < m:
        raise ValueError(f"window of {w.n_rows} rows is too small for order {m} (need rows >= {m})")


def _check_cells(n_rows, m, max_cells):
    if max_cells is not None:
        need = instance_count(n_rows, m)
        if need > max_cells:
            raise ValueError(f"order {m} on {n_rows} rows needs {need} identity instances, "
                             f"above the cap of {max_cells}")


def check_order(w: Window, m: int, *, max_violations: int = DEFAULT_MAX_VIOLATIONS,
                max_cells: int | None = None, shortcut: bool = False) -> SdrReport:
    """Check every identity of order ``m`` on the window.

    Violations come out in lexicographic ``(p, r, n, k)`` order, truncated to
    ``max_violations`` (``violations_total`` keeps the full count).

    With ``shortcut=True`` and a window free of zeros, only level ``p = 2``
    is evaluated when it passes: for nonzero matrices SDR_3 already implies
    every higher order.  ``cells_checked`` then counts only that level.
    """
    _require_rows(w, m)
    _check_cells(w.n_rows, m, max_cells)
    report = SdrReport(order=m, rows=w.n_rows)
    if shortcut and w.all_nonzero():
        _check_level(w, 2, report, max_violations)
        if report.passed:
            return report
        report = SdrReport(order=m, rows=w.n_rows)
    for p in range(2, m):
        _check_level(w, p, report, max_violations)
    return report


def max_order(w: Window, cap: int, *, max_violations: int = DEFAULT_MAX_VIOLATIONS,
              max_cells: int | None = None) -> tuple[int, SdrReport]:
    """Largest ``m <= cap`` whose order check passes; 2 if SDR_3 already fails.

    The returned report belongs to the first failing order, or to ``cap``.
    """
    _require_rows(w, cap)
    _check_cells(w.n_rows, cap, max_cells)
    report = SdrReport(order=3, rows=w.n_rows)
    for m in range(3, cap + 1):
        # orders are nested, so order m only adds level p = m - 1
        report.order = m
        _check_level(w, m - 1, report, max_violations)
        if not report.passed:
            return m - 1, report
    return cap, report


def infinity_evidence(w: Window) -> InfinityCertificate:
    if w.n_rows < 4:
        raise ValueError(f"need at least 4 rows for infinity evidence, got {w.n_rows}")
    return InfinityCertificate(sdr3_on_window=check_order(w, 3).passed,
                               all_entries_nonzero_on_window=w.all_nonzero())
