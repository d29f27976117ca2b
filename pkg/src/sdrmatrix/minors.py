"""Contiguous j x j minors of a triangle and their Toeplitz closed form."""

from __future__ import annotations

from fractions import Fraction

from .triangle import ONE, ZERO, Window, parse_sequence


def det(matrix) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in matrix]
    size = len(a)
    if size == 0 or any(len(row) != size for row in a):
        raise ValueError("det needs a non-empty square matrix")
    result = ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, size):
            f = a[r][col] / p
            if f:
                row, prow = a[r], a[col]
                for c in range(col, size):
                    row[c] -= f * prow[c]
    return result


def block(w: Window, n: int, k: int, j: int) -> list[list[Fraction]]:
    """The j x j block with top-left corner (n, k); rows must lie in the window."""
    if n + j > w.n_rows:
        raise ValueError(f"block at row {n} of size {j} runs past the {w.n_rows}-row window")
    return [[w.entry(n + r, k + c) for c in range(j)] for r in range(j)]


def minor_triangle(w: Window, j: int) -> Window:
    """A_[j]: entry (n, k) is the determinant of the j x j block at (n, k).

    The output has ``N - j + 1`` rows.
    """
    if not 1 <= j <= w.n_rows:
        raise ValueError(f"minor size j must lie in [1, {w.n_rows}], got {j}")
    out_rows = w.n_rows - j + 1
    return Window(tuple(tuple(det(block(w, n, k, j)) for k in range(n + 1))
                        for n in range(out_rows)), name=f"({w.name})_[{j}]")


def toeplitz_B(b, j: int, n_terms: int) -> list[Fraction]:
    """B_m = det(b_{m+r-c})_{r,c<j}, with b_i = 0 for i < 0, for m < n_terms."""
    b = [Fraction(x) for x in b]

    def bb(i):
        return b[i] if i >= 0 else ZERO

    return [det([[bb(m + r - c) for c in range(j)] for r in range(j)]) for m in range(n_terms)]


def toeplitz_minor_closed(a, b, c, j: int, n_rows: int) -> Window:
    """A_[j] of (a_k b_{n-k} c_n) as B_{n-k} prod_{i<j} a_{k+i} c_{n+i}."""
    a, b, c = parse_sequence(a), parse_sequence(b), parse_sequence(c)
    if j < 1:
        raise ValueError(f"minor size j must be >= 1, got {j}")
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    if b(0) != 1:
        raise ValueError(f"toeplitz_minor_closed needs b_0 = 1, got {b(0)}")
    span = n_rows + j - 1
    B = toeplitz_B(b.prefix(span), j, n_rows)
    av, cv = a.prefix(span), c.prefix(span)
    apr, cpr = [], []
    for n in range(n_rows):
        pa = pc = ONE
        for i in range(j):
            pa *= av[n + i]
            pc *= cv[n + i]
        apr.append(pa)
        cpr.append(pc)
    return Window(tuple(tuple(B[n - k] * apr[k] * cpr[n] for k in range(n + 1))
                        for n in range(n_rows)), name=f"toeplitz-minor[{j}]")
