"""Hadamard algebra, exact triangular products/inverses/powers, and the closed
forms for inverses and powers of product-form triangles."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .triangle import (ONE, ZERO, Triangle, Window, ZeroEntryError, build_triangle,
                       parse_sequence)


# --------------------------------------------------------------------------
# Hadamard (entrywise) operations


def hadamard_product(a, b) -> Triangle:
    a, b = build_triangle(a), build_triangle(b)
    return Triangle(lambda n, k: a.entry(n, k) * b.entry(n, k), name=f"({a.name})o({b.name})")


def hadamard_inverse(a) -> Triangle:
    """Entrywise reciprocal; a zero entry raises :class:`ZeroEntryError` on access."""
    a = build_triangle(a)

    def rule(n, k):
        v = a.entry(n, k)
        if v == 0:
            raise ZeroEntryError(f"{a.name} has a zero entry at ({n},{k})", index=(n, k))
        return 1 / v

    return Triangle(rule, name=f"({a.name})^o(-1)")


def hadamard_power(a, j: int) -> Triangle:
    a = build_triangle(a)
    if j < 0:
        a, j = hadamard_inverse(a), -j
    return Triangle(lambda n, k: a.entry(n, k) ** j, name=f"({a.name})^o{j}")


# --------------------------------------------------------------------------
# matrix operations on windows


def matmul(a: Window, b: Window) -> Window:
    if a.n_rows != b.n_rows:
        raise ValueError(f"size mismatch: {a.n_rows} vs {b.n_rows} rows")
    N = a.n_rows
    rows = []
    for n in range(N):
        arow = a.rows[n]
        rows.append(tuple(sum((arow[j] * b.rows[j][k] for j in range(k, n + 1)), ZERO)
                          for k in range(n + 1)))
    return Window(tuple(rows), name=f"({a.name})({b.name})")


def tri_inverse(w: Window) -> Window:
    """Exact inverse by forward substitution, column by column."""
    N = w.n_rows
    for n in range(N):
        if w.rows[n][n] == 0:
            raise ZeroEntryError(f"zero diagonal entry at ({n},{n}); not invertible", index=(n, n))
    X = [[ZERO] * (n + 1) for n in range(N)]
    for n in range(N):
        d = w.rows[n][n]
        X[n][n] = 1 / d
        for k in range(n):
            s = sum((w.rows[n][j] * X[j][k] for j in range(k, n)), ZERO)
            X[n][k] = -s / d
    return Window(tuple(tuple(r) for r in X), name=f"({w.name})^-1")


def matrix_power(w: Window, j: int) -> Window:
    if j == 0:
        return Window.identity(w.n_rows)
    base = tri_inverse(w) if j < 0 else w
    result = base
    for _ in range(abs(j) - 1):
        result = matmul(result, base)
    return result


# --------------------------------------------------------------------------
# B- and C-series


def _prefix(b) -> list[Fraction]:
    return [Fraction(x) for x in b]


def series_inverse_B(b) -> list[Fraction]:
    """Coefficients of 1/b(t) for b_0 = 1, via B_n = -sum_{i=1..n} b_i B_{n-i}."""
    b = _prefix(b)
    if not b or b[0] != 1:
        raise ValueError(f"series_inverse_B needs b[0] = 1, got {b[:1]}")
    B = [ONE]
    for n in range(1, len(b)):
        B.append(-sum((b[i] * B[n - i] for i in range(1, n + 1)), ZERO))
    return B


def compositions(n: int, parts: int):
    """All compositions of n into ``parts`` positive parts."""
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def series_inverse_B_sum(b, max_len: int = 15) -> list[Fraction]:
    """The alternating sum over compositions; exponential, used as an oracle.

    B_n = sum_{j=1..n} (-1)^j sum_{i_1+..+i_j=n, i_t>=1} b_{i_1}...b_{i_j}
    """
    b = _prefix(b)
    if not b or b[0] != 1:
        raise ValueError(f"series_inverse_B_sum needs b[0] = 1, got {b[:1]}")
    if len(b) > max_len:
        raise ValueError(f"composition sum is capped at {max_len} terms, got {len(b)}")
    B = [ONE]
    for n in range(1, len(b)):
        total = ZERO
        for j in range(1, n + 1):
            inner = ZERO
            for comp in compositions(n, j):
                term = ONE
                for i in comp:
                    term *= b[i]
                inner += term
            total += inner if j % 2 == 0 else -inner
        B.append(total)
    return B


def _convolve(x, y, N):
    return [sum((x[i] * y[n - i] for i in range(n + 1)), ZERO) for n in range(N)]


def series_power_C(b, j: int) -> list[Fraction]:
    """Coefficients of b(t)^j (the j-fold convolution power), j >= 1."""
    b = _prefix(b)
    if j < 1:
        raise ValueError(f"series_power_C needs j >= 1, got {j}")
    if not b or b[0] != 1:
        raise ValueError(f"series_power_C needs b[0] = 1, got {b[:1]}")
    C = list(b)
    for _ in range(j - 1):
        C = _convolve(C, b, len(b))
    return C


# --------------------------------------------------------------------------
# closed forms for product-form triangles


def product_inverse_closed(a, b, c, n_rows: int) -> Window:
    """Inverse of (a_k b_{n-k} c_n) as a_n^{-1} B_{n-k} c_k^{-1}."""
    a, b, c = parse_sequence(a), parse_sequence(b), parse_sequence(c)
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    B = series_inverse_B(b.prefix(n_rows))
    ainv, cinv = [], []
    for n in range(n_rows):
        if a(n) == 0:
            raise ZeroEntryError(f"a_{n} = 0 in {a.name}", index=n)
        if c(n) == 0:
            raise ZeroEntryError(f"c_{n} = 0 in {c.name}", index=n)
        ainv.append(1 / a(n))
        cinv.append(1 / c(n))
    return Window(tuple(tuple(ainv[n] * B[n - k] * cinv[k] for k in range(n + 1))
                        for n in range(n_rows)), name="product-inverse")


def product_power_closed(a, b, j: int, n_rows: int) -> Window:
    """j-th matrix power of (a_n b_{n-k} a_k^{-1}) as a_n C_{n-k} a_k^{-1}.

    For j < 0 the C-series is the |j|-th power of the B-series of b.
    """
    a, b = parse_sequence(a), parse_sequence(b)
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    bs = b.prefix(n_rows)
    if bs[0] != 1:
        raise ValueError(f"product_power_closed needs b_0 = 1, got {bs[0]}")
    av = a.prefix(n_rows)
    for n, x in enumerate(av):
        if x == 0:
            raise ZeroEntryError(f"a_{n} = 0 in {a.name}", index=n)
    if j == 0:
        return Window.identity(n_rows)
    base = bs if j > 0 else series_inverse_B(bs)
    C = series_power_C(base, abs(j))
    return Window(tuple(tuple(av[n] * C[n - k] / av[k] for k in range(n + 1))
                        for n in range(n_rows)), name=f"product-power({j})")


def conjugate_product_triangle(a, b) -> Triangle:
    """The triangle (a_n b_{n-k} a_k^{-1}) that product_power_closed raises to powers."""
    a, b = parse_sequence(a), parse_sequence(b)
    return Triangle(lambda n, k: a(n) * b(n - k) / a(k), name=f"conj(a={a.name},b={b.name})")
