"""Truncated formal power series over Q and the Riordan group.

A :class:`Series` stores coefficients ``0..N-1``; ``N`` is its truncation
order and every result carries the smallest order its inputs guarantee.
Reading a coefficient at or beyond the order raises ``IndexError``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import format_rational, parse_rational
from .triangle import ONE, ZERO, Window


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs truncation order >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if not 0 <= n < len(self.coeffs):
            raise IndexError(f"coefficient {n} is beyond truncation order {len(self.coeffs)}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} series to {order}")
        return Series(self.coeffs[:order])

    def __str__(self):
        return "[" + ", ".join(format_rational(x) for x in self.coeffs) + f"; O(t^{self.order})]"

    @classmethod
    def poly(cls, values, order: int) -> "Series":
        """A polynomial, zero-padded to ``order`` coefficients."""
        values = [Fraction(v) for v in values]
        if len(values) > order:
            raise ValueError(f"{len(values)} coefficients do not fit truncation order {order}")
        return cls(tuple(values) + (ZERO,) * (order - len(values)))

    @classmethod
    def unit(cls, order: int) -> "Series":
        return cls.poly([1], order)

    @classmethod
    def t(cls, order: int) -> "Series":
        return cls.poly([0, 1], order)


def geomrec(c, order: int) -> Series:
    """1 / (1 - c t)"""
    c = Fraction(c)
    return Series(tuple(c ** n for n in range(order)))


def tgeomrec(c, order: int) -> Series:
    """t / (1 - c t)"""
    c = Fraction(c)
    return Series((ZERO,) + tuple(c ** n for n in range(order - 1)))


def geomrec2(order: int) -> Series:
    """1 / (1 - t^2)"""
    return Series(tuple(ONE if n % 2 == 0 else ZERO for n in range(order)))


def tgeomrec2(order: int) -> Series:
    """t / (1 - t^2)"""
    return Series(tuple(ONE if n % 2 == 1 else ZERO for n in range(order)))


def parse_series(text: str, order: int) -> Series:
    """CLI series literal: ``geomrec:c``, ``tgeomrec:c``, ``geomrec2``,
    ``tgeomrec2`` or comma-separated coefficients of a polynomial."""
    s = text.strip()
    if s == "geomrec2":
        return geomrec2(order)
    if s == "tgeomrec2":
        return tgeomrec2(order)
    if s.startswith("geomrec:"):
        return geomrec(parse_rational(s[8:]), order)
    if s.startswith("tgeomrec:"):
        return tgeomrec(parse_rational(s[9:]), order)
    return Series.poly([parse_rational(v) for v in s.split(",")], order)


def series_mul(a: Series, b: Series) -> Series:
    N = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    return Series(tuple(sum((x[i] * y[n - i] for i in range(n + 1)), ZERO) for n in range(N)))


def series_reciprocal(a: Series) -> Series:
    if a[0] == 0:
        raise ValueError("series_reciprocal needs a nonzero constant term")
    x = a.coeffs
    inv0 = 1 / x[0]
    out = [inv0]
    for n in range(1, a.order):
        out.append(-inv0 * sum((x[i] * out[n - i] for i in range(1, n + 1)), ZERO))
    return Series(tuple(out))


def series_compose(a: Series, h: Series) -> Series:
    """a(h(t)) by Horner's rule; needs h[0] = 0."""
    if h[0] != 0:
        raise ValueError("series_compose needs h[0] = 0")
    N = min(a.order, h.order)
    h = h.truncate(N)
    acc = Series.poly([a[N - 1]], N)
    for i in range(N - 2, -1, -1):
        prod = series_mul(acc, h)
        acc = Series((prod[0] + a[i],) + prod.coeffs[1:])
    return acc


def _check_invertible_h(h: Series):
    if h.order < 2:
        raise ValueError("compositional inverse needs truncation order >= 2")
    if h[0] != 0 or h[1] == 0:
        raise ValueError("compositional inverse needs h[0] = 0 and h[1] != 0")


def series_comp_inverse(h: Series) -> Series:
    """The series g with h(g(t)) = t, solved one coefficient at a time.

    With g known below degree n, [t^n] h(g) = h_1 g_n + (terms in g_1..g_{n-1}),
    so g_n is fixed by requiring that coefficient to vanish.
    """
    _check_invertible_h(h)
    N = h.order
    h1 = h[1]
    g = [ZERO, 1 / h1] + [ZERO] * (N - 2)
    for n in range(2, N):
        partial = series_compose(h.truncate(n + 1), Series(tuple(g[:n + 1])))
        g[n] = -partial[n] / h1
    return Series(tuple(g))


def series_comp_inverse_lagrange(h: Series) -> Series:
    """Compositional inverse by Lagrange inversion: [t^n] g = [t^(n-1)] (t/h)^n / n."""
    _check_invertible_h(h)
    N = h.order
    phi = series_reciprocal(Series(h.coeffs[1:]))  # t / h(t), order N - 1
    g = [ZERO]
    power = Series.unit(N - 1)
    for n in range(1, N):
        power = series_mul(power, phi)
        g.append(power[n - 1] / n)
    return Series(tuple(g))


# --------------------------------------------------------------------------
# Riordan group


@dataclass(frozen=True)
class RiordanPair:
    d: Series
    h: Series

    def __post_init__(self):
        if self.d[0] == 0:
            raise ValueError("Riordan pair needs d[0] != 0")
        if self.h.order < 2 or self.h[0] != 0 or self.h[1] == 0:
            raise ValueError("Riordan pair needs h[0] = 0 and h[1] != 0")

    @property
    def order(self) -> int:
        return min(self.d.order, self.h.order)

    @classmethod
    def identity(cls, order: int) -> "RiordanPair":
        return cls(Series.unit(order), Series.t(order))

    def truncate(self, order: int) -> "RiordanPair":
        return RiordanPair(self.d.truncate(order), self.h.truncate(order))


def riordan_window(r: RiordanPair, n_rows: int) -> Window:
    """Entry (n, k) = [t^n] d(t) h(t)^k."""
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    if r.order < n_rows:
        raise ValueError(f"pair truncated at order {r.order} cannot fill {n_rows} rows")
    d, h = r.d.truncate(n_rows), r.h.truncate(n_rows)
    cols = [d]
    for _ in range(1, n_rows):
        cols.append(series_mul(cols[-1], h))
    return Window(tuple(tuple(cols[k][n] for k in range(n + 1)) for n in range(n_rows)),
                  name="riordan")


def riordan_mul(x: RiordanPair, y: RiordanPair) -> RiordanPair:
    """(d, h)(g, f) = (d * g(h), f(h))."""
    return RiordanPair(series_mul(x.d, series_compose(y.d, x.h)), series_compose(y.h, x.h))


def riordan_inverse(r: RiordanPair) -> RiordanPair:
    """(d, h)^{-1} = (1 / d(hbar), hbar) with hbar the compositional inverse of h."""
    hbar = series_comp_inverse(r.h)
    return RiordanPair(series_reciprocal(series_compose(r.d, hbar)), hbar)


def pascal_pair(order: int, j=1) -> RiordanPair:
    """(1/(1-jt), t/(1-jt)), the Riordan form of the j-th Pascal power."""
    return RiordanPair(geomrec(j, order), tgeomrec(j, order))


def aerated_pair(order: int) -> RiordanPair:
    """(1/(1-t^2), t/(1-t^2))"""
    return RiordanPair(geomrec2(order), tgeomrec2(order))
