"""Lazy lower-triangular matrices, finite windows and the triangle spec mini-language.

A :class:`Triangle` is an infinite lower-triangular matrix given by a rule
``(n, k) -> Fraction``; entries outside ``0 <= k <= n`` are zero.  A
:class:`Window` is the materialized block of the first ``N`` rows and is what
every checker and algebra routine works on.

Sequence grammar::

    ones | fact | sfact | geo:<c> | list:v0,v1,... | inv(<seq>)

Triangle grammar::

    builtin:pascal|narayana|lah|aerated|allones
    product:a=<seq>,b=<seq>,c=<seq>      entry a_k * b_{n-k} * c_n
    rowseq:<seq> | colseq:<seq> | diagseq:<seq>
    shift:i,j(<tri>)                     entry A_{n+i,k+j}
    aerate(<tri>)                        entry A_{(n+k)/2,(n-k)/2}, 0 off parity
    file:<path>
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from .rational import format_rational, parse_rational

ZERO = Fraction(0)
ONE = Fraction(1)


class SpecError(ValueError):
    """Malformed sequence or triangle spec."""


class ZeroEntryError(ValueError):
    """A reciprocal was requested of a zero entry."""

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


# --------------------------------------------------------------------------
# sequences


class Sequence:
    """Memoized integer-indexed sequence of Fractions."""

    def __init__(self, rule: Callable[[int], Fraction], name: str, length: int | None = None):
        self._rule = rule
        self.name = name
        self.length = length  # None for infinite sequences
        self._memo: dict[int, Fraction] = {}

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(f"negative index {n} for sequence {self.name}")
        if self.length is not None and n >= self.length:
            raise IndexError(
                f"index {n} beyond the {self.length}-term prefix of {self.name}")
        try:
            return self._memo[n]
        except KeyError:
            v = Fraction(self._rule(n))
            self._memo[n] = v
            return v

    def prefix(self, n: int) -> list[Fraction]:
        return [self(i) for i in range(n)]

    def __repr__(self):
        return f"Sequence({self.name!r})"


def parse_sequence(spec) -> Sequence:
    if isinstance(spec, Sequence):
        return spec
    if not isinstance(spec, str):
        raise SpecError(f"sequence spec must be a string, got {spec!r}")
    s = spec.strip()
    if s == "ones":
        return Sequence(lambda n: ONE, s)
    if s == "fact":
        return Sequence(lambda n: math.factorial(n), s)
    if s == "sfact":
        return Sequence(lambda n: math.factorial(n) * math.factorial(n + 1), s)
    if s.startswith("geo:"):
        try:
            c = parse_rational(s[4:])
        except ValueError as e:
            raise SpecError(f"bad ratio in {s!r}: {e}") from None
        return Sequence(lambda n: c ** n, s)
    if s.startswith("list:"):
        body = s[5:]
        if not body.strip():
            raise SpecError(f"empty list in {s!r}")
        try:
            values = [parse_rational(v) for v in body.split(",")]
        except ValueError as e:
            raise SpecError(f"bad list literal in {s!r}: {e}") from None
        return Sequence(lambda n: values[n], s, length=len(values))
    if s.startswith("inv(") and s.endswith(")"):
        inner = parse_sequence(s[4:-1])

        def rule(n):
            v = inner(n)
            if v == 0:
                raise ZeroEntryError(f"{s}: term {n} of {inner.name} is zero", index=n)
            return 1 / v

        return Sequence(rule, s, length=inner.length)
    raise SpecError(f"unknown sequence spec {spec!r}")


def sequence_eval(spec, n: int) -> Fraction:
    """The n-th term of a sequence spec."""
    return parse_sequence(spec)(n)


# --------------------------------------------------------------------------
# triangles


class Triangle:
    """Infinite lower-triangular matrix with a memoized entry rule.

    ``rule`` is only consulted for ``0 <= k <= n``; everything else is zero.
    """

    def __init__(self, rule: Callable[[int, int], Fraction], name: str = "", spec: str | None = None):
        self._rule = rule
        self.name = name or (spec or "triangle")
        self.spec = spec
        self._memo: dict[tuple[int, int], Fraction] = {}

    def entry(self, n: int, k: int) -> Fraction:
        if n < 0:
            raise IndexError(f"negative row index {n}")
        if k < 0 or k > n:
            return ZERO
        key = (n, k)
        try:
            return self._memo[key]
        except KeyError:
            v = Fraction(self._rule(n, k))
            self._memo[key] = v
            return v

    __call__ = entry

    def __getitem__(self, nk):
        return self.entry(*nk)

    def __repr__(self):
        return f"Triangle({self.name!r})"

    @classmethod
    def from_window(cls, w: "Window") -> "Triangle":
        def rule(n, k):
            if n >= w.n_rows:
                raise IndexError(
                    f"row {n} beyond the {w.n_rows} stored rows of {w.name or 'window'}")
            return w.rows[n][k]

        return cls(rule, name=w.name or "window")


def entry(t: Triangle, n: int, k: int) -> Fraction:
    return t.entry(n, k)


def _pascal(n, k):
    return math.comb(n, k)


def _narayana(n, k):
    # N_{n+1,k+1}
    return Fraction(math.comb(n + 1, k + 1) * math.comb(n + 1, k), n + 1)


def _lah(n, k):
    return Fraction(math.comb(n, k) * math.factorial(n + 1), math.factorial(k + 1))


def _aerated(n, k):
    if (n - k) % 2:
        return 0
    return math.comb((n + k) // 2, (n - k) // 2)


BUILTINS = {
    "pascal": _pascal,
    "narayana": _narayana,
    "lah": _lah,
    "aerated": _aerated,
    "allones": lambda n, k: 1,
}


def product_triangle(a, b, c, spec: str | None = None) -> Triangle:
    """Triangle with entries ``a_k * b_{n-k} * c_n``."""
    a, b, c = parse_sequence(a), parse_sequence(b), parse_sequence(c)
    if b(0) == 0:
        raise SpecError(f"product triangle needs b_0 != 0 (b = {b.name})")
    spec = spec or f"product:a={a.name},b={b.name},c={c.name}"
    return Triangle(lambda n, k: a(k) * b(n - k) * c(n), spec=spec)


def shift(t: Triangle, i: int, j: int) -> Triangle:
    if i < 0 or j < 0:
        raise SpecError(f"shift offsets must be non-negative, got {i},{j}")
    spec = f"shift:{i},{j}({t.spec})" if t.spec else None
    return Triangle(lambda n, k: t.entry(n + i, k + j), name=f"shift:{i},{j}({t.name})", spec=spec)


def aerate(t: Triangle) -> Triangle:
    """Spread ``t`` onto the checkerboard: (n, k) -> t((n+k)/2, (n-k)/2)."""

    def rule(n, k):
        if (n - k) % 2:
            return ZERO
        return t.entry((n + k) // 2, (n - k) // 2)

    spec = f"aerate({t.spec})" if t.spec else None
    return Triangle(rule, name=f"aerate({t.name})", spec=spec)


_SHIFT = re.compile(r"^shift:\s*(-?\d+)\s*,\s*(-?\d+)\s*\((.*)\)$", re.S)
_PRODUCT_KEYS = re.compile(r",(?=\s*[abc]\s*=)")


def build_triangle(spec) -> Triangle:
    """Parse a triangle spec string into a :class:`Triangle`."""
    if isinstance(spec, Triangle):
        return spec
    if not isinstance(spec, str):
        raise SpecError(f"triangle spec must be a string, got {spec!r}")
    s = spec.strip()
    if s.startswith("builtin:"):
        name = s[8:]
        if name not in BUILTINS:
            raise SpecError(f"unknown builtin {name!r}; expected one of {sorted(BUILTINS)}")
        return Triangle(BUILTINS[name], name=name, spec=s)
    if s.startswith("product:"):
        seqs = {}
        for part in _PRODUCT_KEYS.split(s[8:]):
            key, eq, val = part.partition("=")
            key = key.strip()
            if not eq or key not in "abc" or len(key) != 1:
                raise SpecError(f"bad product component {part!r} in {s!r}")
            if key in seqs:
                raise SpecError(f"duplicate component {key!r} in {s!r}")
            seqs[key] = parse_sequence(val)
        missing = {"a", "b", "c"} - seqs.keys()
        if missing:
            raise SpecError(f"product spec {s!r} lacks {sorted(missing)}")
        return product_triangle(seqs["a"], seqs["b"], seqs["c"], spec=s)
    if s.startswith("rowseq:"):
        a = parse_sequence(s[7:])
        return Triangle(lambda n, k: a(n), spec=s)
    if s.startswith("colseq:"):
        a = parse_sequence(s[7:])
        return Triangle(lambda n, k: a(k), spec=s)
    if s.startswith("diagseq:"):
        a = parse_sequence(s[8:])
        return Triangle(lambda n, k: a(n - k), spec=s)
    m = _SHIFT.match(s)
    if m:
        inner = build_triangle(m.group(3))
        t = shift(inner, int(m.group(1)), int(m.group(2)))
        t.spec = s
        return t
    if s.startswith("aerate(") and s.endswith(")"):
        t = aerate(build_triangle(s[7:-1]))
        t.spec = s
        return t
    if s.startswith("file:"):
        t = Triangle.from_window(load_window(s[5:]))
        t.spec = s
        return t
    raise SpecError(f"unknown triangle spec {spec!r}")


# --------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """The first ``N`` rows of a lower-triangular matrix, row n of length n+1."""

    rows: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if not rows:
            raise ValueError("a window needs at least one row")
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} outside window of {len(self.rows)} rows")
        if k < 0 or k > n:
            return ZERO
        return self.rows[n][k]

    def __getitem__(self, nk):
        return self.entry(*nk)

    def truncate(self, n_rows: int) -> "Window":
        if not 1 <= n_rows <= len(self.rows):
            raise ValueError(f"cannot truncate {len(self.rows)} rows to {n_rows}")
        return Window(self.rows[:n_rows], name=self.name)

    def all_nonzero(self) -> bool:
        return all(x != 0 for row in self.rows for x in row)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.rows]

    @classmethod
    def from_lists(cls, rows: Iterable[Iterable], name: str = "") -> "Window":
        return cls(tuple(tuple(parse_rational(x) for x in row) for row in rows), name=name)

    @classmethod
    def identity(cls, n_rows: int) -> "Window":
        return cls(tuple(tuple(ONE if k == n else ZERO for k in range(n + 1))
                         for n in range(n_rows)), name="identity")


def materialize(t, n_rows: int) -> Window:
    if n_rows < 1:
        raise ValueError(f"n_rows must be >= 1, got {n_rows}")
    t = build_triangle(t)
    return Window(tuple(tuple(t.entry(n, k) for k in range(n + 1)) for n in range(n_rows)),
                  name=t.name)


# --------------------------------------------------------------------------
# JSON schema: {"name": str, "rows": [[literal, ...], ...]}


def window_to_json(w: Window) -> dict:
    return {"name": w.name, "rows": [[format_rational(x) for x in row] for row in w.rows]}


def window_from_json(obj) -> Window:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError("triangle JSON must be an object with a 'rows' array")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ValueError("triangle JSON 'name' must be a string")
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("triangle JSON 'rows' must be a list of lists")
    return Window.from_lists(rows, name=name)


def save_window(w: Window, path) -> None:
    Path(path).write_text(json.dumps(window_to_json(w), indent=1) + "\n")


def load_window(path) -> Window:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON ({e})") from None
    return window_from_json(obj)
