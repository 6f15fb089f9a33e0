"""Exponent-vector monomials under the graded reverse lexicographic order.

Variables are indexed from 1, and ``x1`` is the largest variable.  Two
representations are used throughout the package:

* :class:`Monomial` -- a hashable tuple of exponents, for API-level work.
* ``numpy`` exponent matrices (one row per monomial) -- for the bulk
  candidate sets of the LGB degree loop.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Iterator

import numpy as np


class Monomial(tuple):
    """A monomial ``x1^a1 * ... * xn^an`` stored as its exponent tuple.

    Equality and hashing are those of the exponent tuple; the rich
    comparisons implement grevlex.  All monomials taking part in one
    comparison must live in the same ring (same ``n``).
    """

    def __new__(cls, exponents: Iterable[int]) -> "Monomial":
        self = super().__new__(cls, (int(e) for e in exponents))
        if any(e < 0 for e in self):
            raise ValueError(f"negative exponent in {tuple(self)}")
        self._degree = sum(self)
        return self

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, v: int) -> "Monomial":
        """The monomial ``x_v`` (1-based) in ``n`` variables."""
        _check_var(n, v)
        e = [0] * n
        e[v - 1] = 1
        return cls(e)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(self)

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return all(a <= b for a, b in zip(self, other))

    def times(self, v: int) -> "Monomial":
        """Multiply by the variable ``x_v``."""
        _check_var(len(self), v)
        e = list(self)
        e[v - 1] += 1
        return Monomial(e)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            _check_same_ring(self, other)
            return Monomial(a + b for a, b in zip(self, other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Monomial):
            if not other.divides(self):
                raise ValueError(f"{other} does not divide {self}")
            return Monomial(a - b for a, b in zip(self, other))
        return NotImplemented

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def smallest_variable(self) -> int:
        """Largest index ``i`` with a positive exponent (``x_n`` is the smallest variable)."""
        for i in range(len(self) - 1, -1, -1):
            if self[i]:
                return i + 1
        raise ValueError("no variable present in the monomial 1")

    def __lt__(self, other):
        return grevlex_cmp(self, other) < 0

    def __le__(self, other):
        return grevlex_cmp(self, other) <= 0

    def __gt__(self, other):
        return grevlex_cmp(self, other) > 0

    def __ge__(self, other):
        return grevlex_cmp(self, other) >= 0

    # tuple.__eq__/__hash__ are inherited unchanged; restate for clarity since
    # defining comparison methods does not touch them.
    __eq__ = tuple.__eq__
    __hash__ = tuple.__hash__

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, n={len(self)})"

    def __reduce__(self):
        return (Monomial, (tuple(self),))


def _check_var(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise ValueError(f"variable index {v} outside 1..{n}")


def _check_same_ring(a, b) -> None:
    if len(a) != len(b):
        raise ValueError(f"monomials live in different rings (n={len(a)} vs n={len(b)})")


def grevlex_key(exponents) -> tuple:
    """Sort key: larger key means larger in grevlex."""
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def grevlex_cmp(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller than, equal to, or greater than ``b``."""
    _check_same_ring(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for i in range(len(a) - 1, -1, -1):
        if a[i] != b[i]:
            # smaller exponent in the rightmost differing slot wins
            return 1 if a[i] < b[i] else -1
    return 0


def divides(a, b) -> bool:
    _check_same_ring(a, b)
    return all(x <= y for x, y in zip(a, b))


def mul(a: Monomial, v: int) -> Monomial:
    return Monomial(a).times(v)


def smallest_variable(a) -> int:
    return Monomial(a).smallest_variable()


def _descending(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # Descending grevlex is ascending lex on (a_n, a_{n-1}, ..., a_1), so
    # the last exponent is the outer loop.
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for last in range(d + 1):
        for head in _descending(n - 1, d - last):
            yield head + (last,)


def enumerate_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of total degree ``d`` in ``n`` variables, descending grevlex."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return [Monomial(e) for e in _descending(n, d)]


def count_degree(n: int, d: int) -> int:
    """Number of degree-``d`` monomials in ``n`` variables."""
    return comb(n + d - 1, d)


def exponent_dtype(max_degree: int):
    return np.uint8 if max_degree < 256 else np.uint16


def degree_matrix(n: int, d: int, dtype=None) -> np.ndarray:
    """Exponent matrix of all degree-``d`` monomials, rows in descending grevlex.

    Built block-wise on the last exponent, so no sort is needed.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    dtype = np.dtype(dtype or exponent_dtype(d))
    # layer[e] holds the degree-e block in the first k variables
    layer = [np.full((1, 1), e, dtype=dtype) for e in range(d + 1)]
    for k in range(2, n + 1):
        nxt = []
        for e in range(d + 1):
            blocks = []
            for last in range(e + 1):
                head = layer[e - last]
                blocks.append(np.hstack([head, np.full((head.shape[0], 1), last, dtype=dtype)]))
            nxt.append(np.vstack(blocks))
        layer = nxt
    return layer[d]


def grevlex_order(rows: np.ndarray) -> np.ndarray:
    """Permutation putting equal-degree exponent rows in descending grevlex order."""
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=np.intp)
    # np.lexsort treats the last key as primary: column n-1 first.
    return np.lexsort(rows.T)


def sort_unique_rows(rows: np.ndarray) -> np.ndarray:
    """Sort equal-degree exponent rows descending in grevlex and drop duplicates."""
    if rows.shape[0] <= 1:
        return rows
    rows = rows[grevlex_order(rows)]
    keep = np.empty(rows.shape[0], dtype=bool)
    keep[0] = True
    np.any(rows[1:] != rows[:-1], axis=1, out=keep[1:])
    return rows[keep]


def to_monomials(rows: np.ndarray) -> list[Monomial]:
    return [Monomial(r) for r in rows.tolist()]


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_monomial(exponents) -> str:
    """Render as ``x1^2*x3``; the unit monomial renders as ``1``."""
    parts = []
    for i, e in enumerate(exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`format_monomial`.  Repeated factors multiply."""
    text = text.strip().replace(" ", "")
    e = [0] * n
    if text == "1":
        return Monomial(e)
    if not text:
        raise ValueError("empty monomial text")
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        v = int(match.group(1))
        _check_var(n, v)
        e[v - 1] += int(match.group(2) or 1)
    return Monomial(e)
