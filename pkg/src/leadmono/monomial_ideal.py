"""Monomial ideals: membership, minimal generators, colon and sum by a
variable, and the recursive Hilbert-series computation (HPS).
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from typing import Callable, Iterable, Sequence

from .monomial import Monomial, format_monomial, parse_monomial
from .series import TruncatedSeries, inv_one_minus_z_pow_n

Exps = tuple  # plain exponent tuple; the HPS recursion avoids Monomial overhead


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal(gens: Iterable[Exps]) -> list[Exps]:
    """Minimal generators, ascending by degree (ties by descending grevlex)."""
    uniq = sorted(set(map(tuple, gens)), key=lambda g: (sum(g), g[::-1]))
    kept: list[Exps] = []
    for g in uniq:
        if not any(_divides(k, g) for k in kept):
            kept.append(g)
    return kept


class MonomialIdeal:
    """An immutable monomial ideal held by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by ``1``.
    Generators are bucketed by degree so that :meth:`contains` scans from
    the lowest degree and stops at the first divisor.
    """

    __slots__ = ("n", "generators", "_by_degree")

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise ValueError("need n >= 1")
        gens = [tuple(int(e) for e in g) for g in generators]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
        self.n = n
        self.generators: tuple[Monomial, ...] = tuple(Monomial(g) for g in _minimal(gens))
        buckets: dict[int, list[Monomial]] = {}
        for g in self.generators:
            buckets.setdefault(g.degree, []).append(g)
        self._by_degree = tuple(sorted(buckets.items()))

    @classmethod
    def from_minimal(cls, n: int, generators: Iterable[Sequence[int]]) -> "MonomialIdeal":
        """Wrap generators already known to be minimal, skipping the quadratic check."""
        self = cls.__new__(cls)
        gens = sorted({tuple(int(e) for e in g) for g in generators}, key=lambda g: (sum(g), g[::-1]))
        if any(len(g) != n for g in gens):
            raise ValueError(f"generator length differs from n={n}")
        self.n = n
        self.generators = tuple(Monomial(g) for g in gens)
        buckets: dict[int, list[Monomial]] = {}
        for g in self.generators:
            buckets.setdefault(g.degree, []).append(g)
        self._by_degree = tuple(sorted(buckets.items()))
        return self

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and set(self.generators) == set(other.generators)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.generators)))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators))
        return f"MonomialIdeal(n={self.n}, <{gens}>)"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree == 0

    def generators_of_degree(self, d: int) -> list[Monomial]:
        for deg, gens in self._by_degree:
            if deg == d:
                return list(gens)
        return []

    def contains(self, m: Sequence[int]) -> bool:
        if len(m) != self.n:
            raise ValueError(f"monomial has {len(m)} exponents, ideal lives in n={self.n}")
        dm = sum(m)
        for deg, gens in self._by_degree:
            if deg > dm:
                break
            for g in gens:
                if _divides(g, m):
                    return True
        return False

    __contains__ = contains

    def colon(self, v: int) -> "MonomialIdeal":
        """``J : x_v``."""
        return MonomialIdeal(self.n, _colon(list(self.generators), v - 1))

    def add_variable(self, v: int) -> "MonomialIdeal":
        """``J + <x_v>``."""
        return MonomialIdeal(self.n, _add_variable(list(self.generators), v - 1, self.n))

    def hilbert_series(self, cap: int, pivot: str = "most_frequent") -> TruncatedSeries:
        return hps(self, cap, pivot)

    def hilbert_function(self, d: int) -> int:
        return hilbert_function(self, d)

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [format_monomial(g) for g in self.generators]}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        n = int(data["n"])
        return cls(n, [parse_monomial(g, n) for g in data["generators"]])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(n, gens)


def contains(J: MonomialIdeal, m: Sequence[int]) -> bool:
    return J.contains(m)


def colon_by_variable(J: MonomialIdeal, v: int) -> MonomialIdeal:
    return J.colon(v)


def add_variable(J: MonomialIdeal, v: int) -> MonomialIdeal:
    return J.add_variable(v)


def _colon(gens: list[Exps], i: int) -> list[Exps]:
    out = []
    for g in gens:
        if g[i]:
            g = g[:i] + (g[i] - 1,) + g[i + 1 :]
        out.append(g)
    return _minimal(out)


def _add_variable(gens: list[Exps], i: int, n: int) -> list[Exps]:
    # Dropping generators keeps minimality, and x_i divides nothing that was kept.
    var = tuple(1 if k == i else 0 for k in range(n))
    if any(sum(g) == 0 for g in gens):
        return [tuple([0] * n)]
    return [g for g in gens if not g[i]] + [var]


def _pivot_most_frequent(gens: list[Exps], n: int) -> int:
    allowed = set()
    counts = Counter()
    for g in gens:
        support = [k for k in range(n) if g[k]]
        counts.update(support)
        if sum(g) > 1:
            allowed.update(support)
    return min(allowed, key=lambda k: (-counts[k], k))


def _pivot_first(gens: list[Exps], n: int) -> int:
    return min(k for g in gens if sum(g) > 1 for k in range(n) if g[k])


PIVOTS: dict[str, Callable[[list[Exps], int], int]] = {
    "most_frequent": _pivot_most_frequent,
    "first": _pivot_first,
}


def _hps(gens: list[Exps], n: int, cap: int, pivot) -> list[int]:
    if cap < 0:
        return []
    # generators above the cap cannot affect coefficients up to the cap
    gens = [g for g in gens if sum(g) <= cap]
    if not gens:
        return list(inv_one_minus_z_pow_n(n, cap).coeffs)
    if len(gens) == 1 and sum(gens[0]) == 0:
        return [0] * (cap + 1)
    if all(sum(g) == 1 for g in gens):
        return list(inv_one_minus_z_pow_n(n - len(gens), cap).coeffs)
    i = pivot(gens, n)
    plus = _hps(_add_variable(gens, i, n), n, cap, pivot)
    quot = _hps(_colon(gens, i), n, cap - 1, pivot)
    for k, c in enumerate(quot, start=1):
        plus[k] += c
    return plus


def hps(J: MonomialIdeal, cap: int, pivot: str = "most_frequent") -> TruncatedSeries:
    """Hilbert series of ``R/J`` up to degree ``cap``.

    Four cases on the minimal generators ``T``: empty gives ``1/(1-z)^n``;
    ``{1}`` gives 0; ``p`` variables give ``1/(1-z)^(n-p)``; otherwise
    ``H(J + <x_i>) + z H(J : x_i)`` for a pivot variable ``x_i`` taken from a
    generator of degree > 1.  The pivot rule does not change the result.
    """
    if cap < 0:
        raise ValueError("need cap >= 0")
    rule = PIVOTS[pivot]
    gens = [tuple(g) for g in J.generators]
    depth = sum(sum(g) for g in gens) + J.n + 100
    if depth > sys.getrecursionlimit():
        sys.setrecursionlimit(depth)
    return TruncatedSeries(_hps(gens, J.n, cap, rule))


def hilbert_function(J: MonomialIdeal, d: int) -> int:
    """Number of degree-``d`` monomials outside ``J``."""
    if d < 0:
        return 0
    return hps(J, d)[d]
