"""Truncated integer power series and the conjectured Hilbert series of a
generic sequence.

Coefficients are Python ``int`` so arithmetic never wraps around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import InstanceSpec


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum c_i z^i`` known exactly for ``0 <= i <= cap``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs cap >= 0")

    @classmethod
    def zero(cls, cap: int) -> "TruncatedSeries":
        return cls((0,) * (cap + 1))

    @classmethod
    def one(cls, cap: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * cap)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.cap != other.cap:
            raise ValueError(f"cap mismatch: {self.cap} vs {other.cap}")
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z^k``, keeping the cap."""
        c = self.coeffs
        return TruncatedSeries((0,) * min(k, len(c)) + c[: max(len(c) - k, 0)])

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ValueError(f"cannot extend a series known to {self.cap} up to {cap}")
        return TruncatedSeries(self.coeffs[: cap + 1])


@dataclass(frozen=True)
class BracketSeries:
    """Result of the bracket truncation: the positive prefix of a series.

    ``finite`` is True when a coefficient ``<= 0`` was seen at index
    ``len(coeffs)``.  When False, the prefix only certifies positivity up to
    the cap it was computed with; nothing is known beyond it.
    """

    coeffs: tuple[int, ...]
    finite: bool

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(c <= 0 for c in self.coeffs):
            raise ValueError("bracket series coefficients must be positive")

    @property
    def degree(self) -> int:
        """Degree of the polynomial ``[h]``; -1 for the empty series."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        if d < 0:
            return 0
        if d < len(self.coeffs):
            return self.coeffs[d]
        if self.finite:
            return 0
        raise ValueError(f"coefficient {d} lies beyond the computed prefix of an infinite series")

    def prefix(self, cap: int) -> tuple[int, ...]:
        return tuple(self.coefficient(i) for i in range(cap + 1))

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs), "finite": self.finite}

    @classmethod
    def from_dict(cls, data: dict) -> "BracketSeries":
        return cls(tuple(data["coeffs"]), bool(data["finite"]))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            else:
                pref = "" if c == 1 else str(c)
                terms.append(f"{pref}z" if i == 1 else f"{pref}z^{i}")
        text = " + ".join(terms) if terms else "0"
        return text if self.finite else text + " + ..."


def mul_one_minus_z_pow(s: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by ``(1 - z^d)``."""
    if d < 1:
        raise ValueError("need d >= 1")
    c = s.coeffs
    return TruncatedSeries(c[i] - (c[i - d] if i >= d else 0) for i in range(len(c)))


def div_one_minus_z_pow(s: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by ``1 / (1 - z^d)``: a prefix sum with stride ``d``."""
    if d < 1:
        raise ValueError("need d >= 1")
    out = list(s.coeffs)
    for i in range(d, len(out)):
        out[i] += out[i - d]
    return TruncatedSeries(out)


def inv_one_minus_z_pow_n(n: int, cap: int) -> TruncatedSeries:
    """Coefficients of ``1 / (1 - z)^n`` up to ``cap``."""
    if n < 0 or cap < 0:
        raise ValueError("need n >= 0 and cap >= 0")
    s = TruncatedSeries.one(cap)
    for _ in range(n):
        s = div_one_minus_z_pow(s, 1)
    return s


def bracket(s: TruncatedSeries) -> BracketSeries:
    for k, c in enumerate(s.coeffs):
        if c <= 0:
            return BracketSeries(s.coeffs[:k], True)
    return BracketSeries(s.coeffs, False)


def generic_hilbert_series(spec: InstanceSpec, cap: int) -> BracketSeries:
    """``[prod (1 - z^d_i) / (1 - z)^n]`` expanded up to ``cap``."""
    if cap < 1:
        raise ValueError("need cap >= 1")
    s = inv_one_minus_z_pow_n(spec.n, cap)
    for d in spec.degrees:
        s = mul_one_minus_z_pow(s, d)
    return bracket(s)


def artinian_cap(spec: InstanceSpec) -> int:
    """A cap at which the bracket of an ``n <= m`` instance is sure to terminate.

    For ``m >= n`` the expansion is a polynomial of degree at most
    ``sum d_i``, so its coefficient at ``sum d_i + 1`` is zero.
    """
    return sum(spec.degrees) + 1
