"""Instance description ``(n, m, {d_i})`` of a generic homogeneous sequence."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    m: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")
        if len(self.degrees) != self.m:
            raise ValueError(f"expected {self.m} degrees, got {len(self.degrees)}")
        if any(d < 1 for d in self.degrees):
            raise ValueError(f"all degrees must be >= 1, got {self.degrees}")

    @classmethod
    def of(cls, n: int, degrees) -> "InstanceSpec":
        degrees = tuple(degrees)
        return cls(n, len(degrees), degrees)

    @property
    def macaulay_bound(self) -> int:
        return sum(d - 1 for d in self.degrees) + 1

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "degrees": list(self.degrees)}

    @classmethod
    def from_dict(cls, data: dict) -> "InstanceSpec":
        return cls(int(data["n"]), int(data["m"]), tuple(data["degrees"]))

    def __str__(self) -> str:
        return f"n={self.n}, m={self.m}, d={format_degrees(self.degrees)}"


def parse_degrees(text: str) -> tuple[int, ...]:
    """Parse ``"2,2,3,4"``; ``"v^k"`` repeats ``v`` k times, so ``"2^19"`` is 19 twos."""
    out: list[int] = []
    for item in text.replace(" ", "").split(","):
        if not item:
            raise ValueError(f"empty entry in degree list {text!r}")
        value, sep, count = item.partition("^")
        try:
            v = int(value)
            k = int(count) if sep else 1
        except ValueError:
            raise ValueError(f"bad degree entry {item!r}") from None
        if k < 0:
            raise ValueError(f"negative repeat count in {item!r}")
        out.extend([v] * k)
    return tuple(out)


def format_degrees(degrees) -> str:
    """Compact form of a degree list, grouping runs as ``v^k``."""
    parts = []
    i = 0
    while i < len(degrees):
        j = i
        while j < len(degrees) and degrees[j] == degrees[i]:
            j += 1
        run = j - i
        parts.append(f"{degrees[i]}^{run}" if run > 2 else ",".join([str(degrees[i])] * run))
        i = j
    return ",".join(parts)
