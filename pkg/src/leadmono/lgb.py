"""Leading monomials of a minimal Groebner basis of a generic sequence.

The leading monomial ideal of a generic homogeneous sequence is assumed to be
weakly reverse-lexicographic, with Hilbert series
``[prod (1 - z^d_i) / (1 - z)^n]``.  Given that, the generators of each degree
are the ``N_d`` grevlex-largest standard monomials, where ``N_d`` is the gap
between the current count of standard monomials and the target Hilbert
function.  No polynomial arithmetic is involved.

Candidate tiers for computing ``B_d`` (degree-``d`` monomials outside the
ideal of generators of degree ``< d``) from ``B~_{d-1}`` (standard monomials
of degree ``d - 1``):

0. every monomial of degree ``d``;
1. ``x_i * b`` for all ``i`` and ``b`` in ``B~_{d-1}``;
2. as 1 but only ``i >= t``, where ``x_t`` is the smallest variable of the
   largest element of ``B~_{d-1}``;
3. only ``x_t * b`` is tested; ``x_i * b`` with ``i > t`` is accepted untested;
4. as 3, testing only against generators divisible by ``x_t``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field

import numpy as np

from ._kernels import outside_ideal
from .instance import InstanceSpec
from .monomial import (
    Monomial,
    degree_matrix,
    exponent_dtype,
    format_monomial,
    grevlex_order,
    parse_monomial,
    sort_unique_rows,
    to_monomials,
)
from .monomial_ideal import MonomialIdeal, hps
from .series import BracketSeries, artinian_cap, generic_hilbert_series

log = logging.getLogger(__name__)

TIERS = (0, 1, 2, 3, 4)
TRACE_FIELDS = ("d", "candidates_checked", "b_d_size", "n_d", "relevant_generators")


class GenericityError(ArithmeticError):
    """``N_d < 0``: the conjectured Hilbert series cannot hold for this input."""

    def __init__(self, d: int, n_d: int):
        super().__init__(f"N_{d} = {n_d} < 0 at degree {d}: genericity assumption violated")
        self.d = d
        self.n_d = n_d


class InconsistentStateError(RuntimeError):
    pass


@dataclass
class DegreeTrace:
    d: int
    candidates_checked: int
    b_d_size: int
    n_d: int
    relevant_generators: int
    # instrumentation for benchmarks; not part of the serialized trace
    pre_checked: int = field(default=0, compare=False)
    divisibility_tests: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in TRACE_FIELDS}

    @classmethod
    def from_dict(cls, data: dict) -> "DegreeTrace":
        return cls(**{k: int(data[k]) for k in TRACE_FIELDS})


@dataclass
class LgbResult:
    spec: InstanceSpec
    D: int
    L_G: MonomialIdeal
    traces: list[DegreeTrace]
    tier: int | None = None

    def by_degree(self) -> dict[int, list[Monomial]]:
        out: dict[int, list[Monomial]] = {}
        for g in sorted(self.L_G.generators, reverse=True):
            out.setdefault(g.degree, []).append(g)
        return dict(sorted(out.items()))

    def monomial_strings(self) -> list[str]:
        return [format_monomial(g) for gens in self.by_degree().values() for g in gens]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "D": self.D,
            "L_G": self.monomial_strings(),
            "traces": [t.to_dict() for t in self.traces],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "LgbResult":
        spec = InstanceSpec.from_dict(data["spec"])
        gens = [parse_monomial(s, spec.n) for s in data["L_G"]]
        return cls(
            spec=spec,
            D=int(data["D"]),
            L_G=MonomialIdeal(spec.n, gens),
            traces=[DegreeTrace.from_dict(t) for t in data["traces"]],
        )

    def traces_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TRACE_FIELDS)
        for t in self.traces:
            w.writerow([getattr(t, k) for k in TRACE_FIELDS])
        return buf.getvalue()


def target_series(spec: InstanceSpec, D: int | None = None) -> BracketSeries:
    """Generic Hilbert series expanded far enough to answer every ``h(d)``, ``d <= D + 1``."""
    if D is None:
        D = degree_bound(spec)
    cap = max(D + 1, artinian_cap(spec) if spec.n <= spec.m else 1)
    return generic_hilbert_series(spec, cap)


def degree_bound(spec: InstanceSpec) -> int:
    """Highest degree that can carry a minimal generator.

    ``1 + deg H`` (the degree of regularity) when ``n <= m``; the Macaulay
    bound ``sum(d_i - 1) + 1`` otherwise.
    """
    if spec.n <= spec.m:
        h = generic_hilbert_series(spec, artinian_cap(spec))
        if not h.finite:
            raise InconsistentStateError(f"Hilbert series of {spec} did not terminate")
        return len(h.coeffs)
    return spec.macaulay_bound


@dataclass
class LgbState:
    """Degree-loop state just before processing degree ``d``."""

    n: int
    d: int
    D: int
    target: BracketSeries
    b_tilde_prev: np.ndarray  # B~_{d-1}, descending grevlex
    generators: list[np.ndarray] = field(default_factory=list)  # one block per degree

    @classmethod
    def start(cls, spec: InstanceSpec, D: int | None = None, extra_degrees: int = 0) -> "LgbState":
        D = degree_bound(spec) if D is None else D
        dtype = exponent_dtype(D + extra_degrees)
        return cls(
            n=spec.n,
            d=1,
            D=D,
            target=target_series(spec, D + extra_degrees),
            b_tilde_prev=np.zeros((1, spec.n), dtype=dtype),
        )

    def generator_rows(self) -> np.ndarray:
        """All generators so far, ascending by degree."""
        blocks = [g for g in self.generators if g.shape[0]]
        if not blocks:
            return np.zeros((0, self.n), dtype=self.b_tilde_prev.dtype)
        return np.vstack(blocks)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_minimal(self.n, self.generator_rows().tolist())


@dataclass
class Candidates:
    to_check: np.ndarray
    pre_checked: np.ndarray
    x_t: int | None  # 1-based


def _times_variables(rows: np.ndarray, first: int, last: int) -> np.ndarray:
    """Rows ``x_i * b`` for 0-based ``first <= i < last``, deduplicated and sorted."""
    if first >= last or rows.shape[0] == 0:
        return rows[:0]
    blocks = []
    for i in range(first, last):
        block = rows.copy()
        block[:, i] += 1
        blocks.append(block)
    return sort_unique_rows(np.vstack(blocks))


def _setdiff_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rows of ``a`` (unique) not in ``b`` (unique), descending grevlex."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return a
    both = np.vstack([b, a])
    tag = np.concatenate([np.zeros(b.shape[0], np.int8), np.ones(a.shape[0], np.int8)])
    order = np.lexsort((tag,) + tuple(both.T))
    both, tag = both[order], tag[order]
    dup_of_b = np.zeros(both.shape[0], dtype=bool)
    dup_of_b[1:] = np.all(both[1:] == both[:-1], axis=1) & (tag[:-1] == 0)
    return both[(tag == 1) & ~dup_of_b]


def split_variable(b_tilde_prev: np.ndarray, d: int) -> int:
    """0-based ``t``: the smallest variable of the largest element of ``B~_{d-1}``.

    At ``d = 1`` the only element is ``1``, and ``t`` is taken to be ``x_1``.
    """
    if b_tilde_prev.shape[0] == 0:
        raise InconsistentStateError(f"B~_{d - 1} is empty while processing degree {d}")
    if d == 1:
        return 0
    return int(np.flatnonzero(b_tilde_prev[0]).max())


def candidates(tier: int, state: LgbState) -> Candidates:
    n, d, prev = state.n, state.d, state.b_tilde_prev
    if tier == 0:
        return Candidates(degree_matrix(n, d, prev.dtype), prev[:0], None)
    t = split_variable(prev, d)
    if tier == 1:
        return Candidates(_times_variables(prev, 0, n), prev[:0], t + 1)
    if tier == 2:
        return Candidates(_times_variables(prev, t, n), prev[:0], t + 1)
    if tier in (3, 4):
        to_check = _times_variables(prev, t, t + 1)
        pre = _setdiff_rows(_times_variables(prev, t + 1, n), to_check)
        return Candidates(to_check, pre, t + 1)
    raise ValueError(f"unknown tier {tier}")


def _relevant_rows(tier: int, gens: np.ndarray, x_t: int | None) -> np.ndarray:
    if tier == 4:
        if x_t is None:
            raise ValueError("tier 4 needs x_t")
        return gens[gens[:, x_t - 1] > 0]
    return gens


def relevant_generators(tier: int, L_G: MonomialIdeal, d: int, x_t: int | None = None) -> set[Monomial]:
    """Generators of degree ``<= d - 1`` consulted when testing candidates at degree ``d``."""
    gens = [g for g in L_G.generators if g.degree <= d - 1]
    if tier == 4:
        if x_t is None:
            raise ValueError("tier 4 needs x_t")
        gens = [g for g in gens if g[x_t - 1] > 0]
    return set(gens)


def advance(state: LgbState, tier: int, threads: int = 1) -> DegreeTrace:
    """Process degree ``state.d`` in place and return its trace."""
    d = state.d
    if state.b_tilde_prev.shape[0] == 0:
        raise InconsistentStateError(f"B~_{d - 1} is empty while processing degree {d} <= D={state.D}")
    cand = candidates(tier, state)
    rel = _relevant_rows(tier, state.generator_rows(), cand.x_t)
    mask, tests = outside_ideal(cand.to_check, rel, threads=threads)
    passed = cand.to_check[mask]
    if cand.pre_checked.shape[0]:
        b_d = np.vstack([passed, cand.pre_checked])
        b_d = b_d[grevlex_order(b_d)]
    else:
        b_d = passed  # tiers 0-2 candidates are already sorted
    n_d = b_d.shape[0] - state.target.coefficient(d)
    if n_d < 0:
        raise GenericityError(d, n_d)
    state.generators.append(b_d[:n_d])
    state.b_tilde_prev = b_d[n_d:]
    state.d = d + 1
    trace = DegreeTrace(
        d=d,
        candidates_checked=int(cand.to_check.shape[0]),
        b_d_size=int(b_d.shape[0]),
        n_d=int(n_d),
        relevant_generators=int(rel.shape[0]),
        pre_checked=int(cand.pre_checked.shape[0]),
        divisibility_tests=tests,
    )
    log.debug("tier %d %s", tier, trace)
    return trace


def lgb_improved(spec: InstanceSpec, tier: int = 4, threads: int = 1, extra_degrees: int = 0) -> LgbResult:
    """Degree loop ``d = 1..D`` with no Hilbert series recomputation.

    ``extra_degrees`` keeps going past ``D`` (stopping early once no
    standard monomial is left) so callers can confirm that no generator
    appears beyond the bound.
    """
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}")
    D = degree_bound(spec)
    state = LgbState.start(spec, D, extra_degrees)
    traces = []
    while state.d <= D + extra_degrees:
        if state.d > D and state.b_tilde_prev.shape[0] == 0:
            break
        traces.append(advance(state, tier, threads))
    return LgbResult(spec=spec, D=state.D, L_G=state.ideal(), traces=traces, tier=tier)


def lgb_basic(spec: InstanceSpec, threads: int = 1) -> LgbResult:
    """The plain loop: scan all of ``M_d`` and stop once HPS matches the target.

    Series are compared over degrees ``0..D+1``.
    """
    D = degree_bound(spec)
    cap = D + 1
    target = target_series(spec, D)
    want = target.prefix(cap)
    n = spec.n
    dtype = exponent_dtype(cap)
    gens: list[np.ndarray] = []
    traces: list[DegreeTrace] = []

    def current() -> MonomialIdeal:
        rows = [g for g in gens if g.shape[0]]
        return MonomialIdeal.from_minimal(n, np.vstack(rows).tolist() if rows else [])

    d = 0
    while hps(current(), cap).coeffs != want:
        if d > cap:
            raise InconsistentStateError(f"Hilbert series still differs after degree {cap}")
        m_d = degree_matrix(n, d, dtype)
        rows = [g for g in gens if g.shape[0]]
        rel = np.vstack(rows) if rows else m_d[:0]
        mask, tests = outside_ideal(m_d, rel, threads=threads)
        b_d = m_d[mask]
        n_d = b_d.shape[0] - target.coefficient(d)
        if n_d < 0:
            raise GenericityError(d, n_d)
        gens.append(b_d[:n_d])
        if d >= 1:
            traces.append(
                DegreeTrace(d, int(m_d.shape[0]), int(b_d.shape[0]), int(n_d), int(rel.shape[0]),
                            divisibility_tests=tests)
            )
        d += 1
    return LgbResult(spec=spec, D=D, L_G=current(), traces=traces, tier=None)


def weakly_revlex_check(L_G: MonomialIdeal) -> bool:
    """Every monomial of a generator's degree that beats it in grevlex lies in the ideal."""
    n = L_G.n
    gens_sorted = sorted(L_G.generators, key=lambda g: g.degree)
    if not gens_sorted:
        return True
    dtype = exponent_dtype(gens_sorted[-1].degree)
    for deg in sorted({g.degree for g in gens_sorted}):
        lowest = min(L_G.generators_of_degree(deg))
        if deg == 0:
            continue
        m_d = degree_matrix(n, deg, dtype)
        # rows are descending, so everything before `lowest` is larger
        pos = int(np.flatnonzero(np.all(m_d == np.asarray(lowest, dtype=dtype), axis=1))[0])
        upto = np.array([g for g in gens_sorted if g.degree <= deg], dtype=dtype)
        mask, _ = outside_ideal(m_d[:pos], upto)
        if mask.any():
            return False
    return True


def standard_monomials(result: LgbResult, d: int) -> list[Monomial]:
    """Degree-``d`` monomials outside ``<L_G>`` (brute force; small cases only)."""
    m_d = degree_matrix(result.spec.n, d)
    gens = np.array([g for g in result.L_G.generators if g.degree <= d], dtype=m_d.dtype)
    if gens.size == 0:
        return to_monomials(m_d)
    mask, _ = outside_ideal(m_d, gens.reshape(-1, result.spec.n))
    return to_monomials(m_d[mask])
