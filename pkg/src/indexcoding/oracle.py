"""Independent ground truth: optimal scalar-linear GF(2) rate and MAIS bound.

The optimal-rate search enumerates row SPACES rather than raw matrices: every
k-dimensional subspace of GF(2)^n has a unique reduced-row-echelon basis, so
enumerating pivot-column subsets times free-entry assignments visits each
candidate encoder exactly once (e.g. 1395 subspaces for k=3, n=6 instead of
2^18 matrices).  Decodability of a virtual (want d, side info S) is the rank
test: e_d must lie in rowspace(E) + span{e_i : i in S}.

The MAIS bound (maximum acyclic induced subgraph over virtuals with
pairwise-distinct wants) lower-bounds every code, linear or not, and is used
both to certify oracle outputs and to skip provably infeasible rates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import cover as cover_mod
from .errors import CapExceeded
from .graph import build_cross_neighbor_graph
from .instance import Instance, UnicastInstance, dedup, split_groupcast

DEFAULT_ORACLE_N_CAP = 10
DEFAULT_MAIS_CAP = 20


@dataclass(frozen=True)
class Gf2Matrix:
    """Rows are n-column GF(2) bit vectors packed into ints (bit i = column i)."""

    rows: tuple[int, ...]
    num_cols: int


@dataclass(frozen=True)
class RateReport:
    """The bound sandwich for one instance: mais <= oracle <= exact <= greedy.

    Fields are None when the corresponding computation exceeded its cap.  A
    positive gap (exact cover beats the oracle is impossible; oracle beating
    the exact cover) marks the instance as a counterexample to the claim that
    the clique-cover program is linearly optimal.
    """

    mais_bound: int | None
    oracle_rate: int | None
    cover_rate_exact: int | None
    cover_rate_greedy: int
    gap: int | None

    @property
    def counterexample(self) -> bool:
        return self.gap is not None and self.gap > 0

    def to_jsonable(self) -> dict:
        return {
            "mais": self.mais_bound,
            "oracle": self.oracle_rate,
            "cover_exact": self.cover_rate_exact,
            "cover_greedy": self.cover_rate_greedy,
            "gap": self.gap,
            "counterexample": self.counterexample,
        }


def gf2_reduce(vec: int, basis: dict[int, int]) -> int:
    """Reduce vec against a basis keyed by leading bit; 0 means in span."""
    while vec:
        lead = vec.bit_length() - 1
        row = basis.get(lead)
        if row is None:
            break
        vec ^= row
    return vec


def gf2_basis(rows: Sequence[int]) -> dict[int, int]:
    basis: dict[int, int] = {}
    for row in rows:
        reduced = gf2_reduce(row, basis)
        if reduced:
            basis[reduced.bit_length() - 1] = reduced
    return basis


def gf2_rank(rows: Sequence[int]) -> int:
    return len(gf2_basis(rows))


def can_decode(rows: Sequence[int], want: int, has_mask: int) -> bool:
    """Rank test: e_want in rowspace(rows) + span of the has unit vectors.

    Adding unit vectors for the side-info coordinates lets the receiver zero
    them at will, so the test reduces to span membership after masking those
    columns out of every row.
    """
    keep = ~has_mask
    target = 1 << (want - 1)
    basis = gf2_basis([r & keep for r in rows])
    return gf2_reduce(target, basis) == 0


def iter_rref_rowspaces(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield one canonical RREF basis per k-dimensional subspace of GF(2)^n.

    Pivot columns run through ascending combinations; an entry (row i, col j)
    is free exactly when j is a non-pivot column to the right of pivot i.
    Enumeration order is deterministic: pivot sets lexicographic, then free
    assignments in increasing integer order.
    """
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for j in range(n)
            if j not in pivot_set
            for i in range(k)
            if pivots[i] < j
        ]
        base = [1 << p for p in pivots]
        for bits in range(1 << len(free)):
            rows = base[:]
            for t, (i, j) in enumerate(free):
                if (bits >> t) & 1:
                    rows[i] |= 1 << j
            yield tuple(rows)


def _virtual_masks(u: UnicastInstance) -> list[tuple[int, int]]:
    """Distinct (want, has_mask) pairs; duplicates cannot change feasibility."""
    pairs = []
    seen = set()
    for v in u.virtuals:
        mask = 0
        for i in v.has:
            mask |= 1 << (i - 1)
        key = (v.want, mask)
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return pairs


def min_linear_rate_gf2(
    u: UnicastInstance,
    max_rate: int | None = None,
    n_cap: int = DEFAULT_ORACLE_N_CAP,
    with_witness: bool = False,
):
    """Least number of GF(2) codeword rows that lets every virtual decode.

    Searches rates upward starting from the MAIS bound (lower rates are
    provably infeasible), enumerating all row spaces of each dimension.  With
    ``max_rate`` set, returns None when no rate up to it is feasible.  With
    ``with_witness=True`` returns (rate, Gf2Matrix) instead, the witness
    being the first feasible basis in enumeration order.
    """
    n = u.num_messages
    if n > n_cap:
        raise CapExceeded(f"oracle cap exceeded ({n} messages > {n_cap})")
    receivers = _virtual_masks(u)
    if not receivers:
        return (0, Gf2Matrix((), n)) if with_witness else 0
    try:
        start = max(1, mais_lower_bound(u))
    except CapExceeded:
        start = 1
    limit = max_rate if max_rate is not None else n
    for beta in range(start, limit + 1):
        for rows in iter_rref_rowspaces(n, beta):
            if all(can_decode(rows, want, mask) for want, mask in receivers):
                if with_witness:
                    return beta, Gf2Matrix(rows, n)
                return beta
    return None


def mais_lower_bound(u: UnicastInstance, cap: int = DEFAULT_MAIS_CAP) -> int:
    """Largest acyclic set of virtuals with pairwise-distinct wants.

    Arcs go p -> q when q's want sits in p's side information; an acyclic
    witness of size t forces any code to spend t transmissions.  The search
    walks want-groups (pick at most one virtual per want, never two: equal
    wants can't both witness), pruning branches that close a directed cycle
    or cannot beat the current best.
    """
    k = len(u.virtuals)
    if k > cap:
        raise CapExceeded(f"MAIS cap exceeded ({k} virtuals > {cap})")
    groups: dict[int, list[int]] = {}
    for idx, v in enumerate(u.virtuals):
        groups.setdefault(v.want, []).append(idx)
    group_list = [groups[w] for w in sorted(groups)]
    virtuals = u.virtuals

    def arc(p: int, q: int) -> bool:
        return virtuals[q].want in virtuals[p].has

    def creates_cycle(chosen: list[int], new: int) -> bool:
        # chosen is acyclic; a new cycle must pass through `new`
        stack = [q for q in chosen if arc(new, q)]
        seen = set(stack)
        while stack:
            v = stack.pop()
            if arc(v, new):
                return True
            for q in chosen:
                if q not in seen and arc(v, q):
                    seen.add(q)
                    stack.append(q)
        return False

    best = 0
    chosen: list[int] = []

    def search(group_idx: int) -> None:
        nonlocal best
        best = max(best, len(chosen))
        if group_idx == len(group_list):
            return
        if len(chosen) + (len(group_list) - group_idx) <= best:
            return
        for cand in group_list[group_idx]:
            if not creates_cycle(chosen, cand):
                chosen.append(cand)
                search(group_idx + 1)
                chosen.pop()
        search(group_idx + 1)

    search(0)
    return best


def gap_report(
    inst: Instance,
    apply_dedup: bool = True,
    strict: bool = False,
    exact_cap: int = cover_mod.DEFAULT_EXACT_CAP,
    oracle_n_cap: int = DEFAULT_ORACLE_N_CAP,
    mais_cap: int = DEFAULT_MAIS_CAP,
) -> RateReport:
    """Assemble the full bound sandwich for one instance.

    Each field degrades to None independently when its cap is exceeded; the
    greedy cover always computes.  gap = cover_exact - oracle when both exist.
    """
    u = split_groupcast(inst)
    if apply_dedup:
        u = dedup(u)
    g = build_cross_neighbor_graph(u, strict=strict)
    greedy = cover_mod.greedy_cover(g).size
    try:
        exact: int | None = cover_mod.exact_min_cover(g, cap=exact_cap).size
    except CapExceeded:
        exact = None
    try:
        mais: int | None = mais_lower_bound(u, cap=mais_cap)
    except CapExceeded:
        mais = None
    try:
        oracle: int | None = min_linear_rate_gf2(u, n_cap=oracle_n_cap)
    except CapExceeded:
        oracle = None
    gap = exact - oracle if exact is not None and oracle is not None else None
    return RateReport(
        mais_bound=mais,
        oracle_rate=oracle,
        cover_rate_exact=exact,
        cover_rate_greedy=greedy,
        gap=gap,
    )
