"""Exhaustive Kauffman-state oracle on the standard 4-plat diagram.

The diagram of ``[a1, ..., a_{2k+1}]_+`` is drawn left to right on four
horizontal strands numbered 0 (top) to 3 (bottom). Both ends are capped,
joining strands 0-1 and 2-3. Twist region ``i`` (1-based) puts ``ai``
crossings on the middle pair (1, 2) when ``i`` is odd and on the lower pair
(2, 3) when ``i`` is even. All crossings are numbered left to right, and
bit ``k`` of a state chooses the smoothing of crossing ``k``:

* bit 0 is the A-smoothing, bit 1 the B-smoothing;
* with the handedness of the standard alternating plat, A is the horizontal
  smoothing on the middle pair and the vertical smoothing on the lower pair.

"Horizontal" keeps both strands running through the crossing; "vertical"
turns them back, joining the two left ends and the two right ends.

For every state the surface complexity is ``1 + c - |x|`` where ``|x|``
is the number of state circles. Minimising complexity over all ``2^c``
states gives the unoriented genus; the crosscap number equals it when some
minimiser is one-sided and exceeds it by one otherwise.
"""
from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from . import cf

DEFAULT_BUDGET = 22
MAX_STORED_STATES = 1 << 16
_CHUNK = 1 << 20


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"exhaustive sweep needs 2^{required} states but the budget is 2^{budget}; "
            f"rerun with --budget {required}"
        )
        self.required = required
        self.budget = budget


class StrandPair(enum.Enum):
    MIDDLE = (1, 2)
    LOWER = (2, 3)

    @property
    def top(self) -> int:
        return self.value[0]


@dataclass(frozen=True)
class TwistRegion:
    pair: StrandPair
    count: int
    # +1 right-handed, -1 left-handed
    handedness: int


@dataclass(frozen=True)
class PlatDiagram:
    twist_regions: tuple[TwistRegion, ...]

    @property
    def crossing_count(self) -> int:
        return sum(r.count for r in self.twist_regions)

    @property
    def crossings(self) -> tuple[StrandPair, ...]:
        return tuple(r.pair for r in self.twist_regions for _ in range(r.count))

    def vertical_when_set(self) -> tuple[bool, ...]:
        """Per crossing, whether bit 1 selects the vertical smoothing."""
        return tuple(p is StrandPair.MIDDLE for p in self.crossings)


@dataclass(frozen=True)
class StateGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return sorted(deg, reverse=True)


@dataclass(frozen=True)
class OracleResult:
    gamma_unoriented: int
    crosscap: int
    minimal_state_count: int
    some_minimal_nonorientable: bool
    max_circles: int
    minimal_states: tuple[int, ...]
    truncated: bool = False

    def as_record(self) -> dict:
        return {
            "gamma_unoriented": self.gamma_unoriented,
            "crosscap": self.crosscap,
            "minimal_state_count": self.minimal_state_count,
            "some_minimal_nonorientable": self.some_minimal_nonorientable,
            "max_circles": self.max_circles,
        }


def build_diagram(coeffs: Sequence[int]) -> PlatDiagram:
    if len(coeffs) % 2 == 0 or any(a <= 0 for a in coeffs):
        raise ValueError(f"expected an odd-length all-positive additive expansion, got {list(coeffs)}")
    regions = []
    for i, a in enumerate(coeffs):
        odd = i % 2 == 0
        regions.append(TwistRegion(
            StrandPair.MIDDLE if odd else StrandPair.LOWER,
            a,
            1 if odd else -1,
        ))
    return PlatDiagram(tuple(regions))


def diagram_for(f: Fraction) -> PlatDiagram:
    return build_diagram(cf.to_positive_additive(cf.normalize(f)))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _resolve(d: PlatDiagram, state: int) -> tuple[_UnionFind, list[tuple[int, int]]]:
    # Node 4*t + s is the arc on strand s between crossing t-1 and crossing t.
    # Returns the union-find over arcs and, per crossing, two arc nodes that
    # the crossing band connects.
    c = d.crossing_count
    uf = _UnionFind(4 * (c + 1))
    uf.union(0, 1)
    uf.union(2, 3)
    uf.union(4 * c, 4 * c + 1)
    uf.union(4 * c + 2, 4 * c + 3)
    ends = []
    flags = d.vertical_when_set()
    for k, pair in enumerate(d.crossings):
        s = pair.top
        left, right = 4 * k, 4 * (k + 1)
        for r in range(4):
            if r != s and r != s + 1:
                uf.union(left + r, right + r)
        vertical = bool((state >> k) & 1) == flags[k]
        if vertical:
            uf.union(left + s, left + s + 1)
            uf.union(right + s, right + s + 1)
            ends.append((left + s, right + s))
        else:
            uf.union(left + s, right + s)
            uf.union(left + s + 1, right + s + 1)
            ends.append((left + s, left + s + 1))
    return uf, ends


def _check_state(d: PlatDiagram, state: int) -> None:
    if not 0 <= state < (1 << d.crossing_count):
        raise ValueError(f"state {state} does not fit {d.crossing_count} crossings")


def count_state_circles(d: PlatDiagram, state: int) -> int:
    """Number of state circles, by union-find over arcs of the plat."""
    _check_state(d, state)
    uf, _ = _resolve(d, state)
    return len({uf.find(x) for x in range(len(uf.parent))})


def state_graph(d: PlatDiagram, state: int) -> StateGraph:
    """Vertices are state circles (numbered left to right), edges are crossings."""
    _check_state(d, state)
    uf, ends = _resolve(d, state)
    label: dict[int, int] = {}
    for x in range(len(uf.parent)):
        label.setdefault(uf.find(x), len(label))
    edges = tuple(tuple(sorted((label[uf.find(a)], label[uf.find(b)]))) for a, b in ends)
    return StateGraph(len(label), edges)


def _two_colouring(g: StateGraph) -> list[int] | None:
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        if u == v:
            return None
        adj[u].append(v)
        adj[v].append(u)
    colour = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return colour


def is_orientable_state(g: StateGraph) -> bool:
    """A state surface is two-sided iff its state graph has no odd cycle."""
    return _two_colouring(g) is not None


def cycle_condition(g: StateGraph) -> bool:
    """Every cycle has even length at least 4: no loops, no multi-edges, bipartite."""
    counts = Counter(g.edges)
    if any(u == v for u, v in counts) or any(n > 1 for n in counts.values()):
        return False
    return is_orientable_state(g)


def _is_vertical_matrix(d: PlatDiagram, states: np.ndarray) -> Iterator[tuple[StrandPair, np.ndarray]]:
    for k, (pair, flag) in enumerate(zip(d.crossings, d.vertical_when_set())):
        bit = ((states >> k) & 1).astype(bool)
        yield pair, (bit if flag else ~bit)


def circle_counts(d: PlatDiagram, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Circle counts of states ``start .. stop - 1`` as an int array.

    Tracks, for every state at once, how the four open strand ends at the
    current column are paired up through the part already resolved. Only
    the two planar pairings occur: ``{01, 23}`` and ``{03, 12}``. A vertical
    smoothing on pair ``(s, s+1)`` closes a circle exactly when those two
    ends were already paired, and always leaves them paired afterwards.
    """
    c = d.crossing_count
    if stop is None:
        stop = 1 << c
    states = np.arange(start, stop, dtype=np.int64)
    closed = np.zeros(states.shape, dtype=np.int32)
    # False: ends paired {01, 23}; True: {03, 12}
    crossed = np.zeros(states.shape, dtype=bool)
    for pair, vertical in _is_vertical_matrix(d, states):
        if pair is StrandPair.MIDDLE:
            closed += vertical & crossed
            crossed |= vertical
        else:
            closed += vertical & ~crossed
            crossed &= ~vertical
    # right-hand caps close two circles from {01, 23} and one from {03, 12}
    return closed + 2 - crossed.astype(np.int32)


def max_circle_states(d: PlatDiagram, budget: int = DEFAULT_BUDGET) -> tuple[int, int, list[int]]:
    """Sweep every state; return (max circles, number of maximisers, stored maximisers)."""
    c = d.crossing_count
    if c > budget:
        raise BudgetExceeded(c, budget)
    best, count, stored = -1, 0, []
    total = 1 << c
    for start in range(0, total, _CHUNK):
        counts = circle_counts(d, start, min(total, start + _CHUNK))
        m = int(counts.max())
        if m < best:
            continue
        hits = np.flatnonzero(counts == m) + start
        if m > best:
            best, count, stored = m, 0, []
        count += len(hits)
        room = MAX_STORED_STATES - len(stored)
        if room > 0:
            stored.extend(int(s) for s in hits[:room])
    return best, count, stored


def oracle_invariants(d: PlatDiagram, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Unoriented genus and crosscap number by brute force over all states."""
    c = d.crossing_count
    best, count, stored = max_circle_states(d, budget)
    genus = 1 + c - best
    one_sided = any(not is_orientable_state(state_graph(d, s)) for s in stored)
    return OracleResult(
        gamma_unoriented=genus,
        crosscap=genus if one_sided else genus + 1,
        minimal_state_count=count,
        some_minimal_nonorientable=one_sided,
        max_circles=best,
        minimal_states=tuple(stored),
        truncated=count > len(stored),
    )


def theorem11_crosscheck(f: Fraction, budget: int = DEFAULT_BUDGET) -> bool:
    """Check the cycle criterion against the brute-force crosscap number.

    For every minimal-complexity state, "all cycles of the state graph are
    even of length >= 4" must hold exactly when the crosscap number exceeds
    the unoriented genus.
    """
    d = diagram_for(f)
    if d.crossing_count < 3:
        raise ValueError(f"{f} has {d.crossing_count} crossings; the criterion needs at least 3")
    res = oracle_invariants(d, budget)
    gap = res.crosscap == res.gamma_unoriented + 1
    return all(cycle_condition(state_graph(d, s)) == gap for s in res.minimal_states)
