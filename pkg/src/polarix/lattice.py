"""Points, orders and complete sub-graphs of the lattice simplex Delta_m(n).

A point (multidegree) is a plain tuple of non-negative ints. Colors are
numbered 1..m, so color ``i`` lives at tuple position ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

Point = tuple[int, ...]


class SimplexEdge(NamedTuple):
    """Edge (apex; i, j) between apex - e_i and apex - e_j, stored with i < j."""

    apex: Point
    i: int
    j: int

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return sub_unit(self.apex, self.i), sub_unit(self.apex, self.j)


class DownGraph(NamedTuple):
    apex: Point
    vertices: tuple[Point, ...]

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> list[SimplexEdge]:
        return down_edges(self.apex)


class UpGraph(NamedTuple):
    base: Point
    vertices: tuple[Point, ...]


def unit(m: int, i: int) -> Point:
    return tuple(1 if k == i - 1 else 0 for k in range(m))


def add_unit(p: Point, i: int) -> Point:
    q = list(p)
    q[i - 1] += 1
    return tuple(q)


def sub_unit(p: Point, i: int) -> Point:
    q = list(p)
    q[i - 1] -= 1
    if q[i - 1] < 0:
        raise ValueError(f"{p} - e_{i} leaves the simplex")
    return tuple(q)


def support(p: Point) -> tuple[int, ...]:
    """Colors i with p_i >= 1."""
    return tuple(i + 1 for i, v in enumerate(p) if v > 0)


def indicator(m: int, colors) -> Point:
    s = set(colors)
    return tuple(1 if i + 1 in s else 0 for i in range(m))


@lru_cache(maxsize=None)
def _compositions(m: int, n: int) -> tuple[Point, ...]:
    if m == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in _compositions(m - 1, n - first):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class Simplex:
    """The lattice simplex Delta_m(n) of m-part compositions of n."""

    m: int
    n: int
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        object.__setattr__(self, "_index", {p: k for k, p in enumerate(self.points)})

    @property
    def points(self) -> tuple[Point, ...]:
        return _compositions(self.m, self.n)

    def __len__(self) -> int:
        return comb(self.n + self.m - 1, self.m - 1)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._index

    def index(self, p: Point) -> int:
        return self._index[tuple(p)]

    def check(self, p: Point) -> Point:
        p = tuple(p)
        if p not in self._index:
            raise ValueError(f"{p} is not a point of Delta_{self.m}({self.n})")
        return p

    def interior(self) -> list[Point]:
        """Points with full support (Delta_m^+(n))."""
        return [p for p in self.points if min(p) >= 1]

    def edges(self) -> list[SimplexEdge]:
        out = []
        for c in _compositions(self.m, self.n + 1):
            out.extend(down_edges(c))
        return out

    def down_graphs(self) -> list[DownGraph]:
        return [down_graph(c) for c in _compositions(self.m, self.n + 1)]

    def up_graphs(self) -> list[UpGraph]:
        return up_graphs(self.m, self.n)

    def neighbors(self, p: Point) -> list[tuple[Point, SimplexEdge]]:
        """Adjacent points together with the connecting edge."""
        out = []
        for i in support(p):
            for j in range(1, self.m + 1):
                if j == i:
                    continue
                c = add_unit(p, j)
                out.append((sub_unit(c, i), edge(c, i, j)))
        return out


def enumerate_points(m: int, n: int) -> tuple[Point, ...]:
    """All compositions of n into m parts, lexicographically descending."""
    return Simplex(m, n).points


def edge(apex: Point, i: int, j: int) -> SimplexEdge:
    if i == j:
        raise ValueError("edge needs two distinct colors")
    if i > j:
        i, j = j, i
    if apex[i - 1] < 1 or apex[j - 1] < 1:
        raise ValueError(f"colors {i},{j} not both in supp{apex}")
    return SimplexEdge(tuple(apex), i, j)


def edge_between(a: Point, b: Point) -> SimplexEdge:
    """The unique edge joining two points at distance one."""
    if distance(a, b) != 1:
        raise ValueError(f"{a} and {b} are not adjacent")
    c = join(a, b)
    i = next(k + 1 for k in range(len(a)) if c[k] > a[k])
    j = next(k + 1 for k in range(len(b)) if c[k] > b[k])
    return edge(c, j, i)


def down_edges(apex: Point) -> list[SimplexEdge]:
    return [SimplexEdge(tuple(apex), i, j) for i, j in combinations(support(apex), 2)]


def geq_i(a: Point, b: Point, i: int) -> bool:
    """Whether b >=_i a: b_i >= a_i and b_j <= a_j for every j != i."""
    if len(a) != len(b) or sum(a) != sum(b):
        raise ValueError(f"{a} and {b} are not in the same simplex")
    k = i - 1
    return all((bv >= av) if t == k else (bv <= av) for t, (av, bv) in enumerate(zip(a, b)))


def down_graph(apex: Point) -> DownGraph:
    apex = tuple(apex)
    return DownGraph(apex, tuple(sub_unit(apex, i) for i in support(apex)))


def up_graph(base: Point) -> UpGraph:
    base = tuple(base)
    return UpGraph(base, tuple(add_unit(base, i) for i in range(1, len(base) + 1)))


def up_graphs(m: int, n: int) -> list[UpGraph]:
    if n < 1:
        raise ValueError("up-graphs need n >= 1")
    return [up_graph(a) for a in enumerate_points(m, n - 1)]


def distance_split(a: Point, b: Point) -> tuple[int, frozenset, frozenset]:
    """Distance d(a, b) with the split [m] = A u B, B = {i : b_i > a_i}."""
    if len(a) != len(b) or sum(a) != sum(b):
        raise ValueError(f"{a} and {b} are not in the same simplex")
    B = frozenset(i + 1 for i in range(len(a)) if b[i] > a[i])
    A = frozenset(range(1, len(a) + 1)) - B
    return sum(b[i - 1] - a[i - 1] for i in B), A, B


def distance(a: Point, b: Point) -> int:
    return distance_split(a, b)[0]


def join(a: Point, b: Point) -> Point:
    return tuple(max(x, y) for x, y in zip(a, b))


def leq(a: Point, b: Point) -> bool:
    return all(x <= y for x, y in zip(a, b))
