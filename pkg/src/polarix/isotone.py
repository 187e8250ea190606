"""Rank-preserving isotone families X_i : Delta_m(n) -> B(n).

A family assigns to each color i and point b a subset X_i(b) of {1..n}, the
second indices of the variables x_{i,j} dividing the polarized generator
m(b). The family gives a polarization of (x_1..x_m)^n exactly when, in every
down-graph, the linear-syzygy edges connect all vertices.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from .errors import BudgetExceeded, FamilyError, IncompleteFamily
from .lattice import (
    Point,
    Simplex,
    SimplexEdge,
    add_unit,
    down_edges,
    down_graph,
    enumerate_points,
    join,
    leq,
    sub_unit,
    support,
)

DEFAULT_GROUP_BUDGET = 10**6


@dataclass(frozen=True)
class IsotoneFamily:
    """The m maps X_1..X_m, stored as table[color - 1][point index]."""

    m: int
    n: int
    table: tuple[tuple[frozenset, ...], ...]

    @classmethod
    def from_mapping(cls, m: int, n: int, mapping: Mapping) -> "IsotoneFamily":
        """Build from {(color, point): iterable of indices}; every pair must be present."""
        pts = enumerate_points(m, n)
        rows = []
        for i in range(1, m + 1):
            row = []
            for p in pts:
                try:
                    row.append(frozenset(mapping[(i, p)]))
                except KeyError:
                    raise IncompleteFamily(
                        f"no set assigned to color {i} at {p}", kind="incomplete", color=i, point=p
                    ) from None
            rows.append(tuple(row))
        return cls(m, n, tuple(rows))

    @classmethod
    def from_function(cls, m: int, n: int, fn: Callable[[int, Point], Iterable[int]]) -> "IsotoneFamily":
        pts = enumerate_points(m, n)
        return cls(m, n, tuple(tuple(frozenset(fn(i, p)) for p in pts) for i in range(1, m + 1)))

    @classmethod
    def from_maps(cls, m: int, n: int, maps: Iterable[tuple]) -> "IsotoneFamily":
        """Build from one point-aligned tuple of sets per color."""
        return cls(m, n, tuple(tuple(frozenset(s) for s in row) for row in maps))

    @property
    def simplex(self) -> Simplex:
        return _simplex(self.m, self.n)

    @property
    def points(self) -> tuple[Point, ...]:
        return enumerate_points(self.m, self.n)

    def X(self, i: int, b: Point) -> frozenset:
        return self.table[i - 1][self.simplex.index(b)]

    def items(self) -> Iterator[tuple[int, Point, frozenset]]:
        for i, row in enumerate(self.table, start=1):
            for p, s in zip(self.points, row):
                yield i, p, s

    def key(self) -> tuple:
        """Serialization used for ordering families (canonical forms are the least)."""
        return tuple(tuple(tuple(sorted(s)) for s in row) for row in self.table)

    def replace(self, i: int, b: Point, members: Iterable[int]) -> "IsotoneFamily":
        rows = [list(r) for r in self.table]
        rows[i - 1][self.simplex.index(b)] = frozenset(members)
        return IsotoneFamily(self.m, self.n, tuple(tuple(r) for r in rows))


_SIMPLICES: dict = {}


def _simplex(m: int, n: int) -> Simplex:
    s = _SIMPLICES.get((m, n))
    if s is None:
        s = _SIMPLICES[(m, n)] = Simplex(m, n)
    return s


class Violation(NamedTuple):
    kind: str  # "range", "rank" or "isotone"
    color: int
    point: Point
    other: Point | None = None

    def describe(self) -> str:
        if self.kind == "isotone":
            return f"X_{self.color}{self.other} is not contained in X_{self.color}{self.point}"
        if self.kind == "rank":
            return f"|X_{self.color}{self.point}| != {self.point[self.color - 1]}"
        return f"X_{self.color}{self.point} has indices outside 1..n"


def lower_covers(b: Point, i: int) -> Iterator[Point]:
    """Points a covered by b in the order >=_i, i.e. b = a + e_i - e_j."""
    if b[i - 1] == 0:
        return
    for j in range(1, len(b) + 1):
        if j != i:
            yield add_unit(sub_unit(b, i), j)


def map_violations(m: int, n: int, i: int, row: tuple) -> Iterator[Violation]:
    """Rank and isotonicity violations of a single map X_i given point-aligned."""
    simplex = _simplex(m, n)
    full = set(range(1, n + 1))
    for b, s in zip(simplex.points, row):
        if s is None:
            raise IncompleteFamily(f"no set assigned to color {i} at {b}", kind="incomplete", color=i, point=b)
        if not s <= full:
            yield Violation("range", i, b)
        if len(s) != b[i - 1]:
            yield Violation("rank", i, b)
    for b, s in zip(simplex.points, row):
        for a in lower_covers(b, i):
            if not row[simplex.index(a)] <= s:
                yield Violation("isotone", i, b, a)


def validate_family(f: IsotoneFamily) -> Violation | None:
    """Return None when f is rank-preserving and isotone, else the first violation."""
    if len(f.table) != f.m or any(len(r) != len(f.simplex) for r in f.table):
        raise IncompleteFamily("table does not cover every (color, point)", kind="incomplete")
    for i, row in enumerate(f.table, start=1):
        for v in map_violations(f.m, f.n, i, row):
            return v
    return None


def check_family(f: IsotoneFamily) -> IsotoneFamily:
    v = validate_family(f)
    if v is not None:
        raise FamilyError(v.describe(), kind=v.kind, color=v.color, point=v.point, other=v.other)
    return f


def is_ls_edge(f: IsotoneFamily, e: SimplexEdge) -> bool:
    """X_p agrees at both endpoints for every color p other than e.i, e.j."""
    a, b = e.endpoints
    s = f.simplex
    ia, ib = s.index(a), s.index(b)
    return all(f.table[p - 1][ia] == f.table[p - 1][ib] for p in range(1, f.m + 1) if p != e.i and p != e.j)


def is_r_ls_edge(f: IsotoneFamily, e: SimplexEdge, R: Iterable[int]) -> bool:
    """R-linear syzygy edge: agreement only required for colors p in R - {i, j}."""
    a, b = e.endpoints
    return all(f.X(p, a) == f.X(p, b) for p in R if p != e.i and p != e.j)


def ls_edges(f: IsotoneFamily, apex: Point) -> list[SimplexEdge]:
    """LS(c): the linear-syzygy edges of the down-graph D(c)."""
    return [e for e in down_edges(apex) if is_ls_edge(f, e)]


def qs_edges(f: IsotoneFamily) -> list[SimplexEdge]:
    """Edges of Delta_m(n) that are not linear-syzygy edges."""
    return [e for e in f.simplex.edges() if not is_ls_edge(f, e)]


def _spans(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    vertices = list(vertices)
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = len(vertices)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps <= 1


def ls_spans(f: IsotoneFamily, apex: Point) -> bool:
    return _spans(support(apex), ((e.i, e.j) for e in ls_edges(f, apex)))


def r_ls_spans(f: IsotoneFamily, apex: Point, R: Iterable[int]) -> bool:
    R = sorted(set(R))
    edges = ((e.i, e.j) for e in down_edges(apex) if e.i in R and e.j in R and is_r_ls_edge(f, e, R))
    return _spans(R, edges)


def polarization_witness(f: IsotoneFamily) -> Point | None:
    """First apex c in Delta_m(n+1) whose LS-edges do not span D(c), or None."""
    check_family(f)
    t = f.table
    for c, supp, edges in _down_structure(f.m, f.n):
        ls = [(i, j) for i, j, ia, ib, others in edges if all(t[p][ia] == t[p][ib] for p in others)]
        if not _spans(supp, ls):
            return c
    return None


def is_valid_polarization(f: IsotoneFamily) -> bool:
    """Spanning-tree criterion: LS(c) spans D(c) for every c in Delta_m(n+1).

    Raises FamilyError when f is not rank-preserving and isotone.
    """
    return polarization_witness(f) is None


def at_most_one_qs_edge(f: IsotoneFamily) -> bool:
    """The three-variable form of the criterion: no down-triangle has two QS-edges."""
    if f.m != 3:
        raise ValueError("defined for m = 3 only")
    for c in enumerate_points(3, f.n + 1):
        if min(c) >= 1 and len(ls_edges(f, c)) < 2:
            return False
    return True


def ls_path(f: IsotoneFamily, a: Point, b: Point) -> list[Point] | None:
    """Shortest LS-path from a to b inside {u <= a v b : m(u) | lcm(m(a), m(b))}.

    Returns None if there is none; under a valid family that never happens.
    """
    s = f.simplex
    a, b = s.check(a), s.check(b)
    top = join(a, b)
    lcm = [f.X(i, a) | f.X(i, b) for i in range(1, f.m + 1)]

    def admissible(u):
        return leq(u, top) and all(f.X(i, u) <= lcm[i - 1] for i in range(1, f.m + 1))

    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for v, e in s.neighbors(u):
            if v not in prev and admissible(v) and is_ls_edge(f, e):
                prev[v] = u
                queue.append(v)
    return None


def is_ls_path(f: IsotoneFamily, path: list[Point]) -> bool:
    """Check the three LS-path conditions for a path from path[0] to path[-1]."""
    from .lattice import distance, edge_between

    a, b = path[0], path[-1]
    top = join(a, b)
    lcm = [f.X(i, a) | f.X(i, b) for i in range(1, f.m + 1)]
    for u in path:
        if not leq(u, top):
            return False
        if not all(f.X(i, u) <= lcm[i - 1] for i in range(1, f.m + 1)):
            return False
    for u, v in zip(path, path[1:]):
        if distance(u, v) != 1 or not is_ls_edge(f, edge_between(u, v)):
            return False
    return True


# --- enumeration of single maps and of families ---------------------------


def enumerate_isotone_maps(m: int, n: int, i: int) -> Iterator[tuple[frozenset, ...]]:
    """All rank-preserving isotone maps X_i, as tuples aligned with the points."""
    from itertools import combinations

    simplex = _simplex(m, n)
    order = sorted(range(len(simplex)), key=lambda k: simplex.points[k][i - 1])
    covers = [[simplex.index(a) for a in lower_covers(p, i)] for p in simplex.points]
    full = range(1, n + 1)
    row: list = [None] * len(simplex)

    def rec(pos):
        if pos == len(order):
            yield tuple(row)
            return
        k = order[pos]
        rank = simplex.points[k][i - 1]
        forced = frozenset().union(*(row[c] for c in covers[k]))
        if len(forced) > rank:
            return
        free = [j for j in full if j not in forced]
        for extra in combinations(free, rank - len(forced)):
            row[k] = forced | frozenset(extra)
            yield from rec(pos + 1)
        row[k] = None

    yield from rec(0)


def enumerate_families(m: int, n: int, valid_only: bool = False) -> Iterator[IsotoneFamily]:
    """Every rank-preserving isotone family at (m, n), optionally only valid ones."""
    maps = [list(enumerate_isotone_maps(m, n, i)) for i in range(1, m + 1)]
    for rows in product(*maps):
        f = IsotoneFamily(m, n, rows)
        if not valid_only or _valid_unchecked(f):
            yield f


_DOWN: dict = {}


def _down_structure(m: int, n: int) -> list:
    """Per apex with >= 3 colors: its support and (i, j, index_a, index_b, other colors) per edge."""
    key = (m, n)
    if key not in _DOWN:
        s = _simplex(m, n)
        out = []
        for c in enumerate_points(m, n + 1):
            supp = support(c)
            if len(supp) < 3:
                continue
            edges = []
            for e in down_edges(c):
                a, b = e.endpoints
                others = tuple(p - 1 for p in supp if p != e.i and p != e.j)
                edges.append((e.i, e.j, s.index(a), s.index(b), others))
            out.append((c, supp, edges))
        _DOWN[key] = out
    return _DOWN[key]


def _valid_unchecked(f: IsotoneFamily) -> bool:
    t = f.table
    for _, supp, edges in _down_structure(f.m, f.n):
        ls = [(i, j) for i, j, ia, ib, others in edges if all(t[p][ia] == t[p][ib] for p in others)]
        if not _spans(supp, ls):
            return False
    return True


def random_family(m: int, n: int, rng: random.Random, maps=None) -> IsotoneFamily:
    """A uniformly random rank-preserving isotone family (maps may be precomputed)."""
    if maps is None:
        maps = [list(enumerate_isotone_maps(m, n, i)) for i in range(1, m + 1)]
    return IsotoneFamily(m, n, tuple(rng.choice(ms) for ms in maps))


# --- three variables: QS patterns ------------------------------------------


def qs_pattern_of_map(n: int, row: tuple) -> frozenset:
    """Apexes c in Delta_3^+(n+1) where the (c;2,3)-edge is quadratic for the map X = X_1."""
    s = _simplex(3, n)
    out = set()
    for c in enumerate_points(3, n + 1):
        if min(c) >= 1 and row[s.index(sub_unit(c, 2))] != row[s.index(sub_unit(c, 3))]:
            out.add(c)
    return frozenset(out)


def family_from_qs_pattern(n: int, q: Iterable[Point]) -> tuple[frozenset, ...]:
    """The normalized map X : Delta_3(n) -> B(n) (order >=_1) with QS-pattern q.

    The boundary chain X(p, 0, n-p) = {1..p} is fixed; each remaining value
    C = X(p, b, n-p-b) follows from A = X(p-1, b, .), B = X(p, b-1, .),
    D = X(p+1, b-1, .): C = B on an LS-edge, C = A u (D - B) on a QS-edge.
    """
    q = {tuple(c) for c in q}
    bad = [c for c in q if len(c) != 3 or sum(c) != n + 1 or min(c) < 1]
    if bad:
        raise ValueError(f"not interior points of Delta_3({n + 1}): {bad}")
    X: dict = {}
    for p in range(n + 1):
        X[(p, 0, n - p)] = frozenset(range(1, p + 1))
    for r in range(n + 1):
        X[(0, r, n - r)] = frozenset()
    for b in range(1, n + 1):
        for p in range(1, n - b + 1):
            A = X[(p - 1, b, n - p - b + 1)]
            B = X[(p, b - 1, n - p - b + 1)]
            D = X[(p + 1, b - 1, n - p - b)]
            if (p, b, n - p - b + 1) in q:
                X[(p, b, n - p - b)] = A | (D - B)
            else:
                X[(p, b, n - p - b)] = B
    return tuple(X[pt] for pt in enumerate_points(3, n))


# --- group action and canonical forms ----------------------------------------


def _relabel(row: tuple, perm: tuple) -> tuple:
    return tuple(tuple(sorted(perm[j - 1] for j in s)) for s in row)


def canonical_map(row: tuple, n: int) -> tuple:
    """Least serialization of a single map over relabelings of {1..n}."""
    return min(_relabel(row, perm) for perm in permutations(range(1, n + 1)))


def permute_colors(f: IsotoneFamily, sigma: tuple) -> IsotoneFamily:
    """Apply the color permutation color i -> sigma[i-1] (points permuted accordingly)."""
    m = f.m
    inv = [0] * m
    for i, si in enumerate(sigma):
        inv[si - 1] = i
    s = f.simplex
    rows = []
    for k in range(m):
        i = inv[k]
        rows.append(tuple(f.table[i][s.index(tuple(p[sigma[t] - 1] for t in range(m)))] for p in s.points))
    return IsotoneFamily(m, f.n, tuple(rows))


def group_work(m: int, n: int) -> int:
    return factorial(m) * m * factorial(n)


def canonical_form(f: IsotoneFamily, budget: int = DEFAULT_GROUP_BUDGET) -> IsotoneFamily:
    """Least family in the orbit of f under S_m x| (S_n)^m.

    The index permutations act on each color independently, so for every
    color permutation the least representative is found color block by block.
    """
    check_family(f)
    work = group_work(f.m, f.n)
    if work > budget:
        raise BudgetExceeded(f"orbit search needs {work} steps, budget is {budget}")
    best = None
    perms = list(permutations(range(1, f.n + 1)))
    for sigma in permutations(range(1, f.m + 1)):
        g = permute_colors(f, sigma)
        key = tuple(min(_relabel(row, p) for p in perms) for row in g.table)
        if best is None or key < best:
            best = key
    return IsotoneFamily.from_maps(f.m, f.n, best)


def is_isomorphic(f: IsotoneFamily, g: IsotoneFamily, budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    return (f.m, f.n) == (g.m, g.n) and canonical_form(f, budget) == canonical_form(g, budget)
