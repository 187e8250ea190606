"""Polarizations of (x_1..x_m)^2 from directed trees with edges labelled 1..m.

Each color has the two variables x_(i,1), x_(i,2). The tree construction uses
a 0/1 "points towards" flag per edge; flag 0 becomes index 1 and flag 1 index 2.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator

from .errors import BudgetExceeded
from .monomials import Monomial, MonomialIdeal, colored_ring

INDEX_MAP = {0: 1, 1: 2}
MAX_TREE_M = 9


@dataclass(frozen=True)
class DirectedLabeledTree:
    """Tree on vertices 0..m with edges (tail, head, label), labels a permutation of 1..m."""

    vertices: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        k, m = self.vertices, len(self.edges)
        if m != k - 1:
            raise ValueError(f"a tree on {k} vertices has {k - 1} edges, got {m}")
        if sorted(e[2] for e in self.edges) != list(range(1, m + 1)):
            raise ValueError("edge labels must be 1..m, each once")
        seen = {0}
        adj = self.adjacency()
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != k:
            raise ValueError("edges do not form a connected tree")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[tuple[int, tuple]]]:
        adj: list = [[] for _ in range(self.vertices)]
        for e in self.edges:
            t, h, _ = e
            if not (0 <= t < self.vertices and 0 <= h < self.vertices) or t == h:
                raise ValueError(f"bad edge {e}")
            adj[t].append((h, e))
            adj[h].append((t, e))
        return adj

    def path(self, v: int, w: int) -> list[tuple]:
        """Edges along the unique path from v to w."""
        adj = self.adjacency()
        prev = {v: None}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for x, e in adj[u]:
                if x not in prev:
                    prev[x] = (u, e)
                    queue.append(x)
        out = []
        u = w
        while prev[u] is not None:
            u, e = prev[u]
            out.append(e)
        return out[::-1]

    def underlying(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e[:2])) for e in self.edges)


def _distances(t: DirectedLabeledTree) -> list[list[int]]:
    adj = t.adjacency()
    out = []
    for s in range(t.vertices):
        dist = [-1] * t.vertices
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x, _ in adj[u]:
                if dist[x] < 0:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        out.append(dist)
    return out


def points_towards(edge: tuple, v: int, dist) -> int:
    """1 if the directed edge points towards v (v on the head side), else 0."""
    tail, head, _ = edge
    return int(dist[head][v] < dist[tail][v])


def _x(label: int, flag: int) -> tuple[int, int]:
    return (label, INDEX_MAP[flag])


def vertex_monomial(t: DirectedLabeledTree, v: int, dist=None) -> Monomial:
    dist = dist or _distances(t)
    return Monomial.from_vars(_x(e[2], points_towards(e, v, dist)) for e in t.edges)


def I_of_tree(t: DirectedLabeledTree) -> MonomialIdeal:
    """One rainbow generator m_v per vertex."""
    dist = _distances(t)
    return MonomialIdeal((vertex_monomial(t, v, dist) for v in range(t.vertices)), colored_ring(t.m, 2))


def J_of_tree(t: DirectedLabeledTree) -> MonomialIdeal:
    """Quadrics m_{v,w} built from the end edges of each path v ... w."""
    dist = _distances(t)
    gens = []
    for v, w in combinations(range(t.vertices), 2):
        path = t.path(v, w)
        e, f = path[0], path[-1]
        gens.append(Monomial.from_vars([_x(e[2], points_towards(e, w, dist)), _x(f[2], points_towards(f, v, dist))]))
    return MonomialIdeal(gens, colored_ring(t.m, 2))


def tree_linear_quotients_order(t: DirectedLabeledTree, root: int) -> list[Monomial]:
    """Generators of I(T) in breadth-first order from the root."""
    if not 0 <= root < t.vertices:
        raise ValueError(f"no vertex {root}")
    dist = _distances(t)
    order = sorted(range(t.vertices), key=lambda v: (dist[root][v], v))
    return [vertex_monomial(t, v, dist) for v in order]


# --- enumeration ----------------------------------------------------------------


def prufer_to_edges(seq: tuple[int, ...], k: int) -> list[tuple[int, int]]:
    """Undirected edges of the labelled tree on 0..k-1 with the given Pruefer sequence."""
    degree = [1] * k
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(k) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return sorted(tuple(sorted(e)) for e in edges)


def labelled_trees(k: int) -> Iterator[list[tuple[int, int]]]:
    """All k^(k-2) labelled trees on 0..k-1 as sorted undirected edge lists."""
    if k == 1:
        yield []
        return
    if k == 2:
        yield [(0, 1)]
        return
    for seq in product(range(k), repeat=k - 2):
        yield prufer_to_edges(seq, k)


def default_decoration(edges: list[tuple[int, int]]) -> DirectedLabeledTree:
    """Orient each edge from smaller to larger vertex; label in sorted edge order."""
    return DirectedLabeledTree(len(edges) + 1, tuple((u, v, lab) for lab, (u, v) in enumerate(sorted(edges), start=1)))


def decorations(edges: list[tuple[int, int]]) -> Iterator[DirectedLabeledTree]:
    """All m! * 2^m labelings and orientations of an undirected tree, lazily."""
    edges = sorted(edges)
    m = len(edges)
    for labels in permutations(range(1, m + 1)):
        for flips in product((False, True), repeat=m):
            yield DirectedLabeledTree(
                m + 1, tuple(((v, u) if fl else (u, v)) + (lab,) for (u, v), lab, fl in zip(edges, labels, flips))
            )


def _centers(k: int, edges) -> list[int]:
    adj = [set() for _ in range(k)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    remaining = set(range(k))
    leaves = [v for v in remaining if len(adj[v]) <= 1]
    while len(remaining) > 2:
        nxt = []
        for leaf in leaves:
            remaining.discard(leaf)
            for w in adj[leaf]:
                adj[w].discard(leaf)
                if len(adj[w]) == 1:
                    nxt.append(w)
            adj[leaf] = set()
        leaves = nxt
    return sorted(remaining)


def _encode(v: int, parent: int, adj) -> str:
    return "(" + "".join(sorted(_encode(w, v, adj) for w in adj[v] if w != parent)) + ")"


def tree_canonical_form(edges: list[tuple[int, int]]) -> str:
    """Canonical string of an unlabelled tree: AHU encoding rooted at its center(s)."""
    k = len(edges) + 1
    adj = [[] for _ in range(k)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(_encode(c, -1, adj) for c in _centers(k, edges))


def _decode(code: str) -> list[tuple[int, int]]:
    edges, stack, nxt = [], [], 0
    for ch in code:
        if ch == "(":
            v = nxt
            nxt += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return sorted(edges)


def enumerate_trees(m: int, up_to_iso: bool = False) -> list[DirectedLabeledTree]:
    """Trees with m edges (m + 1 vertices), default decoration.

    Labelled mode gives all (m+1)^(m-1) trees on 0..m; use ``decorations`` for
    the labelings/orientations. Iso mode gives one tree per unlabelled class.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > MAX_TREE_M:
        raise BudgetExceeded(f"tree enumeration limited to m <= {MAX_TREE_M}")
    if not up_to_iso:
        return [default_decoration(e) for e in labelled_trees(m + 1)]
    codes = sorted({tree_canonical_form(e) for e in labelled_trees(m + 1)})
    return [default_decoration(_decode(c)) for c in codes]


def tree_dot(t: DirectedLabeledTree) -> str:
    lines = ["digraph T {"]
    lines += [f"  v{u} -> v{v} [label=\"{lab}\"];" for u, v, lab in t.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
