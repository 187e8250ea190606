"""Stanley-Reisner complexes, GF(2) homology, shellings and linear quotients."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, NamedTuple, Sequence

from .alexander import alexander_dual_oracle, up_graph_monomials
from .errors import BudgetExceeded, FamilyError
from .isotone import IsotoneFamily, is_valid_polarization
from .lattice import enumerate_points
from .monomials import Monomial, MonomialIdeal, minimalize

DEFAULT_FACE_BUDGET = 200_000
DEFAULT_SHELLING_BUDGET = 12


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on a finite vertex set, held by its facets (an antichain)."""

    vertices: tuple
    facets: tuple[frozenset, ...]

    def __init__(self, vertices: Iterable[Hashable], facets: Iterable[Iterable[Hashable]]):
        vertices = tuple(sorted(set(vertices)))
        fs = {frozenset(f) for f in facets}
        for f in fs:
            if not f <= set(vertices):
                raise ValueError(f"facet {sorted(f)} uses vertices outside the vertex set")
        antichain = [f for f in fs if not any(f < g for g in fs)]
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "facets", tuple(sorted(antichain, key=lambda f: (len(f), sorted(f)))))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self, budget: int = DEFAULT_FACE_BUDGET) -> set:
        total = sum(2 ** len(f) for f in self.facets)
        if total > budget:
            raise BudgetExceeded(f"up to {total} faces exceed budget {budget}")
        out: set = set()
        for f in self.facets:
            items = sorted(f)
            for k in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, k))
        return out

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        counts = [0] * (self.dimension + 2)
        for face in self.faces():
            counts[len(face)] += 1
        return counts

    def restrict(self, subset: Iterable[Hashable]) -> "SimplicialComplex":
        s = frozenset(subset)
        return SimplicialComplex(s, [f & s for f in self.facets])


def complex_from_ideal(ideal: MonomialIdeal, vertices: Iterable[Hashable] | None = None) -> SimplicialComplex:
    """Stanley-Reisner complex: facets are complements of the dual's minimal generators."""
    vertices = frozenset(ideal.ambient if vertices is None else vertices)
    dual = alexander_dual_oracle(ideal.with_ambient(vertices))
    return SimplicialComplex(vertices, [vertices - g.variables for g in dual.gens])


def stanley_reisner_ideal(c: SimplicialComplex) -> MonomialIdeal:
    """Minimal non-faces, as the dual of the ideal of facet complements.

    Vertices must be variables (color, index) for the result to be an ideal.
    """
    V = frozenset(c.vertices)
    if not c.facets:
        return MonomialIdeal([Monomial()], V)
    comp = MonomialIdeal([Monomial.from_vars(V - f) for f in c.facets], V)
    if any(g.degree == 0 for g in comp.gens):
        return MonomialIdeal([], V)
    return alexander_dual_oracle(comp)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as integer bitmasks."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def reduced_homology_gf2(c: SimplicialComplex, budget: int = DEFAULT_FACE_BUDGET) -> list[int]:
    """Reduced Betti numbers over GF(2), indexed H~_{-1}, H~_0, ..., H~_dim."""
    if not c.facets:
        return []
    faces = c.faces(budget)
    by_size: dict[int, list] = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    top = max(by_size)
    index = {k: {f: t for t, f in enumerate(sorted(by_size.get(k, []), key=sorted))} for k in range(top + 1)}
    ranks = {}
    for k in range(1, top + 1):
        lower = index[k - 1]
        rows = []
        for f in index[k]:
            mask = 0
            for v in f:
                mask |= 1 << lower[f - {v}]
            rows.append(mask)
        ranks[k] = gf2_rank(rows)
    return [len(index[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(top + 1)]


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** (k - 1) * f for k, f in enumerate(c.f_vector()))


def pseudomanifold_census(c: SimplicialComplex) -> dict:
    """Number of facets containing each codimension-one face."""
    if not c.is_pure():
        raise ValueError("census needs a pure complex")
    counts: dict = {}
    for f in c.facets:
        for v in f:
            g = f - {v}
            counts[g] = counts.get(g, 0) + 1
    return counts


def linear_quotients_check(order: Sequence[Monomial]) -> bool:
    """Each colon (g_1..g_{j-1}) : g_j is generated by variables."""
    for j in range(1, len(order)):
        gj = order[j]
        colon = minimalize(g / g.gcd(gj) for g in order[:j])
        if any(h.degree != 1 for h in colon):
            return False
    return True


def _restriction_ok(facet: frozenset, earlier: Sequence[frozenset]) -> bool:
    if not earlier:
        return True
    ridges = [facet - {v} for v in facet if any(facet - {v} <= g for g in earlier)]
    return all(any(facet & g <= r for r in ridges) for g in earlier)


def is_shelling_order(order: Sequence[Iterable[Hashable]]) -> bool:
    """Every facet meets the union of the earlier ones in a pure codim-one complex."""
    fs = [frozenset(f) for f in order]
    return all(_restriction_ok(fs[j], fs[:j]) for j in range(len(fs)))


def shellability_bruteforce(c: SimplicialComplex, budget: int = DEFAULT_SHELLING_BUDGET) -> list[frozenset] | None:
    """A shelling order of a pure complex, or None when none exists."""
    if not c.is_pure():
        raise ValueError("shelling search needs a pure complex")
    fs = list(c.facets)
    if len(fs) > budget:
        raise BudgetExceeded(f"{len(fs)} facets exceed shelling budget {budget}")
    k = len(fs)
    d = len(fs[0]) if fs else 0
    adjacent = [[len(fs[a] & fs[b]) == d - 1 for b in range(k)] for a in range(k)]
    dead: set[int] = set()
    chosen: list[int] = []

    def rec(mask):
        if len(chosen) == k:
            return True
        if mask in dead:
            return False
        for t in range(k):
            if mask >> t & 1:
                continue
            # after the first facet, a shelling step must share a ridge with an earlier facet
            if chosen and d > 0 and not any(adjacent[t][s] for s in chosen):
                continue
            if _restriction_ok(fs[t], [fs[s] for s in chosen]):
                chosen.append(t)
                if rec(mask | 1 << t):
                    return True
                chosen.pop()
        dead.add(mask)
        return False

    if rec(0):
        return [fs[t] for t in chosen]
    return None


class Verdict(NamedTuple):
    kind: str  # "ball", "sphere" or "unknown"
    evidence: dict


def ball_or_sphere_verdict(
    c: SimplicialComplex, shelling_hint: Sequence[Iterable[Hashable]] | None = None,
    budget: int = DEFAULT_SHELLING_BUDGET,
) -> Verdict:
    """Certify a ball or sphere from pseudomanifold counts, GF(2) homology and a shelling.

    A candidate shelling order may be passed in; it is checked, and the
    brute-force search runs only if it is missing or fails.
    """
    if not c.facets or not c.is_pure():
        return Verdict("unknown", {"reason": "empty or impure"})
    census = pseudomanifold_census(c)
    counts = set(census.values())
    homology = reduced_homology_gf2(c)
    dim = c.dimension
    evidence = {"dimension": dim, "codim1_counts": sorted(counts), "homology": homology}
    if not counts <= {1, 2}:
        return Verdict("unknown", evidence)
    if counts <= {2}:
        sphere = [0] * (dim + 2)
        sphere[dim + 1] = 1
        if homology == sphere:
            return Verdict("sphere", evidence)
        return Verdict("unknown", evidence)
    if any(homology):
        return Verdict("unknown", evidence)
    order = None
    if shelling_hint is not None:
        hint = [frozenset(f) for f in shelling_hint]
        if sorted(hint, key=sorted) == sorted(c.facets, key=sorted) and is_shelling_order(hint):
            order = hint
            evidence["shelling"] = "hint"
    if order is None:
        try:
            order = shellability_bruteforce(c, budget)
        except BudgetExceeded:
            evidence["shelling"] = "budget exceeded"
            return Verdict("unknown", evidence)
        evidence["shelling"] = "search" if order is not None else "none"
    if order is None:
        return Verdict("unknown", evidence)
    evidence["order"] = [sorted(f) for f in order]
    return Verdict("ball", evidence)


def linear_resolution_gf2(ideal: MonomialIdeal, d: int | None = None, vertex_budget: int = 14) -> bool:
    """d-linear resolution via Hochster's formula over GF(2).

    For every nonempty vertex subset W the restriction of the Stanley-Reisner
    complex to W may only have reduced homology in degree d - 2. (W empty
    carries the Betti number of S/I in degree 0, not one of I.)
    """
    if not ideal.is_squarefree():
        raise ValueError("needs a squarefree ideal")
    degrees = {g.degree for g in ideal.gens}
    if d is None:
        if len(degrees) != 1:
            return False
        (d,) = degrees
    elif degrees - {d}:
        return False
    V = sorted(ideal.ambient)
    if len(V) > vertex_budget:
        raise BudgetExceeded(f"{len(V)} vertices exceed budget {vertex_budget}")
    for k in range(1, len(V) + 1):
        for W in combinations(V, k):
            Ws = frozenset(W)
            sub = MonomialIdeal([g for g in ideal.gens if g.variables <= Ws], Ws)
            h = reduced_homology_gf2(complex_from_ideal(sub, Ws))
            if any(rank for j, rank in enumerate(h, start=-1) if j != d - 2):
                return False
    return True


# --- shelling order for three variables -----------------------------------------


def _chain_keys(chain: Sequence[frozenset]) -> dict:
    """Rank variables of an ascending chain: later arrivals rank lower.

    Several arrivals at one step rank among themselves by descending index.
    """
    keys: dict = {}
    for step, s in enumerate(chain):
        for j in s:
            if j not in keys:
                keys[j] = (-step, j)
    return keys


def lq_order_m3(f: IsotoneFamily) -> list[Monomial]:
    """Order on the dual's generators giving linear quotients (m = 3).

    Up-triangles U(a,b,c) are visited in descending lexicographic order of
    (a,b,c), which extends a >= a'. Inside an up-triangle monomials x y z are
    ranked by the product of: x-variables by ascending index, y-variables by
    order of arrival along Y(a,1,.) <= Y(a,2,.) <= ..., z-variables by order
    of arrival along Z(a,n-a-1,1) <= Z(a,n-a-2,2) <= .... Each monomial is
    placed at the first up-triangle containing it.
    """
    if f.m != 3:
        raise ValueError("lq_order_m3 needs m = 3")
    if not is_valid_polarization(f):
        raise FamilyError("family does not give a polarization", kind="invalid")
    n = f.n
    y_keys = {a: _chain_keys([f.X(2, (a, k, n - a - k)) for k in range(1, n - a + 1)]) for a in range(n)}
    z_keys = {a: _chain_keys([f.X(3, (a, n - a - k, k)) for k in range(1, n - a + 1)]) for a in range(n)}
    order: list[Monomial] = []
    seen: set = set()
    for a, b, c in enumerate_points(3, n - 1):
        ranked = []
        for mon in up_graph_monomials(f, (a, b, c)):
            idx = {v[0]: v[1] for v in mon.variables}
            key = (-idx[1], y_keys[a][idx[2]], z_keys[a][idx[3]])
            ranked.append((key, mon))
        ranked.sort(key=lambda t: t[0], reverse=True)
        for _, mon in ranked:
            if mon not in seen:
                seen.add(mon)
                order.append(mon)
    return order


def shelling_from_dual_order(order: Sequence[Monomial], vertices: Iterable[Hashable]) -> list[frozenset]:
    """Facets V - supp(u) in the order of a linear-quotients order of the dual."""
    V = frozenset(vertices)
    return [V - u.variables for u in order]
