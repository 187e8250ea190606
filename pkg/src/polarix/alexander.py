"""Alexander duality for polarizations, rainbow monomials and the chi-maps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .errors import BudgetExceeded, FamilyError
from .isotone import IsotoneFamily, is_valid_polarization, lower_covers, _spans
from .lattice import Point, add_unit, down_edges, enumerate_points, support
from .monomials import Monomial, MonomialIdeal

DEFAULT_TRANSVERSAL_BUDGET = 200_000


def _minimal_sets(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for t in sorted(set(masks), key=lambda x: bin(x).count("1")):
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def minimal_transversals(edges: list[int], budget: int = DEFAULT_TRANSVERSAL_BUDGET) -> list[int]:
    """Inclusion-minimal bitmasks meeting every edge, adding edges one at a time."""
    current = [0]
    for g in edges:
        new = []
        for t in current:
            if t & g:
                new.append(t)
            else:
                bit = 1
                while bit <= g:
                    if g & bit:
                        new.append(t | bit)
                    bit <<= 1
        if len(new) > budget:
            raise BudgetExceeded(f"{len(new)} partial transversals exceed budget {budget}")
        current = _minimal_sets(new)
    return current


def alexander_dual_oracle(ideal: MonomialIdeal, budget: int = DEFAULT_TRANSVERSAL_BUDGET) -> MonomialIdeal:
    """Dual generated by the minimal vertex sets hitting every generator's support."""
    if not ideal.is_squarefree():
        raise ValueError("Alexander duality needs a squarefree ideal")
    order = sorted(ideal.ambient)
    pos = {v: k for k, v in enumerate(order)}
    masks = [sum(1 << pos[v] for v in g.variables) for g in ideal.gens]
    # the unit ideal has no transversal at all
    if any(mk == 0 for mk in masks):
        return MonomialIdeal([], ideal.ambient)
    gens = [Monomial.from_vars(order[k] for k in range(len(order)) if t >> k & 1) for t in minimal_transversals(masks, budget)]
    return MonomialIdeal(gens, ideal.ambient)


def up_graph_monomials(f: IsotoneFamily, a: Point) -> list[Monomial]:
    """M(a) = X_1(a+e_1) x ... x X_m(a+e_m), as rainbow monomials."""
    choices = [sorted(f.X(j, add_unit(a, j))) for j in range(1, f.m + 1)]
    return [Monomial.from_vars((j + 1, idx) for j, idx in enumerate(pick)) for pick in product(*choices)]


def alexander_dual_from_family(f: IsotoneFamily) -> MonomialIdeal:
    """Union of the up-graph products M(a) over a in Delta_m(n-1)."""
    if not is_valid_polarization(f):
        raise FamilyError("family does not give a polarization", kind="invalid")
    from .monomials import colored_ring

    gens = [g for a in enumerate_points(f.m, f.n - 1) for g in up_graph_monomials(f, a)]
    return MonomialIdeal(gens, colored_ring(f.m, f.n))


def first_up_graph(f: IsotoneFamily) -> dict:
    """For each dual generator, the first up-graph base (points order) where it appears."""
    out: dict = {}
    for a in enumerate_points(f.m, f.n - 1):
        for g in up_graph_monomials(f, a):
            out.setdefault(g, a)
    return out


def is_rainbow(mon: Monomial, m: int) -> bool:
    """Squarefree with exactly one variable of each color 1..m."""
    if not mon.is_squarefree() or mon.degree != m:
        return False
    return sorted(v[0] for v in mon.variables) == list(range(1, m + 1))


def _rainbow_tuple(mon: Monomial, colors: list) -> tuple:
    d = {v[0]: v[1] for v in mon.variables}
    return tuple(d[c] for c in colors)


def _closed(members: set, d: int) -> bool:
    for m1, m2 in combinations(members, 2):
        diff = [k for k in range(d) if m1[k] != m2[k]]
        if len(diff) < 2:
            continue
        found = False
        for pick in product((0, 1), repeat=len(diff)):
            m3 = list(m1)
            for k, p in zip(diff, pick):
                m3[k] = m2[k] if p else m1[k]
            m3 = tuple(m3)
            if m3 != m1 and m3 != m2 and m3 in members:
                found = True
                break
        if not found:
            return False
    return True


def rainbow_linear_resolution(ideal: MonomialIdeal, colors: Mapping[int, Iterable[int]]) -> bool:
    """Pair-closure test for linear resolution of an ideal generated by rainbow monomials.

    ``colors`` maps each color to its variable indices. Both the generator set
    and its complement among all rainbow monomials must be closed: whenever two
    of them have an lcm of degree >= d + 2, a third one divides that lcm.
    """
    cols = sorted(colors)
    d = len(cols)
    for g in ideal.gens:
        if sorted(v[0] for v in g.variables) != cols or not g.is_squarefree() or g.degree != d:
            raise ValueError(f"{g} is not a rainbow monomial for colors {cols}")
        if any(v[1] not in set(colors[v[0]]) for v in g.variables):
            raise ValueError(f"{g} uses an index outside the declared color classes")
    members = {_rainbow_tuple(g, cols) for g in ideal.gens}
    everything = set(product(*(sorted(colors[c]) for c in cols)))
    return _closed(members, d) and _closed(everything - members, d)


def binary_words(ideal: MonomialIdeal, colors: Mapping[int, Iterable[int]]) -> list[str]:
    """Rainbow generators as binary strings when every color has two indices."""
    cols = sorted(colors)
    idx = {c: sorted(colors[c]) for c in cols}
    if any(len(v) != 2 for v in idx.values()):
        raise ValueError("binary words need exactly two indices per color")
    return sorted("".join(str(idx[c].index(t)) for c, t in zip(cols, _rainbow_tuple(g, cols))) for g in ideal.gens)


# --- chi maps ----------------------------------------------------------------


@dataclass(frozen=True)
class ChiFamily:
    """Isotone maps chi_i : Delta_m(n) -> {0 < 1}, table[color - 1][point index]."""

    m: int
    n: int
    table: tuple[tuple[int, ...], ...]

    @property
    def points(self) -> tuple[Point, ...]:
        return enumerate_points(self.m, self.n)

    def value(self, i: int, b: Point) -> int:
        from .isotone import _simplex

        return self.table[i - 1][_simplex(self.m, self.n).index(b)]

    def validate(self) -> "ChiFamily":
        from .isotone import _simplex

        s = _simplex(self.m, self.n)
        for i in range(1, self.m + 1):
            row = self.table[i - 1]
            for b, v in zip(s.points, row):
                if v not in (0, 1):
                    raise ValueError(f"chi_{i}{b} = {v} is not 0/1")
                if b[i - 1] == 0 and v:
                    raise ValueError(f"chi_{i}{b} must vanish where b_{i} = 0")
                for a in lower_covers(b, i):
                    if row[s.index(a)] > v:
                        raise ValueError(f"chi_{i} is not isotone between {a} and {b}")
        return self


def chi_from_monomial(f: IsotoneFamily, mon: Monomial) -> ChiFamily:
    """chi_i(b) = 1 iff some variable of X_i(b) divides mon."""
    present = mon.variables
    table = tuple(
        tuple(int(any((i, j) in present for j in s)) for s in row) for i, row in enumerate(f.table, start=1)
    )
    return ChiFamily(f.m, f.n, table)


def has_full_zero_point(chi: ChiFamily) -> Point | None:
    """First b (points order) with chi_i(b) = 0 for every i."""
    for k, b in enumerate(chi.points):
        if all(chi.table[i][k] == 0 for i in range(chi.m)):
            return b
    return None


def every_upgraph_has_zero_corner(chi: ChiFamily) -> bool:
    """Every U(a) has some i with chi_i(a + e_i) = 0."""
    from .isotone import _simplex

    s = _simplex(chi.m, chi.n)
    for a in enumerate_points(chi.m, chi.n - 1):
        if all(chi.table[i - 1][s.index(add_unit(a, i))] == 1 for i in range(1, chi.m + 1)):
            return False
    return True


def chi_ls_spans(chi: ChiFamily) -> bool:
    """Hypothesis of the zero-point equivalence: chi-LS edges span every down-graph."""
    from .isotone import _simplex

    s = _simplex(chi.m, chi.n)
    for c in enumerate_points(chi.m, chi.n + 1):
        if len(support(c)) < 3:
            continue
        ls = []
        for e in down_edges(c):
            a, b = e.endpoints
            ka, kb = s.index(a), s.index(b)
            if all(chi.table[p - 1][ka] == chi.table[p - 1][kb] for p in range(1, chi.m + 1) if p not in (e.i, e.j)):
                ls.append((e.i, e.j))
        if not _spans(support(c), ls):
            return False
    return True
