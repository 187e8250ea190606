"""Ideals from isotone families, named polarizations, and the Hilbert-series oracle.

The oracle certifies that the variable differences x_(i,j) - x_(i,j') form a
regular sequence on k[x_(i,j)]/J: that happens exactly when J and its
collapse share the numerator of their Hilbert series.
"""

from __future__ import annotations

from typing import Iterable

from .errors import BudgetExceeded
from .isotone import IsotoneFamily, check_family
from .lattice import Point, enumerate_points, geq_i, sub_unit, support
from .monomials import Monomial, MonomialIdeal, Var, colored_ring, maximal_ideal_power

DEFAULT_HILBERT_BUDGET = 20


def standard_family(m: int, n: int) -> IsotoneFamily:
    """X_i(b) = {1..b_i}."""
    return IsotoneFamily.from_function(m, n, lambda i, b: range(1, b[i - 1] + 1))


def b_family(m: int, n: int) -> IsotoneFamily:
    """X_i(b) = {s+1..s+b_i} with s = b_1 + ... + b_{i-1}.

    s + b_i <= n, so the indices already lie in 1..n.
    """
    return IsotoneFamily.from_function(m, n, lambda i, b: range(sum(b[: i - 1]) + 1, sum(b[:i]) + 1))


def monomial_at(f: IsotoneFamily, b: Point) -> Monomial:
    """m(b) = prod_i prod_{j in X_i(b)} x_(i,j)."""
    return Monomial.from_vars((i, j) for i in range(1, f.m + 1) for j in f.X(i, b))


def color_part(f: IsotoneFamily, i: int, b: Point) -> Monomial:
    return Monomial.from_vars((i, j) for j in f.X(i, b))


def generators_from_family(f: IsotoneFamily) -> MonomialIdeal:
    return MonomialIdeal((monomial_at(f, b) for b in f.points), colored_ring(f.m, f.n))


def multidegree(mon: Monomial, m: int) -> Point:
    """Collapsed exponent vector of a colored monomial."""
    out = [0] * m
    for (i, _), e in mon.exps:
        out[i - 1] += e
    return tuple(out)


def family_from_ideal(ideal: MonomialIdeal, m: int, n: int) -> IsotoneFamily:
    """Read the sets X_i(b) back off a squarefree ideal whose generators collapse onto Delta_m(n)."""
    mapping = {}
    for g in ideal.gens:
        if not g.is_squarefree():
            raise ValueError(f"generator {g} is not squarefree")
        b = multidegree(g, m)
        if sum(b) != n:
            raise ValueError(f"generator {g} has degree {sum(b)}, expected {n}")
        for i in range(1, m + 1):
            if (i, b) in mapping:
                raise ValueError(f"two generators collapse to x^{b}")
            mapping[(i, b)] = {j for (c, j) in g.variables if c == i}
    return check_family(IsotoneFamily.from_mapping(m, n, mapping))


def collapse(ideal: MonomialIdeal) -> MonomialIdeal:
    """Image under x_(i,j) -> x_i, re-minimalized."""
    gens = [g.map_vars(lambda v: (v[0], 0)) for g in ideal.gens]
    return MonomialIdeal(gens, {(v[0], 0) for v in ideal.ambient})


def hilbert_numerator(ideal: MonomialIdeal, budget: int = DEFAULT_HILBERT_BUDGET) -> tuple[int, ...]:
    """Coefficients of N(t) = sum over generator subsets S of (-1)^|S| t^deg lcm(S).

    Partial sums are coalesced by lcm, so the work is bounded by the number
    of distinct lcms rather than 2^#gens. The Hilbert series of the quotient
    is N(t) / (1 - t)^#variables.
    """
    gens = ideal.gens
    if len(gens) > budget:
        raise BudgetExceeded(f"{len(gens)} generators exceed the inclusion-exclusion budget {budget}")
    if ideal.is_squarefree():
        pos = {v: k for k, v in enumerate(sorted({v for g in gens for v in g.variables}))}
        masks = [sum(1 << pos[v] for v in g.variables) for g in gens]
        terms: dict = {0: 1}
        for g in masks:
            new = dict(terms)
            for lcm, c in terms.items():
                key = lcm | g
                new[key] = new.get(key, 0) - c
            terms = new
        degree = lambda key: bin(key).count("1")  # noqa: E731
    else:
        variables = sorted({v for g in gens for v in g.variables})
        vecs = [tuple(g.exponent(v) for v in variables) for g in gens]
        terms = {tuple(0 for _ in variables): 1}
        for g in vecs:
            new = dict(terms)
            for lcm, c in terms.items():
                key = tuple(max(x, y) for x, y in zip(lcm, g))
                new[key] = new.get(key, 0) - c
            terms = new
        degree = sum
    coeffs: dict = {}
    for key, c in terms.items():
        if c:
            d = degree(key)
            coeffs[d] = coeffs.get(d, 0) + c
    top = max((d for d, c in coeffs.items() if c), default=0)
    return tuple(coeffs.get(d, 0) for d in range(top + 1))


_POWER_NUMERATORS: dict = {}


def _power_numerator(m: int, n: int) -> tuple[int, ...]:
    key = (m, n)
    if key not in _POWER_NUMERATORS:
        _POWER_NUMERATORS[key] = hilbert_numerator(maximal_ideal_power(m, n), budget=10**9)
    return _POWER_NUMERATORS[key]


def is_polarization(ideal: MonomialIdeal, budget: int = DEFAULT_HILBERT_BUDGET) -> bool:
    """Squarefree, and the collapse x_(i,j) -> x_i is cut out by a regular sequence."""
    if not ideal.is_squarefree():
        return False
    return hilbert_numerator(ideal, budget) == hilbert_numerator(collapse(ideal), budget=10**9)


def is_polarization_oracle(ideal: MonomialIdeal, m: int, n: int, budget: int = DEFAULT_HILBERT_BUDGET) -> bool:
    """Whether the colored squarefree ideal is a polarization of (x_1..x_m)^n."""
    if not ideal.is_squarefree():
        return False
    if any(not 1 <= v[0] <= m for v in ideal.ambient):
        return False
    if collapse(ideal) != maximal_ideal_power(m, n):
        return False
    return hilbert_numerator(ideal, budget) == _power_numerator(m, n)


def is_simple_separation(
    J2: MonomialIdeal, J1: MonomialIdeal, r1: Var, r2: Var, r: Var, budget: int = DEFAULT_HILBERT_BUDGET
) -> bool:
    """Whether J2 is a simple separation of J1 along the merge r1, r2 -> r.

    Only same-color merges are modeled; anything else is a contract violation.
    """
    r1, r2, r = tuple(r1), tuple(r2), tuple(r)
    if r1 == r2:
        raise ValueError("a simple separation merges two distinct variables")
    if not (r1[0] == r2[0] == r[0]):
        raise ValueError("merged variables must share a color")
    expected = (J1.ambient - {r}) | {r1, r2}
    if r not in J1.ambient or J2.ambient != expected:
        raise ValueError("J2 must live on the ambient of J1 with r split into r1, r2")

    def merge(v):
        return r if v in (r1, r2) else v

    image = MonomialIdeal((g.map_vars(merge) for g in J2.gens), J1.ambient)
    if image != J1:
        return False
    occurring = {v for g in J2.gens for v in g.variables}
    if r1 not in occurring or r2 not in occurring:
        return False
    return hilbert_numerator(J2, budget) == hilbert_numerator(J1, budget)


def cross_monotone_check(f: IsotoneFamily) -> bool:
    """For all i and all a, b with a_i <= b_i, a_j >= b_j (j != i): X_i(a) is inside X_i(b)."""
    pts = f.points
    for i in range(1, f.m + 1):
        for a in pts:
            for b in pts:
                if geq_i(a, b, i) and not f.X(i, a) <= f.X(i, b):
                    return False
    return True


def common_factor_check(f: IsotoneFamily) -> bool:
    """prod_{i in supp c} m_i(c - e_i) divides m(c - e_j) for every down-graph vertex."""
    for c in enumerate_points(f.m, f.n + 1):
        supp = support(c)
        common = Monomial()
        for i in supp:
            common = common * color_part(f, i, sub_unit(c, i))
        for j in supp:
            if not common.divides(monomial_at(f, sub_unit(c, j))):
                return False
    return True


def natural_complete_intersection(degrees: Iterable[int]) -> MonomialIdeal:
    """Polarization (x_(i,1)...x_(i,n_i) : i) of (x_1^n_1, ..., x_m^n_m)."""
    degrees = list(degrees)
    gens = [Monomial.from_vars((i, j) for j in range(1, d + 1)) for i, d in enumerate(degrees, start=1)]
    return MonomialIdeal(gens, {(i, j) for i, d in enumerate(degrees, start=1) for j in range(1, d + 1)})
