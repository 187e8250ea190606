"""Monomials over colored variables x_(i,j) and monomial ideals.

A variable is a pair ``(color, index)``. The collapsed ring k[x_1..x_m] uses
index 0, so ``(i, 0)`` is x_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Var = tuple[int, int]


def var(color: int, index: int) -> Var:
    return (color, index)


def var_name(v: Var) -> str:
    return f"x_{v[0]}" if v[1] == 0 else f"x_({v[0]},{v[1]})"


@dataclass(frozen=True, order=True)
class Monomial:
    """Immutable monomial; ``exps`` is a sorted tuple of (variable, positive exponent)."""

    exps: tuple[tuple[Var, int], ...] = ()

    @classmethod
    def from_exponents(cls, exps: Mapping[Var, int]) -> "Monomial":
        return cls(tuple(sorted((tuple(v), int(e)) for v, e in exps.items() if e > 0)))

    @classmethod
    def from_vars(cls, variables: Iterable[Var]) -> "Monomial":
        d: dict = {}
        for v in variables:
            d[tuple(v)] = d.get(tuple(v), 0) + 1
        return cls.from_exponents(d)

    def as_dict(self) -> dict:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def variables(self) -> frozenset:
        return frozenset(v for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, v: Var) -> int:
        return dict(self.exps).get(v, 0)

    def divides(self, other: "Monomial") -> bool:
        o = dict(other.exps)
        return all(o.get(v, 0) >= e for v, e in self.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial.from_exponents(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        o = dict(other.exps)
        return Monomial.from_exponents({v: min(e, o.get(v, 0)) for v, e in self.exps})

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial.from_exponents(d)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] -= e
        return Monomial.from_exponents(d)

    def map_vars(self, fn) -> "Monomial":
        d: dict = {}
        for v, e in self.exps:
            w = fn(v)
            d[w] = d.get(w, 0) + e
        return Monomial.from_exponents(d)

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in self.exps)


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators: drop every monomial divisible by another one."""
    uniq = sorted(set(gens), key=lambda g: (g.degree, g))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal generators and an ambient variable set."""

    gens: tuple[Monomial, ...]
    ambient: frozenset

    def __init__(self, gens: Iterable[Monomial], ambient: Iterable[Var] | None = None):
        gens = minimalize(gens)
        occurring = frozenset(v for g in gens for v in g.variables)
        amb = occurring if ambient is None else frozenset(tuple(v) for v in ambient)
        if not occurring <= amb:
            raise ValueError(f"generators use variables outside the ambient ring: {sorted(occurring - amb)}")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "ambient", amb)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __contains__(self, mon: Monomial) -> bool:
        return any(g.divides(mon) for g in self.gens)

    def same_generators(self, other: "MonomialIdeal") -> bool:
        return set(self.gens) == set(other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    @property
    def variables(self) -> list[Var]:
        return sorted(self.ambient)

    def with_ambient(self, ambient: Iterable[Var]) -> "MonomialIdeal":
        return MonomialIdeal(self.gens, ambient)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def parse_monomial(text: str, names: Mapping[str, Var] | None = None) -> Monomial:
    """Parse products like ``x_(1,2)*x_(2,1)``, ``x_3^2`` or named letters ``x1y2``.

    With ``names`` given, the string is split greedily into the mapped names.
    """
    import re

    text = text.strip()
    if text == "1":
        return Monomial()
    if names is not None:
        keys = sorted(names, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(text):
            for k in keys:
                if text.startswith(k, pos):
                    out.append(names[k])
                    pos += len(k)
                    break
            else:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
        return Monomial.from_vars(out)
    d: dict = {}
    for factor in text.replace(" ", "").split("*"):
        mt = re.fullmatch(r"x_\((\d+),(\d+)\)(?:\^(\d+))?|x_(\d+)(?:\^(\d+))?", factor)
        if not mt:
            raise ValueError(f"cannot parse factor {factor!r}")
        if mt.group(1):
            v, e = (int(mt.group(1)), int(mt.group(2))), int(mt.group(3) or 1)
        else:
            v, e = (int(mt.group(4)), 0), int(mt.group(5) or 1)
        d[v] = d.get(v, 0) + e
    return Monomial.from_exponents(d)


def letter_names(m: int, n: int, letters: str = "xyzw") -> dict:
    """Names like x1, y2 for colors 1..m (letters) and indices 1..n."""
    return {f"{letters[i - 1]}{j}": (i, j) for i in range(1, m + 1) for j in range(1, n + 1)}


def colored_ring(m: int, n: int) -> frozenset:
    return frozenset((i, j) for i in range(1, m + 1) for j in range(1, n + 1))


def maximal_ideal_power(m: int, n: int) -> MonomialIdeal:
    from .lattice import enumerate_points

    gens = [Monomial.from_exponents({(i + 1, 0): b for i, b in enumerate(p)}) for p in enumerate_points(m, n)]
    return MonomialIdeal(gens, [(i, 0) for i in range(1, m + 1)])
