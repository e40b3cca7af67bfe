"""Root data for the simple types A_n through G_2.

Conventions
-----------
Simple roots are numbered as in Bourbaki.  The Cartan matrix is stored with
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` is the simple root
``alpha_j`` written in fundamental-weight coordinates.  Weights are integer
tuples in the fundamental-weight basis, which makes every pairing with a
coroot an integer dot product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .errors import DomainError

Weight = Tuple[int, ...]

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise DomainError(f"unknown family {self.family!r}; expected one of ABCDEFG")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise DomainError(f"rank {self.rank} is not admissible for type {self.family}")

    @classmethod
    def parse(cls, label: str) -> "RootSystemSpec":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", label)
        if not m:
            raise DomainError(f"cannot parse root system label {label!r} (expected e.g. A2, G2, E8)")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A positive root in three coordinate systems."""

    root: Weight  # over simple roots
    coroot: Weight  # over simple coroots
    weight: Weight  # over fundamental weights

    @property
    def height(self) -> int:
        return sum(self.root)


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    cartan: Tuple[Tuple[int, ...], ...]
    pos_roots: Tuple[Root, ...]
    coxeter: int
    alpha_zero: int
    weyl_order: int = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def num_pos_roots(self) -> int:
        return len(self.pos_roots)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def __str__(self):
        return str(self.spec)


def cartan_matrix(spec: RootSystemSpec) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix with ``C[i][j] = <alpha_j, alpha_i^vee>`` (Bourbaki numbering)."""
    n, fam = spec.rank, spec.family
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        C[i][j] = a_ij
        C[j][i] = a_ji

    if fam in "ABCD":
        for i in range(n - 2):
            link(i, i + 1)
        if fam == "A" and n >= 2:
            link(n - 2, n - 1)
        elif fam == "B":
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            link(n - 2, n - 1, -1, -2)
        elif fam == "C":
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            link(n - 2, n - 1, -2, -1)
        elif fam == "D":
            link(n - 3, n - 1)
    elif fam == "E":
        # 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in C)


def _symmetrizer(C) -> Tuple[Fraction, ...]:
    """Half squared lengths d_i with (alpha_i, alpha_j) = d_i * C[i][j]."""
    n = len(C)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and C[i][j] != 0 and d[j] is None:
                # d_i C[i][j] = d_j C[j][i]
                d[j] = d[i] * C[i][j] / C[j][i]
                stack.append(j)
    return tuple(d)


def _positive_roots(C) -> list:
    """Positive roots in simple-root coordinates, by root-string closure."""
    n = len(C)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for a in layer:
            for i in range(n):
                # <a, alpha_i^vee> = sum_j a_j C[i][j]
                pair = sum(a[j] * C[i][j] for j in range(n))
                r = 0
                b = list(a)
                while True:
                    b[i] -= 1
                    if tuple(b) in found:
                        r += 1
                    else:
                        break
                if r - pair > 0:
                    c = list(a)
                    c[i] += 1
                    c = tuple(c)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        layer = nxt
    return sorted(found, key=lambda a: (sum(a), a))


@lru_cache(maxsize=None)
def build(spec: RootSystemSpec) -> RootSystem:
    C = cartan_matrix(spec)
    n = spec.rank
    d = _symmetrizer(C)
    roots = []
    for a in _positive_roots(C):
        norm = sum(a[i] * a[j] * d[i] * C[i][j] for i in range(n) for j in range(n))
        # alpha^vee = 2 alpha / (alpha, alpha); alpha_i^vee = alpha_i / d_i
        cor = []
        for i in range(n):
            c = Fraction(2) * a[i] * d[i] / norm
            if c.denominator != 1:
                raise AssertionError(f"non-integral coroot for {a}")
            cor.append(int(c))
        wt = tuple(sum(C[i][j] * a[j] for j in range(n)) for i in range(n))
        roots.append(Root(a, tuple(cor), wt))
    heights = [sum(r.coroot) for r in roots]  # <rho, beta^vee>
    top = max(heights)
    alpha_zero = heights.index(top)
    rs = RootSystem(
        spec=spec,
        cartan=C,
        pos_roots=tuple(roots),
        coxeter=top + 1,
        alpha_zero=alpha_zero,
        weyl_order=0,
    )
    object.__setattr__(rs, "weyl_order", _weyl_order(rs))
    return rs


def build_label(label: str) -> RootSystem:
    return build(RootSystemSpec.parse(label))


def pairing(rs: RootSystem, lam, root_idx: int) -> int:
    """<lam, alpha^vee> for the positive root at ``root_idx``."""
    return sum(c * x for c, x in zip(rs.pos_roots[root_idx].coroot, lam))


def simple_reflect(rs: RootSystem, lam, i: int) -> Weight:
    """Linear reflection s_i(lam) = lam - <lam, alpha_i^vee> alpha_i."""
    k = lam[i]
    return tuple(x - k * rs.cartan[j][i] for j, x in enumerate(lam))


def _orbit_size(rs: RootSystem, start: Weight, gens) -> int:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for i in gens:
            if v[i] != 0:
                w = simple_reflect(rs, v, i)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return len(seen)


def _weyl_order(rs: RootSystem) -> int:
    # |W_J| = |W_J . omega_j| * |W_{J - j}|: the stabiliser of omega_j in the
    # parabolic W_J is the parabolic subgroup on J - {j}.
    order = 1
    J = list(range(rs.rank))
    while J:
        j = J[-1]
        omega = tuple(1 if k == j else 0 for k in range(rs.rank))
        order *= _orbit_size(rs, omega, J)
        J.pop()
    return order


def weyl_group_order(rs: RootSystem) -> int:
    return rs.weyl_order


def weyl_group_order_bfs(rs: RootSystem) -> int:
    """Count group elements by BFS over reflection words acting on rho.

    W acts simply transitively on the orbit of a regular weight, so the orbit
    of rho has exactly |W| elements.
    """
    return _orbit_size(rs, rs.rho, range(rs.rank))


def supported_systems(max_rank: int = 8):
    """All supported types up to ``max_rank`` in (family, rank) order."""
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        out += [RootSystemSpec(fam, n) for n in range(lo, max_rank + 1)]
    out += [RootSystemSpec("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(RootSystemSpec("F", 4))
    out.append(RootSystemSpec("G", 2))
    return out


def to_json(rs: RootSystem) -> dict:
    return {
        "type": str(rs.spec),
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "coxeter": rs.coxeter,
        "num_pos_roots": rs.num_pos_roots,
        "weyl_order": str(rs.weyl_order),
        "rho": list(rs.rho),
        "alpha_zero": rs.alpha_zero,
        "pos_roots": [
            {"root": list(r.root), "coroot": list(r.coroot), "weight": list(r.weight)}
            for r in rs.pos_roots
        ],
    }
