"""The 120 unit icosians as a quaternion group over Z[phi].

Vertices are kept at "standard scale" (twice the unit-quaternion scale), so
every coordinate is a GoldenInt and the natural norm of a vertex is 4.  The
group product rescales by 1/2 so the 120-element set is closed under it.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations, product as iproduct
from typing import Iterable

from .golden import GOLDEN_ZERO, GoldenInt, PHI, PHI_INV

Flat = tuple[int, ...]  # (a0, b0, a1, b1, a2, b2, a3, b3)


class IcosianVec:
    """Golden 4-vector; coordinates are quaternion scalars for (1, i, j, k)."""

    __slots__ = ("c",)

    def __init__(self, c0: GoldenInt, c1: GoldenInt, c2: GoldenInt, c3: GoldenInt):
        self.c = (c0, c1, c2, c3)

    @classmethod
    def from_flat(cls, flat: Flat) -> IcosianVec:
        a0, b0, a1, b1, a2, b2, a3, b3 = flat
        return cls(GoldenInt(a0, b0), GoldenInt(a1, b1), GoldenInt(a2, b2), GoldenInt(a3, b3))

    @property
    def flat(self) -> Flat:
        c = self.c
        return (c[0].a, c[0].b, c[1].a, c[1].b, c[2].a, c[2].b, c[3].a, c[3].b)

    def __repr__(self) -> str:
        return f"IcosianVec{self.c}"

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.c) + ")"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IcosianVec) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.flat)

    def __lt__(self, other: IcosianVec) -> bool:
        return self.flat < other.flat

    def __neg__(self) -> IcosianVec:
        return IcosianVec(*(-x for x in self.c))

    def __add__(self, other: IcosianVec) -> IcosianVec:
        return IcosianVec(*(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other: IcosianVec) -> IcosianVec:
        return IcosianVec(*(x - y for x, y in zip(self.c, other.c)))

    def scaled(self, s: GoldenInt) -> IcosianVec:
        return IcosianVec(*(s * x for x in self.c))

    def dot(self, other: IcosianVec) -> GoldenInt:
        """Natural inner product (norm 4 on vertices at standard scale)."""
        acc = GOLDEN_ZERO
        for x, y in zip(self.c, other.c):
            acc = acc + x * y
        return acc

    def paper_dot(self, other: IcosianVec) -> GoldenInt:
        """Natural inner product divided by 2 (value 2 on a vertex with itself)."""
        return self.dot(other).halved()

    def quat_conj(self) -> IcosianVec:
        c = self.c
        return IcosianVec(c[0], -c[1], -c[2], -c[3])


def flat_dot(u: Flat, v: Flat) -> tuple[int, int]:
    """Natural inner product on flat coordinate tuples, as an (a, b) pair."""
    a = b = 0
    for k in (0, 2, 4, 6):
        ua, ub, va, vb = u[k], u[k + 1], v[k], v[k + 1]
        a += ua * va + ub * vb
        b += ua * vb + ub * va + ub * vb
    return (a, b)


def _flat_quat_mul(u: Flat, v: Flat) -> Flat:
    def gm(i: int, j: int) -> tuple[int, int]:
        ua, ub = u[2 * i], u[2 * i + 1]
        va, vb = v[2 * j], v[2 * j + 1]
        return (ua * va + ub * vb, ua * vb + ub * va + ub * vb)

    p = {(i, j): gm(i, j) for i in range(4) for j in range(4)}
    c0a = p[0, 0][0] - p[1, 1][0] - p[2, 2][0] - p[3, 3][0]
    c0b = p[0, 0][1] - p[1, 1][1] - p[2, 2][1] - p[3, 3][1]
    c1a = p[0, 1][0] + p[1, 0][0] + p[2, 3][0] - p[3, 2][0]
    c1b = p[0, 1][1] + p[1, 0][1] + p[2, 3][1] - p[3, 2][1]
    c2a = p[0, 2][0] - p[1, 3][0] + p[2, 0][0] + p[3, 1][0]
    c2b = p[0, 2][1] - p[1, 3][1] + p[2, 0][1] + p[3, 1][1]
    c3a = p[0, 3][0] + p[1, 2][0] - p[2, 1][0] + p[3, 0][0]
    c3b = p[0, 3][1] + p[1, 2][1] - p[2, 1][1] + p[3, 0][1]
    return (c0a, c0b, c1a, c1b, c2a, c2b, c3a, c3b)


def quat_mul(u: IcosianVec, v: IcosianVec) -> IcosianVec:
    """Plain quaternion product (no rescale)."""
    return IcosianVec.from_flat(_flat_quat_mul(u.flat, v.flat))


def icosian_mul(u: IcosianVec, v: IcosianVec) -> IcosianVec:
    """Group product at standard scale: quaternion product halved.

    Exact only when every coordinate of the raw product is divisible by 2,
    which holds whenever both factors are norm-4 icosians.
    """
    raw = _flat_quat_mul(u.flat, v.flat)
    if any(x % 2 for x in raw):
        raise ValueError("product is not at standard scale; inputs were not both icosians")
    return IcosianVec.from_flat(tuple(x // 2 for x in raw))


ICOSIAN_ONE = IcosianVec(GoldenInt(2), GOLDEN_ZERO, GOLDEN_ZERO, GOLDEN_ZERO)

_EVEN_PERMS4 = tuple(
    p for p in permutations(range(4)) if sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2 == 0
)


@cache
def generate_vertices() -> tuple[IcosianVec, ...]:
    """All 120 vertices, sorted by their flat coordinate key.

    Shapes at standard scale: 8 of (±2,0,0,0) under all coordinate
    permutations, 16 of (±1,±1,±1,±1), and 96 of (0,±1,±phi,±1/phi) under
    even permutations.
    """
    two, one = GoldenInt(2), GoldenInt(1)
    verts: set[IcosianVec] = set()
    for pos in range(4):
        for s in (1, -1):
            c = [GOLDEN_ZERO] * 4
            c[pos] = two * s
            verts.add(IcosianVec(*c))
    for signs in iproduct((1, -1), repeat=4):
        verts.add(IcosianVec(*(one * s for s in signs)))
    base = (GOLDEN_ZERO, one, PHI, PHI_INV)
    for perm in _EVEN_PERMS4:
        placed = [base[perm.index(i)] for i in range(4)]
        nz = [i for i in range(4) if placed[i]]
        for signs in iproduct((1, -1), repeat=3):
            c = list(placed)
            for i, s in zip(nz, signs):
                c[i] = c[i] * s
            verts.add(IcosianVec(*c))
    out = tuple(sorted(verts))
    assert len(out) == 120
    return out


@cache
def vertex_index() -> dict[Flat, int]:
    return {v.flat: i for i, v in enumerate(generate_vertices())}


@cache
def mult_table() -> tuple[tuple[int, ...], ...]:
    """Cayley table on vertex indices: table[i][j] = index of v_i * v_j."""
    verts = generate_vertices()
    idx = vertex_index()
    flats = [v.flat for v in verts]
    table = []
    for u in flats:
        row = []
        for v in flats:
            raw = _flat_quat_mul(u, v)
            row.append(idx[tuple(x // 2 for x in raw)])
        table.append(tuple(row))
    return tuple(table)


@cache
def _one_index() -> int:
    return vertex_index()[ICOSIAN_ONE.flat]


@cache
def inverse_index() -> tuple[int, ...]:
    verts = generate_vertices()
    idx = vertex_index()
    return tuple(idx[v.quat_conj().flat] for v in verts)


def element_order(v: IcosianVec) -> int:
    i = vertex_index()[v.flat]
    return element_order_index(i)


def element_order_index(i: int) -> int:
    table = mult_table()
    one = _one_index()
    k, acc = 1, i
    while acc != one:
        acc = table[acc][i]
        k += 1
        if k > 20:
            raise RuntimeError("order computation ran away; table is corrupt")
    return k


@cache
def find_order5() -> IcosianVec:
    """The least order-5 vertex under the flat coordinate ordering."""
    for i, v in enumerate(generate_vertices()):
        if element_order_index(i) == 5:
            return v
    raise RuntimeError("no order-5 icosian found")


@cache
def cell24_base_indices() -> frozenset[int]:
    """Indices of the 24 vertices of shapes (±2,0,0,0) and (±1,±1,±1,±1)."""
    out = []
    for i, v in enumerate(generate_vertices()):
        if all(x.b == 0 for x in v.c):
            out.append(i)
    assert len(out) == 24
    return frozenset(out)


def mulclose_indices(gens: Iterable[int], maxsize: int = 200) -> frozenset[int]:
    """Subgroup of the 120-group generated by the given vertex indices."""
    table = mult_table()
    gens = list(gens)
    els = set(gens)
    frontier = list(els)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in els:
                    els.add(y)
                    new.append(y)
                    if len(els) > maxsize:
                        raise RuntimeError("closure exceeded expected size")
        frontier = new
    return frozenset(els)
