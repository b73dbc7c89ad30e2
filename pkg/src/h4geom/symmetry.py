"""The full symmetry group of the 600-cell as exact matrices.

Group elements are 4x4 matrices over Q(phi) stored as an integer matrix pair
(A, B) with common denominator d, meaning (A + B*phi)/d.  Closure of the
left/right icosian multiplications together with one reflection yields all
14,400 elements; each element also carries its permutation of the 120
vertices and its parity (+1 rotation, -1 otherwise).
"""

from __future__ import annotations

from functools import cache, cached_property
from math import gcd

from .golden import GoldenInt, GoldenRational
from .icosian import ICOSIAN_ONE, IcosianVec, generate_vertices, mulclose_indices, quat_mul, vertex_index
from .polytopes import Cell600, the_600cell

Mat16 = tuple[int, ...]


class SymOp:
    """An exact isometry of the 600-cell."""

    __slots__ = ("anum", "bnum", "den", "parity", "perm")

    def __init__(self, anum: Mat16, bnum: Mat16, den: int, parity: int, perm: tuple[int, ...]):
        self.anum = anum
        self.bnum = bnum
        self.den = den
        self.parity = parity
        self.perm = perm

    def key(self) -> tuple:
        return (self.den, self.anum, self.bnum)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymOp) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SymOp(den={self.den}, parity={self.parity:+d})"

    def matrix(self) -> tuple[tuple[GoldenRational, ...], ...]:
        return tuple(
            tuple(
                GoldenRational(GoldenInt(self.anum[4 * r + c], self.bnum[4 * r + c]), self.den)
                for c in range(4)
            )
            for r in range(4)
        )

    def compose(self, other: SymOp) -> SymOp:
        """self after other."""
        a1, b1, a2, b2 = self.anum, self.bnum, other.anum, other.bnum
        anum = [0] * 16
        bnum = [0] * 16
        for r in range(4):
            for c in range(4):
                sa = sb = 0
                for k in range(4):
                    x, y = a1[4 * r + k], b1[4 * r + k]
                    u, v = a2[4 * k + c], b2[4 * k + c]
                    yv = y * v
                    sa += x * u + yv
                    sb += x * v + y * u + yv
                anum[4 * r + c] = sa
                bnum[4 * r + c] = sb
        den = self.den * other.den
        return _normalized(
            anum, bnum, den, self.parity * other.parity,
            tuple(self.perm[i] for i in other.perm),
        )

    def apply_vec(self, v: IcosianVec) -> IcosianVec:
        flat = v.flat
        out = []
        for r in range(4):
            sa = sb = 0
            for c in range(4):
                x, y = self.anum[4 * r + c], self.bnum[4 * r + c]
                u, w = flat[2 * c], flat[2 * c + 1]
                yw = y * w
                sa += x * u + yw
                sb += x * w + y * u + yw
            if sa % self.den or sb % self.den:
                raise ValueError("image is not integral in Z[phi]")
            out.append(GoldenInt(sa // self.den, sb // self.den))
        return IcosianVec(*out)


def _normalized(anum: list[int], bnum: list[int], den: int, parity: int, perm: tuple[int, ...]) -> SymOp:
    g = den
    for x in anum:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        for x in bnum:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        anum = [x // g for x in anum]
        bnum = [x // g for x in bnum]
        den //= g
    return SymOp(tuple(anum), tuple(bnum), den, parity, perm)


def _det_sign(op: SymOp) -> int:
    """Exact determinant of the matrix; must be +1 or -1."""
    m = op.matrix()

    def det(rows: list[list[GoldenRational]]) -> GoldenRational:
        if len(rows) == 1:
            return rows[0][0]
        acc = GoldenRational(0)
        for c in range(len(rows)):
            minor = [[row[k] for k in range(len(rows)) if k != c] for row in rows[1:]]
            term = rows[0][c] * det(minor)
            acc = acc + (term if c % 2 == 0 else -term)
        return acc

    d = det([list(r) for r in m])
    if d == GoldenRational(1):
        return 1
    if d == GoldenRational(-1):
        return -1
    raise ValueError(f"determinant {d} is not a sign")


def _op_from_matrix(cols: list[IcosianVec], den: int) -> SymOp:
    anum = [0] * 16
    bnum = [0] * 16
    for c, col in enumerate(cols):
        for r in range(4):
            anum[4 * r + c] = col.c[r].a
            bnum[4 * r + c] = col.c[r].b
    probe = SymOp(tuple(anum), tuple(bnum), den, 0, ())
    verts = generate_vertices()
    idx = vertex_index()
    perm = tuple(idx[probe.apply_vec(v).flat] for v in verts)
    op = _normalized(list(probe.anum), list(probe.bnum), den, 0, perm)
    return SymOp(op.anum, op.bnum, op.den, _det_sign(op), perm)


_BASIS = tuple(
    IcosianVec(*(GoldenInt(1 if k == r else 0) for r in range(4))) for k in range(4)
)


def left_mul(v: IcosianVec) -> SymOp:
    """x -> v*x/2, a rotation."""
    return _op_from_matrix([quat_mul(v, e) for e in _BASIS], 2)


def right_mul(v: IcosianVec) -> SymOp:
    """x -> x*v/2, a rotation."""
    return _op_from_matrix([quat_mul(e, v) for e in _BASIS], 2)


def reflection(v: IcosianVec) -> SymOp:
    """x -> x - 2 (x.v)/(v.v) v; negates v, fixes its orthoplane, parity odd."""
    cols = []
    for e in _BASIS:
        coef = e.dot(v)  # (e.v); subtract coef * v / 2 since v.v = 4
        col = e.scaled(GoldenInt(2)) - v.scaled(coef)
        cols.append(col)
    return _op_from_matrix(cols, 2)


def identity_op() -> SymOp:
    return _op_from_matrix([e.scaled(GoldenInt(2)) for e in _BASIS], 2)


def negation_op() -> SymOp:
    return _op_from_matrix([e.scaled(GoldenInt(-2)) for e in _BASIS], 2)


class SymmetryGroup:
    def __init__(self, cell: Cell600) -> None:
        self.cell = cell
        self.generators = self._make_generators()
        self.ops = self._close()
        self.by_key = {op.key(): k for k, op in enumerate(self.ops)}

    def _make_generators(self) -> tuple[SymOp, ...]:
        cell = self.cell
        verts = cell.vertices
        a_idx = cell.index[cell.g.flat]
        b_idx = next(
            i for i in range(cell.n)
            if len(mulclose_indices((a_idx, i))) == 120
        )
        a, b = verts[a_idx], verts[b_idx]
        return (
            left_mul(a), left_mul(b), right_mul(a), right_mul(b),
            reflection(ICOSIAN_ONE),
        )

    def _close(self) -> tuple[SymOp, ...]:
        els: dict[tuple, SymOp] = {g.key(): g for g in self.generators}
        frontier = list(els.values())
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = g.compose(x)
                    k = y.key()
                    if k not in els:
                        els[k] = y
                        new.append(y)
                        if len(els) > 14400:
                            raise RuntimeError("closure exceeded 14400; arithmetic bug")
            frontier = new
        return tuple(sorted(els.values(), key=SymOp.key))

    @cached_property
    def rotation_count(self) -> int:
        return sum(1 for op in self.ops if op.parity == 1)

    # ---------- induced permutations ----------

    def pair_perm(self, op: SymOp) -> tuple[int, ...]:
        cell = self.cell
        return tuple(cell.pair_of[op.perm[cell.pairs[p][0]]] for p in range(60))

    @cached_property
    def _cell_key(self) -> dict[tuple[int, int], int]:
        """An orthogonal pid pair inside a 24-cell determines it uniquely."""
        out: dict[tuple[int, int], int] = {}
        cell = self.cell
        for idx in range(25):
            for tetrad in cell.tetrads_of_cell24(idx):
                for i in range(4):
                    for j in range(4):
                        if i != j:
                            out[(tetrad[i], tetrad[j])] = idx
        return out

    def cell_perm(self, op: SymOp) -> tuple[int, ...]:
        pp = self.pair_perm(op)
        cell = self.cell
        out = []
        for idx in range(25):
            t = cell.tetrads_of_cell24(idx)[0]
            out.append(self._cell_key[(pp[t[0]], pp[t[1]])])
        return tuple(out)

    def cell_perm_checked(self, op: SymOp) -> tuple[int, ...]:
        """Full set-image computation; raises if an image is not a 24-cell."""
        pp = self.pair_perm(op)
        cell = self.cell
        lookup = {c: k for k, c in enumerate(cell.cells24)}
        return tuple(lookup[frozenset(pp[p] for p in cell.cells24[idx])] for idx in range(25))

    @cached_property
    def cell_perms(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for k, op in enumerate(self.ops):
            if k % 289 == 0 or op in self.generators:
                cp = self.cell_perm_checked(op)
                assert cp == self.cell_perm(op)
            else:
                cp = self.cell_perm(op)
            out.append(cp)
        return tuple(out)

    @cached_property
    def _partition_index(self) -> dict[frozenset[int], int]:
        return {p: k for k, p in enumerate(self.cell.partitions)}

    def ten_perm(self, op: SymOp) -> tuple[int, ...]:
        """Induced permutation of the ten partitions (symbols 1..5, 6..X)."""
        cp = self.cell_perm(op)
        return tuple(
            self._partition_index[frozenset(cp[c] for c in part)]
            for part in self.cell.partitions
        )

    @cached_property
    def ten_perms(self) -> tuple[tuple[int, ...], ...]:
        pidx = self._partition_index
        parts = self.cell.partitions
        out = []
        for cp in self.cell_perms:
            out.append(tuple(pidx[frozenset(cp[c] for c in part)] for part in parts))
        return tuple(out)

    @cached_property
    def ten_kernel(self) -> tuple[int, ...]:
        idt = tuple(range(10))
        return tuple(k for k, tp in enumerate(self.ten_perms) if tp == idt)

    # ---------- stabilizers ----------

    def stabilizer_of_vertex(self, i: int) -> tuple[int, ...]:
        return tuple(k for k, op in enumerate(self.ops) if op.perm[i] == i)

    def stabilizer_of_cell(self, c: int) -> tuple[int, ...]:
        return tuple(k for k, cp in enumerate(self.cell_perms) if cp[c] == c)

    def orbits(self, perms: list[tuple[int, ...]], points: range) -> list[set[int]]:
        seen: set[int] = set()
        out = []
        for p in points:
            if p in seen:
                continue
            orbit = {p}
            frontier = [p]
            while frontier:
                x = frontier.pop()
                for perm in perms:
                    y = perm[x]
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            seen |= orbit
            out.append(orbit)
        return out

    @cached_property
    def center(self) -> tuple[int, ...]:
        out = []
        for k, op in enumerate(self.ops):
            ok = True
            for g in self.generators:
                pa, pb = op.perm, g.perm
                for i in range(120):
                    if pa[pb[i]] != pb[pa[i]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(k)
        return tuple(out)


@cache
def generate_group() -> SymmetryGroup:
    return SymmetryGroup(the_600cell())


def action_on_partitions(op: SymOp) -> tuple[int, ...]:
    return generate_group().ten_perm(op)


def stabilizer_orders() -> tuple[int, int]:
    grp = generate_group()
    cell = grp.cell
    v = cell.index[ICOSIAN_ONE.flat]
    c = cell.array[0][0]
    return (len(grp.stabilizer_of_vertex(v)), len(grp.stabilizer_of_cell(c)))
