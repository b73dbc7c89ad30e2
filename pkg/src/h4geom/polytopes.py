"""Incidence structure of the 600-cell and its relatives.

Everything is enumerated exactly at standard scale (vertex norm 4): edges,
faces, cells, the 75 inscribed 16-cells and 25 24-cells, the 5x5 array whose
rows and columns give the ten partitions into five disjoint 24-cells, the
duad labels these induce on vertex pairs, hexagons/decagons/pentagons and the
prime-indexed generalisations of the array, the labeled 120-cell, and the
rectified 600-cell.

Vertex pairs {v, -v} are referred to by integer pair ids 0..59; a duad is a
tuple (row, col) with row in 1..5 and col in 6..10 (10 is printed as X).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations

from .golden import GoldenInt, PHI_INV, golden_sign
from .icosian import (
    ICOSIAN_ONE,
    IcosianVec,
    cell24_base_indices,
    find_order5,
    flat_dot,
    generate_vertices,
    inverse_index,
    mult_table,
    vertex_index,
)

Duad = tuple[int, int]

# Paper-scale inner product values between (possibly equal) vertices.
_PP_KEYS = {
    (2, 0): "2", (-2, 0): "-2",
    (1, 0): "1", (-1, 0): "-1",
    (0, 0): "0",
    (0, 1): "phi", (0, -1): "-phi",
    (-1, 1): "phi-inv", (1, -1): "-phi-inv",
}
# Unsigned class of a pair-level inner product.
_ABS_CLASS = {
    "2": "2", "-2": "2", "1": "1", "-1": "1", "0": "0",
    "phi": "phi", "-phi": "phi", "phi-inv": "phi-inv", "-phi-inv": "phi-inv",
}


def duad_str(d: Duad) -> str:
    r, c = d
    return f"({r}{'X' if c == 10 else c})"


def label_str(label: tuple[Duad, ...]) -> str:
    return "".join(duad_str(d) for d in label)


def perm_parity(seq) -> int:
    """0 for even, 1 for odd."""
    inv = sum(a > b for i, a in enumerate(seq) for b in seq[i + 1:])
    return inv % 2


@dataclass(frozen=True)
class SubPolytope:
    """A tagged member list; vertex-level kinds list vertex indices,
    pair-level kinds list pair ids, and `partition` lists 24-cell indices."""

    kind: str
    members: tuple[int, ...]

    _SIZES = {
        "edge": 2, "triangle": 3, "tetra-cell": 4,
        "cell16": 4, "cell8": 8, "cell24": 12,
        "hexagon": 3, "decagon": 5, "pentagon": 5, "partition": 5,
    }

    def __post_init__(self) -> None:
        if len(self.members) != self._SIZES[self.kind]:
            raise ValueError(f"{self.kind} needs {self._SIZES[self.kind]} members")


class Cell600:
    """The 600-cell with all derived incidence tables, built lazily."""

    def __init__(self) -> None:
        self.vertices = generate_vertices()
        self.index = vertex_index()
        self.n = len(self.vertices)
        self.flats = tuple(v.flat for v in self.vertices)
        self.neg = tuple(self.index[(-v).flat] for v in self.vertices)

    # ---------- inner products ----------

    @cached_property
    def pp(self) -> tuple[tuple[str, ...], ...]:
        """Paper inner product names for every ordered vertex pair."""
        rows = []
        for u in self.flats:
            row = []
            for v in self.flats:
                a, b = flat_dot(u, v)
                row.append(_PP_KEYS[(a // 2, b // 2)])
            rows.append(tuple(row))
        return tuple(rows)

    def paper_inner_product(self, i: int, j: int) -> GoldenInt:
        a, b = flat_dot(self.flats[i], self.flats[j])
        return GoldenInt(a // 2, b // 2)

    # ---------- antipodal pairs ----------

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((i, self.neg[i]) for i in range(self.n) if i < self.neg[i]))

    @cached_property
    def pair_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for pid, (i, j) in enumerate(self.pairs):
            out[i] = out[j] = pid
        return tuple(out)

    @cached_property
    def pair_class(self) -> tuple[tuple[str, ...], ...]:
        """Unsigned inner-product class between pair representatives."""
        reps = [p[0] for p in self.pairs]
        return tuple(
            tuple(_ABS_CLASS[self.pp[a][b]] for b in reps) for a in reps
        )

    # ---------- skeleton ----------

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Bitmask of phi-neighbours (the 720 edges) per vertex."""
        masks = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if self.pp[i][j] == "phi":
                    m |= 1 << j
            masks.append(m)
        return tuple(masks)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adj[i] >> j & 1
        )

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        out = []
        for i, j in self.edges:
            common = self.adj[i] & self.adj[j]
            k = common >> (j + 1) << (j + 1)  # only k > j
            while k:
                low = k & -k
                out.append((i, j, low.bit_length() - 1))
                k ^= low
        return tuple(out)

    @cached_property
    def tetra_cells(self) -> tuple[tuple[int, int, int, int], ...]:
        out = set()
        for i, j in self.edges:
            common = self.adj[i] & self.adj[j]
            members = []
            m = common
            while m:
                low = m & -m
                members.append(low.bit_length() - 1)
                m ^= low
            for k, l in combinations(members, 2):
                if self.adj[k] >> l & 1:
                    out.add(tuple(sorted((i, j, k, l))))
        cells = tuple(sorted(out))
        assert len(cells) == 600
        return cells

    def skeleton_counts(self) -> tuple[int, int, int]:
        return (len(self.edges), len(self.triangles), len(self.tetra_cells))

    # ---------- 16-cells, 24-cells, 8-cells ----------

    @cached_property
    def pair_orth(self) -> tuple[int, ...]:
        masks = []
        for a in range(60):
            m = 0
            for b in range(60):
                if a != b and self.pair_class[a][b] == "0":
                    m |= 1 << b
            masks.append(m)
        return tuple(masks)

    @cached_property
    def cells16(self) -> tuple[tuple[int, int, int, int], ...]:
        out = []
        for a in range(60):
            for b in range(a + 1, 60):
                if not self.pair_orth[a] >> b & 1:
                    continue
                common = self.pair_orth[a] & self.pair_orth[b]
                members = [k for k in range(b + 1, 60) if common >> k & 1]
                for c, d in combinations(members, 2):
                    if self.pair_orth[c] >> d & 1:
                        out.append((a, b, c, d))
        cells = tuple(sorted(set(out)))
        assert len(cells) == 75
        return cells

    @cached_property
    def cells24(self) -> tuple[frozenset[int], ...]:
        """Each 16-cell extended by the 8 pairs at unsigned product 1 with
        all four of its members; the extension is unique, giving 25 cells."""
        seen = {}
        for cell in self.cells16:
            extra = [
                q for q in range(60)
                if q not in cell
                and all(self.pair_class[q][p] == "1" for p in cell)
            ]
            assert len(extra) == 8, "16-cell completion is not 8 pairs"
            full = frozenset(cell) | frozenset(extra)
            seen.setdefault(full, []).append(cell)
        cells = tuple(sorted(seen, key=lambda s: tuple(sorted(s))))
        assert len(cells) == 25
        for cell, sixteens in seen.items():
            assert len(sixteens) == 3  # three 16-cells per 24-cell
        return cells

    @cached_property
    def cell16_ambient(self) -> dict[tuple[int, ...], int]:
        """16-cell -> index of the unique 24-cell containing it."""
        out = {}
        for idx, cell in enumerate(self.cells24):
            for tetrad in self.tetrads_of_cell24(idx):
                assert tetrad not in out
                out[tetrad] = idx
        assert set(out) == set(self.cells16)
        return out

    def tetrads_of_cell24(self, idx: int) -> tuple[tuple[int, ...], ...]:
        """The three mutually orthogonal tetrads inside a 24-cell."""
        cell = sorted(self.cells24[idx])
        groups = []
        unused = set(cell)
        while unused:
            p = min(unused)
            tetrad = [p] + [q for q in cell if q != p and self.pair_class[p][q] == "0"]
            assert len(tetrad) == 4
            groups.append(tuple(sorted(tetrad)))
            unused -= set(tetrad)
        assert len(groups) == 3
        return tuple(groups)

    @cached_property
    def cells8(self) -> tuple[frozenset[int], ...]:
        out = set()
        for idx in range(25):
            tets = self.tetrads_of_cell24(idx)
            for t1, t2 in combinations(tets, 2):
                out.add(frozenset(t1) | frozenset(t2))
        cells = tuple(sorted(out, key=lambda s: tuple(sorted(s))))
        assert len(cells) == 75
        return cells

    @cached_property
    def cell_of_pair(self) -> tuple[tuple[int, ...], ...]:
        """The five 24-cells through each vertex pair."""
        lists: list[list[int]] = [[] for _ in range(60)]
        for idx, cell in enumerate(self.cells24):
            for p in cell:
                lists[p].append(idx)
        assert all(len(l) == 5 for l in lists)
        return tuple(tuple(l) for l in lists)

    # ---------- the 5x5 array and the ten partitions ----------

    @cached_property
    def g(self) -> IcosianVec:
        return find_order5()

    @cached_property
    def array(self) -> tuple[tuple[int, ...], ...]:
        """array[i][j] = index of the 24-cell g^i * B * g^-j, B the base cell."""
        table = mult_table()
        inv = inverse_index()
        gi = self.index[self.g.flat]
        gpow = [self.index[ICOSIAN_ONE.flat]]
        for _ in range(4):
            gpow.append(table[gpow[-1]][gi])
        base = sorted(cell24_base_indices())
        cellset_to_idx = {
            frozenset(self.pairs[p][0] for p in cell) | frozenset(self.pairs[p][1] for p in cell): k
            for k, cell in enumerate(self.cells24)
        }
        grid = []
        for i in range(5):
            row = []
            for j in range(5):
                verts = frozenset(table[table[gpow[i]][a]][inv[gpow[j]]] for a in base)
                row.append(cellset_to_idx[verts])
            grid.append(tuple(row))
        flat = [c for row in grid for c in row]
        assert len(set(flat)) == 25
        return tuple(grid)

    @cached_property
    def duad_of_cell(self) -> tuple[Duad, ...]:
        out: list[Duad | None] = [None] * 25
        for i in range(5):
            for j in range(5):
                out[self.array[i][j]] = (1 + i, 6 + j)
        return tuple(out)  # type: ignore[arg-type]

    @cached_property
    def partitions(self) -> tuple[frozenset[int], ...]:
        """Ten partitions of the vertex set into five disjoint 24-cells:
        the five rows then the five columns of the array."""
        rows = [frozenset(self.array[i][j] for j in range(5)) for i in range(5)]
        cols = [frozenset(self.array[i][j] for i in range(5)) for j in range(5)]
        for part in rows + cols:
            pids = [p for c in part for p in self.cells24[c]]
            assert sorted(pids) == list(range(60))
        return tuple(rows + cols)

    @cached_property
    def disjointness_mask(self) -> tuple[int, ...]:
        masks = []
        for a in range(25):
            m = 0
            for b in range(25):
                if a != b and not (self.cells24[a] & self.cells24[b]):
                    m |= 1 << b
            masks.append(m)
        return tuple(masks)

    def find_all_partitions(self) -> tuple[frozenset[int], ...]:
        """Exhaustive 5-clique search over the disjointness graph."""
        cliques = []

        def extend(stack: list[int], cand: int) -> None:
            if len(stack) == 5:
                cliques.append(frozenset(stack))
                return
            m = cand
            while m:
                low = m & -m
                b = low.bit_length() - 1
                m ^= low
                extend(stack + [b], cand & self.disjointness_mask[b] & ~((1 << (b + 1)) - 1))

        for a in range(25):
            extend([a], self.disjointness_mask[a] & ~((1 << (a + 1)) - 1))
        return tuple(sorted(cliques, key=lambda s: tuple(sorted(s))))

    # ---------- labels ----------

    @cached_property
    def labels(self) -> tuple[tuple[Duad, ...], ...]:
        out = []
        for pid in range(60):
            duads = sorted(self.duad_of_cell[c] for c in self.cell_of_pair[pid])
            rows = [d[0] for d in duads]
            cols = [d[1] for d in duads]
            assert rows == [1, 2, 3, 4, 5] and sorted(cols) == [6, 7, 8, 9, 10]
            out.append(tuple(duads))
        assert len(set(out)) == 60
        return tuple(out)

    @cached_property
    def pair_of_label(self) -> dict[tuple[Duad, ...], int]:
        return {lab: pid for pid, lab in enumerate(self.labels)}

    def label_of_vertex(self, i: int) -> tuple[Duad, ...]:
        return self.labels[self.pair_of[i]]

    # ---------- hexagons, decagons, pentagons ----------

    @cached_property
    def hexagons(self) -> dict[frozenset[int], frozenset[int]]:
        """Map {cell_a, cell_b} -> the 3 vertex pairs in both (a hexagon)."""
        out = {}
        for a, b in combinations(range(25), 2):
            inter = self.cells24[a] & self.cells24[b]
            if not inter:
                continue
            assert len(inter) == 3
            ps = sorted(inter)
            for p, q in combinations(ps, 2):
                assert self.pair_class[p][q] == "1"
            out[frozenset((a, b))] = frozenset(inter)
        assert len(out) == 200 and len(set(out.values())) == 200
        return out

    @cached_property
    def hexagon_list(self) -> tuple[frozenset[int], ...]:
        return tuple(sorted(self.hexagons.values(), key=lambda s: tuple(sorted(s))))

    def hexagons_orthogonal(self, h1: frozenset[int], h2: frozenset[int]) -> bool:
        return all(self.pair_class[p][q] == "0" for p in h1 for q in h2)

    @cached_property
    def hexagon_orthogonal_pairs(self) -> tuple[frozenset[frozenset[int]], ...]:
        """Each hexagon from cells (i j), (i' j') pairs with the hexagon from
        the crossed cells (i j'), (i' j)."""
        pairs = set()
        for cellpair, hexagon in self.hexagons.items():
            a, b = sorted(cellpair)
            (ra, ca), (rb, cb) = self.duad_of_cell[a], self.duad_of_cell[b]
            crossed = frozenset(
                (c for c in range(25) if self.duad_of_cell[c] in ((ra, cb), (rb, ca)))
            )
            mate = self.hexagons[crossed]
            assert self.hexagons_orthogonal(hexagon, mate)
            pairs.add(frozenset((hexagon, mate)))
        assert len(pairs) == 100
        return tuple(sorted(pairs, key=lambda pr: sorted(tuple(sorted(s)) for s in pr)))

    @cached_property
    def decagons(self) -> tuple[frozenset[int], ...]:
        table = mult_table()
        inv = inverse_index()
        seen = set()
        for i, j in self.edges:
            t = table[inv[i]][j]
            orbit = [i]
            w = i
            for _ in range(9):
                w = table[w][t]
                orbit.append(w)
            assert len(set(orbit)) == 10
            seen.add(frozenset(self.pair_of[w] for w in orbit))
        out = tuple(sorted(seen, key=lambda s: tuple(sorted(s))))
        assert len(out) == 72
        for d in out:
            for p, q in combinations(sorted(d), 2):
                assert self.pair_class[p][q] in ("phi", "phi-inv")
        return out

    @cached_property
    def decagon_of_edge(self) -> dict[tuple[int, int], frozenset[int]]:
        """Every edge lies on exactly one decagon."""
        pair_edges: dict[frozenset[int], list[tuple[int, int]]] = {d: [] for d in self.decagons}
        for i, j in self.edges:
            holders = [d for d in self.decagons if self.pair_of[i] in d and self.pair_of[j] in d]
            assert len(holders) == 1
            pair_edges[holders[0]].append((i, j))
        assert all(len(es) == 10 for es in pair_edges.values())
        return {e: d for d, es in pair_edges.items() for e in es}

    def pentagon_of_decagon(self, d: frozenset[int]) -> tuple[int, ...]:
        """The representative pentagon containing the least vertex of the decagon."""
        verts = sorted(v for p in d for v in self.pairs[p])
        v0 = verts[0]
        pent = [v0]
        for p in sorted(d):
            if p == self.pair_of[v0]:
                continue
            w, wneg = self.pairs[p]
            pent.append(w if self.pp[v0][w] in ("phi-inv", "-phi") else wneg)
        assert all(self.pp[a][b] in ("phi-inv", "-phi") for a, b in combinations(pent, 2))
        return tuple(sorted(pent))

    # ---------- prime arrays ----------

    def prime_array(self, p: int) -> "PrimeArray":
        if p not in (2, 3, 5):
            raise ValueError("p must be 2, 3 or 5")
        table = mult_table()
        inv = inverse_index()
        one = self.index[ICOSIAN_ONE.flat]
        neg_one = self.neg[one]
        orders = [self._order(i) for i in range(self.n)]
        from .icosian import mulclose_indices

        if p == 2:
            x = next(i for i in range(self.n) if orders[i] == 4)
            y = next(
                i for i in range(self.n)
                if orders[i] == 4 and len(mulclose_indices((x, i))) == 8
            )
            sylow = mulclose_indices((x, y))
            expected_n = 24
        else:
            x = next(i for i in range(self.n) if orders[i] == p)
            sylow = mulclose_indices((x, neg_one))
            expected_n = {3: 12, 5: 20}[p]
        normalizer = frozenset(
            h for h in range(self.n)
            if frozenset(table[table[h][s]][inv[h]] for s in sylow) == sylow
        )
        assert len(normalizer) == expected_n
        q1 = self.n // len(normalizer)  # q + 1 of the array
        reps: list[int] = []
        cosets = set()
        for h in range(self.n):
            cs = frozenset(table[h][s] for s in normalizer)
            if cs not in cosets:
                cosets.add(cs)
                reps.append(h)
        assert len(reps) == q1
        entries = []
        for gi in reps:
            row = []
            for gj in reps:
                vs = frozenset(table[table[gi][s]][inv[gj]] for s in normalizer)
                row.append(vs)
            entries.append(tuple(row))
        flat = [e for row in entries for e in row]
        assert len(set(flat)) == q1 * q1
        for k in range(q1):
            row_union = set().union(*(entries[k][j] for j in range(q1)))
            col_union = set().union(*(entries[i][k] for i in range(q1)))
            assert len(row_union) == self.n and len(col_union) == self.n
        return PrimeArray(p, q1, tuple(entries), self)

    @cache
    def _order(self, i: int) -> int:
        from .icosian import element_order_index

        return element_order_index(i)

    # ---------- derived polytopes ----------

    @cached_property
    def cell120(self) -> "Cell120":
        return Cell120(self)

    @cached_property
    def rectified(self) -> tuple[IcosianVec, ...]:
        """Vertices phi*(u+v) over the 720 edges (u, v); natural norm 12+16phi."""
        out = set()
        for i, j in self.edges:
            w = (self.vertices[i] + self.vertices[j]).scaled(GoldenInt(0, 1))
            out.add(w)
        verts = tuple(sorted(out))
        assert len(verts) == 720
        return verts

    def rectified_shape_census(self) -> Counter:
        census: Counter = Counter()
        for w in self.rectified:
            key = tuple(sorted(_golden_abs(c).key() for c in w.c))
            census[key] += 1
        return census


def _golden_abs(x: GoldenInt) -> GoldenInt:
    return x if golden_sign(x) >= 0 else -x


@dataclass(frozen=True)
class PrimeArray:
    p: int
    size: int
    entries: tuple[tuple[frozenset[int], ...], ...]  # vertex-index sets
    cell: Cell600

    def entry_pairs(self, i: int, j: int) -> frozenset[int]:
        return frozenset(self.cell.pair_of[v] for v in self.entries[i][j])


class Cell120:
    """The dual polytope: 600 cell centers of the 600-cell, rescaled so the
    base 24-cell is (±2, ±2, 0, 0) with all permutations and signs."""

    def __init__(self, parent: Cell600) -> None:
        self.parent = parent
        scale = PHI_INV * PHI_INV  # phi^-2 = 2 - phi
        centers = {}
        for tet in parent.tetra_cells:
            s = parent.vertices[tet[0]]
            for t in tet[1:]:
                s = s + parent.vertices[t]
            centers[s.scaled(scale)] = tet
        assert len(centers) == 600
        self.vertices = tuple(sorted(centers))
        self.index = {v.flat: i for i, v in enumerate(self.vertices)}
        self.tetra_of = tuple(centers[v] for v in self.vertices)
        self.n = 600

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(self.index[(-v).flat] for v in self.vertices)

    @cached_property
    def cells(self) -> tuple[frozenset[int], ...]:
        """25 disjoint 24-cells g^i * C * g^-j covering the 600 vertices."""
        parent = self.parent
        g = parent.g
        ginv = g.quat_conj()
        gpow = [ICOSIAN_ONE]
        ginvpow = [ICOSIAN_ONE]
        from .icosian import icosian_mul

        for _ in range(4):
            gpow.append(icosian_mul(gpow[-1], g))
            ginvpow.append(icosian_mul(ginvpow[-1], ginv))
        base24 = [parent.vertices[i] for i in sorted(cell24_base_indices())]
        v1 = self.vertices[self.index[_V1_FLAT]]
        c_set = set()
        for a in base24:
            av = icosian_mul(a, v1)
            for b in base24:
                c_set.add(icosian_mul(av, b))
        assert len(c_set) == 24
        cells = []
        for i in range(5):
            for j in range(5):
                cell = frozenset(
                    self.index[icosian_mul(icosian_mul(gpow[i], w), ginvpow[j]).flat]
                    for w in c_set
                )
                assert len(cell) == 24
                cells.append(cell)
        covered = set().union(*cells)
        assert len(covered) == 600  # mutually disjoint
        return tuple(cells)

    @cached_property
    def duad_of_cell(self) -> tuple[Duad, ...]:
        return tuple((1 + k // 5, 6 + k % 5) for k in range(25))

    @cached_property
    def home_cell(self) -> tuple[int, ...]:
        out = [-1] * self.n
        for k, cell in enumerate(self.cells):
            for v in cell:
                out[v] = k
        assert all(k >= 0 for k in out)
        return tuple(out)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency via the source tetra-cells: centers of cells sharing a
        triangular face are the dual polytope's edges (4 per vertex)."""
        tri_cells: dict[tuple[int, int, int], list[int]] = {}
        for idx, tet in enumerate(self.tetra_of):
            for tri in combinations(tet, 3):
                tri_cells.setdefault(tri, []).append(idx)
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for tri, holders in tri_cells.items():
            assert len(holders) == 2
            a, b = holders
            adj[a].add(b)
            adj[b].add(a)
        assert all(len(s) == 4 for s in adj)
        return tuple(tuple(sorted(s)) for s in adj)

    @cached_property
    def labels(self) -> tuple[tuple[Duad, tuple[Duad, ...]], ...]:
        """home duad + the four neighbour duads; the five use distinct rows
        and columns and the induced permutation is odd."""
        out = []
        for v in range(self.n):
            home = self.duad_of_cell[self.home_cell[v]]
            nbrs = tuple(sorted(self.duad_of_cell[self.home_cell[w]] for w in self.neighbors[v]))
            five = sorted((home,) + nbrs)
            rows = [d[0] for d in five]
            cols = sorted(d[1] for d in five)
            assert rows == [1, 2, 3, 4, 5] and cols == [6, 7, 8, 9, 10]
            assert perm_parity([d[1] for d in five]) == 1
            out.append((home, nbrs))
        return tuple(out)

    def pair_labels(self) -> set[tuple[Duad, tuple[Duad, ...]]]:
        labs = set(self.labels)
        assert len(labs) == 300
        return labs

    def row_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(set().union(*(self.cells[5 * i + j] for j in range(5)))))

    def col_vertices(self, j: int) -> tuple[int, ...]:
        return tuple(sorted(set().union(*(self.cells[5 * i + j] for i in range(5)))))


_V1_FLAT = (2, 0, 2, 0, 0, 0, 0, 0)


@cache
def the_600cell() -> Cell600:
    return Cell600()


# ---------- operation-style wrappers ----------

def paper_inner_product(u: IcosianVec, v: IcosianVec) -> GoldenInt:
    return u.paper_dot(v)


def enumerate_skeleton() -> tuple[int, int, int]:
    return the_600cell().skeleton_counts()


def enumerate_16cells() -> tuple[SubPolytope, ...]:
    return tuple(SubPolytope("cell16", c) for c in the_600cell().cells16)


def enumerate_24cells() -> tuple[SubPolytope, ...]:
    return tuple(
        SubPolytope("cell24", tuple(sorted(c))) for c in the_600cell().cells24
    )


def enumerate_8cells() -> tuple[SubPolytope, ...]:
    return tuple(SubPolytope("cell8", tuple(sorted(c))) for c in the_600cell().cells8)


def build_array() -> tuple[tuple[int, ...], ...]:
    return the_600cell().array


def find_all_partitions() -> tuple[SubPolytope, ...]:
    return tuple(
        SubPolytope("partition", tuple(sorted(p)))
        for p in the_600cell().find_all_partitions()
    )


def label_all() -> tuple[tuple[Duad, ...], tuple[tuple[Duad, ...], ...]]:
    c = the_600cell()
    return (c.duad_of_cell, c.labels)


def enumerate_hexagons() -> tuple[SubPolytope, ...]:
    return tuple(
        SubPolytope("hexagon", tuple(sorted(h))) for h in the_600cell().hexagon_list
    )


def enumerate_decagons() -> tuple[SubPolytope, ...]:
    return tuple(
        SubPolytope("decagon", tuple(sorted(d))) for d in the_600cell().decagons
    )


def enumerate_pentagons() -> tuple[SubPolytope, ...]:
    c = the_600cell()
    return tuple(
        SubPolytope("pentagon", c.pentagon_of_decagon(d)) for d in c.decagons
    )


def prime_arrays(p: int) -> PrimeArray:
    return the_600cell().prime_array(p)


def build_120cell() -> Cell120:
    return the_600cell().cell120


def rectified_600cell() -> tuple[IcosianVec, ...]:
    return the_600cell().rectified
