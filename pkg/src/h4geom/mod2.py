"""The 8-space E8/2E8 over F2 and its induced 4-space over F4.

Classes of E8/2E8 are 8-bit masks of coordinates over the certified root
basis.  Q(x) is half the E8 norm of a lift mod 2, B its polarization.  The
multiplication-by-phi endomorphism descends to an order-3 automorphism that
makes the 255 nonzero classes into 85 projective points, labeled by the 60
vertex pairs and the 25 24-cells; lines, planes, the F4-valued form, and the
270 totally singular 4-spaces are classified against the polytope oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations

from .embed import E8Lattice, certify_e8
from .symmetry import SymOp

# F4 as {0, 1, w, w+1} encoded 0..3; addition is xor.
F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
F4_TRACE = (0, 0, 1, 1)
OMEGA, OMEGA_BAR = 2, 3


def _parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class PhiMap:
    rows: tuple[tuple[int, ...], ...]  # integer matrix on the lattice basis
    mod2_rows: tuple[int, ...]  # row bitmasks
    table: tuple[int, ...]  # induced map on the 256 classes


class F4Geometry:
    def __init__(self, e8: E8Lattice):
        self.e8 = e8
        self.cell = e8.cell

        gram = e8.gram
        self._g2_rows = tuple(
            sum((gram[i][j] & 1) << j for j in range(8)) for i in range(8)
        )
        self.rowvec = tuple(self._fold_rows(self._g2_rows, x) for x in range(256))
        self.q = tuple(self._q_of_class(x) for x in range(256))

        self.phi = self._build_phi()
        self.class_of_h = tuple(self._class_of(u) for u in e8.h_img)
        self.class_of_phi_h = tuple(self._class_of(u) for u in e8.phi_img)

    # ---------- forms ----------

    @staticmethod
    def _fold_rows(rows: tuple[int, ...], x: int) -> int:
        acc = 0
        for i in range(8):
            if x >> i & 1:
                acc ^= rows[i]
        return acc

    def _class_of(self, amb) -> int:
        coords = self.e8.coords_of(tuple(amb))
        return sum((coords[i] & 1) << i for i in range(8))

    def _q_of_class(self, x: int) -> int:
        bits = [i for i in range(8) if x >> i & 1]
        s = 0
        for i in bits:
            for j in bits:
                s += self.e8.gram[i][j]
        return (s // 2) & 1

    def bform(self, x: int, y: int) -> int:
        return _parity(self.rowvec[x] & y)

    def _build_phi(self) -> PhiMap:
        e8 = self.e8
        vid_of_root = {u: i for i, u in enumerate(e8.h_img)}
        rows = []
        for b in e8.basis_int:
            vid = vid_of_root[b]
            rows.append(e8.coords_of(e8.phi_img[vid]))
        rows = tuple(rows)
        # defining property on all 120 roots (well-definedness of the extension)
        for i in range(120):
            x = e8.coords_of(e8.h_img[i])
            img = tuple(
                sum(x[k] * rows[k][j] for k in range(8)) for j in range(8)
            )
            assert img == e8.coords_of(e8.phi_img[i])
        sq = tuple(
            tuple(sum(rows[i][k] * rows[k][j] for k in range(8)) for j in range(8))
            for i in range(8)
        )
        expect = tuple(
            tuple(rows[i][j] + (1 if i == j else 0) for j in range(8)) for i in range(8)
        )
        assert sq == expect, "phi matrix does not satisfy x**2 = x + 1"
        mod2_rows = tuple(sum((rows[i][j] & 1) << j for j in range(8)) for i in range(8))
        table = tuple(self._fold_rows(mod2_rows, x) for x in range(256))
        cube = tuple(table[table[table[x]]] for x in range(256))
        assert cube == tuple(range(256)), "induced map is not of order 3"
        return PhiMap(rows, mod2_rows, table)

    # ---------- census ----------

    def census(self) -> dict[str, int]:
        iso = sum(1 for x in range(1, 256) if self.q[x] == 0)
        return {"zero": 1, "isotropic": iso, "non_isotropic": 255 - iso}

    # ---------- points ----------

    @cached_property
    def points(self) -> tuple[frozenset[int], ...]:
        t = self.phi.table
        seen = set()
        for x in range(1, 256):
            seen.add(frozenset((x, t[x], x ^ t[x])))
        pts = tuple(sorted(seen, key=lambda s: tuple(sorted(s))))
        assert len(pts) == 85
        return pts

    @cached_property
    def point_of(self) -> tuple[int, ...]:
        out = [-1] * 256
        for k, p in enumerate(self.points):
            for x in p:
                out[x] = k
        return tuple(out)

    @cached_property
    def tags(self) -> tuple[tuple[str, int], ...]:
        """85 tags: ('vertex', pair_id) or ('cell', cell24_index)."""
        cell = self.cell
        tags: dict[int, tuple[str, int]] = {}
        for pid, (i, _) in enumerate(cell.pairs):
            c = self.class_of_h[i]
            assert self.class_of_h[cell.neg[i]] == c
            pt = self.point_of[c]
            assert pt not in tags
            assert self.class_of_phi_h[i] in self.points[pt]
            tags[pt] = ("vertex", pid)
        assert len(tags) == 60
        for k, p in enumerate(self.points):
            if k not in tags:
                assert all(self.q[x] == 0 for x in p)
        # a line with four vertex points carries a 16-cell; its fifth point
        # is tagged by the ambient 24-cell
        sixteens = {c: cell.cell16_ambient[c] for c in cell.cells16}
        proposals: dict[int, set[int]] = {}
        for line in self.lines:
            vs = sorted(tags[p][1] for p in line if p in tags)
            if len(vs) != 4:
                continue
            rest = [p for p in line if p not in tags]
            key = tuple(vs)
            if key in sixteens and len(rest) == 1:
                proposals.setdefault(rest[0], set()).add(sixteens[key])
        assert len(proposals) == 25
        for pt, cells in proposals.items():
            assert len(cells) == 1, "ambiguous 24-cell tag"
            tags[pt] = ("cell", cells.pop())
        assert len(tags) == 85
        assert len({t for t in tags.values()}) == 85
        return tuple(tags[k] for k in range(85))

    @cached_property
    def point_of_pair(self) -> dict[int, int]:
        return {tag[1]: k for k, tag in enumerate(self.tags) if tag[0] == "vertex"}

    @cached_property
    def point_of_cell(self) -> dict[int, int]:
        return {tag[1]: k for k, tag in enumerate(self.tags) if tag[0] == "cell"}

    # ---------- lines and planes ----------

    @cached_property
    def lines(self) -> tuple[frozenset[int], ...]:
        """All 357 projective lines, as frozensets of 5 point indices."""
        seen = set()
        for a, b in combinations(range(85), 2):
            pa = self.points[a] | {0}
            pb = self.points[b] | {0}
            span = {x ^ y for x in pa for y in pb}
            assert len(span) == 16
            pts = frozenset(self.point_of[x] for x in span if x)
            assert len(pts) == 5
            seen.add(pts)
        out = tuple(sorted(seen, key=lambda s: tuple(sorted(s))))
        assert len(out) == 357
        return out

    def line_type(self, line: frozenset[int]) -> str:
        nv = sum(1 for p in line if self.tags[p][0] == "vertex")
        return {5: "pentagon", 4: "cell16", 3: "triangle", 0: "partition"}[nv]

    @cached_property
    def line_census(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for line in self.lines:
            t = self.line_type(line)
            out[t] = out.get(t, 0) + 1
        return out

    def line_certificates(self) -> dict[str, int]:
        """Count lines whose point tags match the H4-side incidence oracle."""
        cell = self.cell
        decagon_sets = set(cell.decagons)
        partition_sets = set(cell.partitions)
        ok: dict[str, int] = {"partition": 0, "pentagon": 0, "cell16": 0, "triangle": 0}
        for line in self.lines:
            vs = sorted(self.tags[p][1] for p in line if self.tags[p][0] == "vertex")
            cs = sorted(self.tags[p][1] for p in line if self.tags[p][0] == "cell")
            kind = self.line_type(line)
            if kind == "partition":
                if frozenset(cs) in partition_sets:
                    ok[kind] += 1
            elif kind == "pentagon":
                if frozenset(vs) in decagon_sets:
                    ok[kind] += 1
            elif kind == "cell16":
                if tuple(vs) in cell.cell16_ambient and cs == [cell.cell16_ambient[tuple(vs)]]:
                    ok[kind] += 1
            else:  # triangle: hexagon pairs sharing two duads plus crossed cells
                shared = set(cell.labels[vs[0]]) & set(cell.labels[vs[1]]) & set(cell.labels[vs[2]])
                if len(shared) != 2:
                    continue
                (ra, ca), (rb, cb) = sorted(shared)
                crossed = {(ra, cb), (rb, ca)}
                if {cell.duad_of_cell[c] for c in cs} == crossed:
                    # the three pairs must be the full hexagon of the two cells
                    hex_cells = frozenset(
                        k for k in range(25) if cell.duad_of_cell[k] in shared
                    )
                    if cell.hexagons[hex_cells] == frozenset(vs):
                        ok[kind] += 1
        # all lines are totally singular exactly for the partition type
        for line in self.lines:
            singular = all(self.q[x] == 0 for p in line for x in self.points[p])
            assert singular == (self.line_type(line) == "partition")
        return ok

    @cached_property
    def planes(self) -> tuple[frozenset[int], ...]:
        """85 planes: B-orthogonal complements of the 85 points."""
        out = []
        for p in self.points:
            a, b = sorted(p)[:2]
            perp = [y for y in range(1, 256) if self.bform(y, a) == 0 and self.bform(y, b) == 0]
            assert len(perp) == 63
            pts = frozenset(self.point_of[y] for y in perp)
            assert len(pts) == 21
            out.append(pts)
        assert len(set(out)) == 85
        return tuple(out)

    def plane_compositions(self) -> dict[str, int]:
        """Verify each plane's 21 points against the incidence oracle."""
        cell = self.cell
        counts = {"vertex": 0, "cell": 0}
        for k, plane in enumerate(self.planes):
            kind, ref = self.tags[k]
            if kind == "vertex":
                orth = {
                    q for q in range(60)
                    if q != ref and cell.pair_class[ref][q] == "0"
                }
                expect = {self.point_of_pair[ref]}
                expect |= {self.point_of_pair[q] for q in orth}
                expect |= {self.point_of_cell[c] for c in cell.cell_of_pair[ref]}
            else:
                disj = [
                    c for c in range(25)
                    if c != ref and not (cell.cells24[c] & cell.cells24[ref])
                ]
                expect = {self.point_of_cell[ref]}
                expect |= {self.point_of_cell[c] for c in disj}
                expect |= {self.point_of_pair[q] for q in cell.cells24[ref]}
            assert plane == frozenset(expect)
            counts[kind] += 1
        return counts

    # ---------- the F4-valued form ----------

    def q_omega(self, x: int) -> int:
        t = self.phi.table
        val = self.q[x]
        val ^= F4_MUL[OMEGA][self.q[t[x]]]
        val ^= F4_MUL[OMEGA_BAR][self.q[x ^ t[x]]]
        return val

    def q_omega_checks(self) -> dict[str, bool]:
        t = self.phi.table
        h_classes = set(self.class_of_h)
        phi_classes = set(self.class_of_phi_h)
        vertex_iso = {c ^ t[c] for c in h_classes}
        cell_vectors = {
            x for k, p in enumerate(self.points) if self.tags[k][0] == "cell" for x in p
        }
        ok_values = (
            all(self.q_omega(x) == 0 for x in cell_vectors)
            and all(self.q_omega(x) == 1 for x in vertex_iso)
            and all(self.q_omega(x) == OMEGA_BAR for x in h_classes)
            and all(self.q_omega(x) == OMEGA for x in phi_classes)
        )
        ok_trace = all(F4_TRACE[self.q_omega(x)] == self.q[x] for x in range(1, 256))
        ok_scaling = all(
            self.q_omega(t[x]) == F4_MUL[OMEGA_BAR][self.q_omega(x)] for x in range(1, 256)
        )
        qw = [self.q_omega(x) for x in range(256)]
        b_omega = [[qw[x ^ y] ^ qw[x] ^ qw[y] for y in range(256)] for x in range(256)]
        ok_biadd = True
        for y in range(256):
            base = [b_omega[1 << i][y] for i in range(8)]
            for x in range(256):
                acc = 0
                for i in range(8):
                    if x >> i & 1:
                        acc ^= base[i]
                if acc != b_omega[x][y]:
                    ok_biadd = False
                    break
            if not ok_biadd:
                break
        return {
            "values": ok_values,
            "trace": ok_trace,
            "scaling": ok_scaling,
            "biadditive": ok_biadd,
        }

    # ---------- symmetry action ----------

    def action_mod2(self, op: SymOp) -> tuple[int, ...]:
        """Table of the induced map on the 256 classes; checks exactness."""
        e8 = self.e8
        vid_of_root = {u: i for i, u in enumerate(e8.h_img)}
        rows = []
        for b in e8.basis_int:
            vid = vid_of_root[b]
            rows.append(e8.coords_of(e8.h_img[op.perm[vid]]))
        for i in range(0, 120, 7):
            x = e8.coords_of(e8.h_img[i])
            img = tuple(sum(x[k] * rows[k][j] for k in range(8)) for j in range(8))
            assert img == e8.coords_of(e8.h_img[op.perm[i]])
        gram = e8.gram
        for i in range(8):
            for j in range(8):
                s = sum(
                    rows[i][a] * gram[a][b] * rows[j][b]
                    for a in range(8)
                    for b in range(8)
                )
                assert s == gram[i][j], "action does not preserve the Gram matrix"
        m2 = tuple(sum((rows[i][j] & 1) << j for j in range(8)) for i in range(8))
        return tuple(self._fold_rows(m2, x) for x in range(256))

    def commutes_with_phi(self, op: SymOp) -> bool:
        a = self.action_mod2(op)
        t = self.phi.table
        return all(a[t[x]] == t[a[x]] for x in range(256))

    # ---------- totally singular 4-spaces ----------

    @cached_property
    def isotropic4(self) -> tuple[frozenset[int], ...]:
        """All totally singular 4-spaces, as frozensets of 15 nonzero vectors."""
        iso = [x for x in range(1, 256) if self.q[x] == 0]
        level: set[frozenset[int]] = {frozenset((x,)) for x in iso}
        for _ in range(3):
            nxt: set[frozenset[int]] = set()
            for space in level:
                for x in iso:
                    if x in space:
                        continue
                    if any(self.bform(x, s) for s in space):
                        continue
                    nxt.add(space | {x} | {x ^ s for s in space})
            level = nxt
        out = tuple(sorted(level, key=lambda s: tuple(sorted(s))))
        assert len(out) == 270
        return out

    @cached_property
    def pentad_rows(self) -> tuple[frozenset[int], ...]:
        return tuple(self._partition_space(k) for k in range(5))

    @cached_property
    def pentad_cols(self) -> tuple[frozenset[int], ...]:
        return tuple(self._partition_space(k) for k in range(5, 10))

    def _partition_space(self, part_idx: int) -> frozenset[int]:
        vectors: set[int] = set()
        for c in self.cell.partitions[part_idx]:
            pt = self.point_of_cell[c]
            vectors |= self.points[pt]
        space = frozenset(vectors)
        assert len(space) == 15
        span = {0}
        for v in space:
            span |= {v ^ s for s in span}
        assert span - {0} == space, "partition vectors do not close into a 4-space"
        assert space in set(self.isotropic4)
        return space

    def figure1_check(self) -> bool:
        for i in range(5):
            for j in range(5):
                cell_idx = self.cell.array[i][j]
                expected = self.points[self.point_of_cell[cell_idx]]
                if self.pentad_rows[i] & self.pentad_cols[j] != expected:
                    return False
        rows_all = set().union(*self.pentad_rows)
        cols_all = set().union(*self.pentad_cols)
        return rows_all == cols_all and len(rows_all) == 75

    # ---------- disjoint-pair completions ----------

    def pentad_completions(self, v1: frozenset[int], v2: frozenset[int]) -> dict:
        assert not (v1 & v2)
        spaces = self.isotropic4
        common = [u for u in spaces if u not in (v1, v2) and not (u & v1) and not (u & v2)]
        adj = {
            u: {w for w in common if w != u and not (u & w)} for u in common
        }
        cliques: list[set] = []

        def bron(r: set, p: set, x: set) -> None:
            if not p and not x:
                cliques.append(r)
                return
            pivot = max(p | x, key=lambda u: len(adj[u] & p)) if p | x else None
            for u in list(p - (adj[pivot] if pivot else set())):
                bron(r | {u}, p & adj[u], x & adj[u])
                p = p - {u}
                x = x | {u}

        bron(set(), set(common), set())
        sizes = sorted({len(c) + 2 for c in cliques})
        stars = [c for c in cliques if len(c) == 7]
        duad_graph_ok = False
        if len(stars) == 8:
            star_of = {u: frozenset(k for k, s in enumerate(stars) if u in s) for u in common}
            duad_graph_ok = (
                all(len(sp) == 2 for sp in star_of.values())
                and len(set(star_of.values())) == 28
                and all(
                    (len(star_of[u] & star_of[w]) > 0) == (w in adj[u])
                    for u, w in combinations(common, 2)
                )
                and all(len(set(s1) & set(s2)) == 1 for s1, s2 in combinations(stars, 2))
            )
        return {
            "common_disjoint": len(common),
            "completion_sizes": sizes,
            "duad_graph": duad_graph_ok,
            "stars": stars,
        }

    def orbit_class_analysis(self) -> dict:
        """Local (intersection-parity) version of the two 135-orbit structure."""
        spaces = self.isotropic4
        v1 = self.pentad_rows[0]
        class_a = [u for u in spaces if len(u & v1) in (0, 3, 15)]
        class_b = [u for u in spaces if len(u & v1) in (1, 7)]
        ok_sizes = len(class_a) == 135 and len(class_b) == 135
        ok_within = all(
            len(u & w) in (0, 3) for u, w in combinations(class_a, 2)
        ) and all(len(u & w) in (0, 3) for u, w in combinations(class_b, 2))
        ok_across = all(len(u & w) in (1, 7) for u in class_a for w in class_b)

        res = self.pentad_completions(self.pentad_rows[0], self.pentad_rows[1])
        star = next(iter(res["stars"]))
        nine = [self.pentad_rows[0], self.pentad_rows[1]] + sorted(
            star, key=lambda s: tuple(sorted(s))
        )
        covered = set().union(*nine)
        ok_nine = len(covered) == 135 and all(not (a & b) for a, b in combinations(nine, 2))
        others = [u for u in class_a if u not in nine] if ok_sizes else []
        ok_allocation = all(
            sorted(len(u & v) for v in nine) == [0, 0, 0, 0, 3, 3, 3, 3, 3] for u in others
        )
        # within the same 135-class: spaces of the other class meet every
        # 4-space in an odd-dimensional (hence nonzero) subspace
        tetrad = nine[:4]
        meet_all = [
            u for u in class_a if u not in tetrad and all(u & v for v in tetrad)
        ]
        ok_tetrad = len(meet_all) == 5 and all(
            not (a & b) for a, b in combinations(meet_all, 2)
        )
        return {
            "classes": ok_sizes,
            "within_parity": ok_within,
            "across_parity": ok_across,
            "nine_disjoint_cover": ok_nine,
            "allocation_5_of_9": ok_allocation,
            "tetrad_completion": ok_tetrad,
        }


@cache
def f4_geometry() -> F4Geometry:
    return F4Geometry(certify_e8(-1))


def build_quotient() -> dict[str, int]:
    return f4_geometry().census()


def build_phi() -> PhiMap:
    return f4_geometry().phi


def build_points():
    geo = f4_geometry()
    return geo.points, geo.tags


def classify_lines() -> dict[str, int]:
    return f4_geometry().line_census


def classify_planes() -> dict[str, int]:
    return f4_geometry().plane_compositions()


def q_omega(x: int) -> int:
    return f4_geometry().q_omega(x)


def isotropic_4spaces():
    return f4_geometry().isotropic4


def pentad_completions(v1: frozenset[int], v2: frozenset[int]) -> dict:
    return f4_geometry().pentad_completions(v1, v2)
