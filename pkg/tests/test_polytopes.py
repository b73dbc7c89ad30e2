from collections import Counter
from itertools import combinations

from h4geom.golden import GoldenInt
from h4geom.icosian import ICOSIAN_ONE
from h4geom.polytopes import (
    SubPolytope,
    build_120cell,
    enumerate_16cells,
    enumerate_24cells,
    enumerate_8cells,
    enumerate_decagons,
    enumerate_hexagons,
    enumerate_pentagons,
    enumerate_skeleton,
    find_all_partitions,
    label_str,
    perm_parity,
    rectified_600cell,
)

PHI_KEY = (0, 1)


def test_inner_product_values_and_distribution(cell):
    i0 = cell.index[ICOSIAN_ONE.flat]
    assert cell.paper_inner_product(i0, i0) == GoldenInt(2, 0)
    dist = Counter(cell.pp[i0][j] for j in range(cell.n) if j != i0)
    assert dist == {
        "phi": 12, "-phi": 12, "phi-inv": 12, "-phi-inv": 12,
        "1": 20, "-1": 20, "0": 30, "-2": 1,
    }
    a = cell.index[(2, 0, 0, 0, 0, 0, 0, 0)]
    b = cell.index[(0, 0, 2, 0, 0, 0, 0, 0)]
    assert cell.paper_inner_product(a, b) == GoldenInt(0, 0)


def test_every_distinct_product_is_in_the_allowed_set(cell):
    allowed = {"0", "1", "-1", "phi", "-phi", "phi-inv", "-phi-inv"}
    for i in range(cell.n):
        for j in range(i + 1, cell.n):
            v = cell.pp[i][j]
            assert v in allowed or (v == "-2" and cell.neg[i] == j)


def test_skeleton_counts():
    assert enumerate_skeleton() == (720, 1200, 600)


def test_16cells(cell):
    cs = enumerate_16cells()
    assert len(cs) == 75
    orth_pairs = sum(m.bit_count() for m in cell.pair_orth) // 2
    assert orth_pairs == 450
    membership = Counter()
    for c in cs:
        for p, q in combinations(c.members, 2):
            membership[(p, q)] += 1
    assert len(membership) == 450 and set(membership.values()) == {1}


def test_24cells_and_8cells(cell):
    assert len(enumerate_24cells()) == 25
    assert len(enumerate_8cells()) == 75
    # each 16-cell and 8-cell lies in exactly one 24-cell
    for small in cell.cells16:
        assert sum(1 for big in cell.cells24 if set(small) <= big) == 1
    for small in cell.cells8:
        assert sum(1 for big in cell.cells24 if small <= big) == 1


def test_axis_16cell_extends_by_half_integer_vertices(cell):
    axis_pids = sorted(
        cell.pair_of[i]
        for i, v in enumerate(cell.vertices)
        if sorted((abs(c.a), abs(c.b)) for c in v.c) == [(0, 0), (0, 0), (0, 0), (2, 0)]
    )
    tetrad = tuple(sorted(set(axis_pids)))
    assert tetrad in cell.cells16
    big = cell.cells24[cell.cell16_ambient[tetrad]]
    added = big - set(tetrad)
    for p in added:
        v = cell.vertices[cell.pairs[p][0]]
        assert all((abs(c.a), abs(c.b)) == (1, 0) for c in v.c)


def test_array_rows_and_columns_partition(cell):
    from h4geom.polytopes import build_array

    assert build_array() == cell.array
    duads = {cell.duad_of_cell[cell.array[i][j]] for i in range(5) for j in range(5)}
    assert duads == {(r, c) for r in range(1, 6) for c in range(6, 11)}
    one_pid = cell.pair_of[cell.index[ICOSIAN_ONE.flat]]
    for i in range(5):
        assert one_pid in cell.cells24[cell.array[i][i]]


def test_exactly_ten_partitions():
    parts = find_all_partitions()
    assert len(parts) == 10
    assert all(isinstance(p, SubPolytope) and p.kind == "partition" for p in parts)


def test_disjointness_graph_is_rook_complement(cell):
    for a in range(25):
        assert cell.disjointness_mask[a].bit_count() == 8
        ra, ca = cell.duad_of_cell[a]
        for b in range(25):
            if a == b:
                continue
            rb, cb = cell.duad_of_cell[b]
            disjoint = bool(cell.disjointness_mask[a] >> b & 1)
            assert disjoint == (ra == rb or ca == cb)


def test_labels(cell):
    one_pid = cell.pair_of[cell.index[ICOSIAN_ONE.flat]]
    assert label_str(cell.labels[one_pid]) == "(16)(27)(38)(49)(5X)"
    assert len(set(cell.labels)) == 60
    for lab in cell.labels:
        assert perm_parity([d[1] for d in lab]) == 0
    for la, lb in combinations(cell.labels, 2):
        assert len(set(la) & set(lb)) <= 2
    # every pair lies in exactly five 24-cells
    assert all(len(cell.cell_of_pair[p]) == 5 for p in range(60))


def test_shared_duads_determine_inner_product_class(cell):
    for a, b in combinations(range(60), 2):
        shared = len(set(cell.labels[a]) & set(cell.labels[b]))
        cls = cell.pair_class[a][b]
        if shared == 1:
            assert cls == "0"
        elif shared == 2:
            assert cls == "1"
        else:
            assert shared == 0 and cls in ("phi", "phi-inv")


def test_hexagons(cell):
    hexes = enumerate_hexagons()
    assert len(hexes) == 200
    cells_16_27 = frozenset(
        k for k in range(25) if cell.duad_of_cell[k] in ((1, 6), (2, 7))
    )
    example = cell.hexagons[cells_16_27]
    labels = sorted(label_str(cell.labels[p]) for p in example)
    assert labels == [
        "(16)(27)(38)(49)(5X)",
        "(16)(27)(39)(4X)(58)",
        "(16)(27)(3X)(48)(59)",
    ]
    assert len(cell.hexagon_orthogonal_pairs) == 100


def test_decagons_and_pentagons(cell):
    decs = enumerate_decagons()
    assert len(decs) == 72
    assert len(cell.decagon_of_edge) == 720
    pents = enumerate_pentagons()
    assert len(pents) == 72
    all_duads = {(r, c) for r in range(1, 6) for c in range(6, 11)}
    for pent in pents:
        duads = {
            d for v in pent.members for d in cell.labels[cell.pair_of[v]]
        }
        assert duads == all_duads


def test_prime_array_p2_reproduces_24cell_array(cell):
    pa = cell.prime_array(2)
    entries = {frozenset(pa.entry_pairs(i, j)) for i in range(5) for j in range(5)}
    assert entries == {frozenset(c) for c in cell.cells24}
    rows = {
        frozenset(p for j in range(5) for p in pa.entry_pairs(i, j)) for i in range(5)
    }
    cols = {
        frozenset(p for i in range(5) for p in pa.entry_pairs(i, j)) for j in range(5)
    }
    partition_pidsets = {
        frozenset(p for c in part for p in cell.cells24[c]) for part in cell.partitions
    }
    assert rows | cols <= partition_pidsets


def test_prime_array_p3_is_hexagon_pairs(cell):
    pa = cell.prime_array(3)
    assert pa.size == 10
    seen = set()
    for i in range(10):
        for j in range(10):
            pids = pa.entry_pairs(i, j)
            hexes = [h for h in cell.hexagon_list if h <= pids]
            assert len(hexes) == 2
            assert cell.hexagons_orthogonal(*hexes)
            seen.add(frozenset(hexes))
    assert len(seen) == 100
    assert seen == set(cell.hexagon_orthogonal_pairs)


def test_prime_array_p5_is_decagon_pairs(cell):
    pa = cell.prime_array(5)
    assert pa.size == 6
    seen = set()
    for i in range(6):
        for j in range(6):
            pids = pa.entry_pairs(i, j)
            decs = [d for d in cell.decagons if d <= pids]
            assert len(decs) == 2
            assert all(
                cell.pair_class[a][b] == "0" for a in decs[0] for b in decs[1]
            )
            seen.add(frozenset(decs))
    assert len(seen) == 36


def test_120cell_structure(cell):
    d = build_120cell()
    assert d.n == 600
    assert len(d.cells) == 25
    assert sum(len(c) for c in d.cells) == 600
    base = {
        tuple(sorted((abs(c.a), abs(c.b)) for c in d.vertices[k].c))
        for k in d.cells[0]
    }
    assert base == {((0, 0), (0, 0), (2, 0), (2, 0))}
    labs = d.pair_labels()
    assert len(labs) == 300
    assert ((3, 8), ((1, 6), (2, 7), (4, 10), (5, 9))) in labs


def test_120cell_rows_and_columns_are_600cells(cell):
    d = cell.cell120
    spectrum_h = Counter()
    for i, j in combinations(range(cell.n), 2):
        spectrum_h[cell.paper_inner_product(i, j).key()] += 1
    col = d.col_vertices(0)
    assert len(col) == 120
    spec = Counter()
    for i, j in combinations(col, 2):
        spec[d.vertices[i].paper_dot(d.vertices[j]).halved().key()] += 1
    assert spec == spectrum_h


def test_rectified_600cell(cell):
    r = rectified_600cell()
    assert len(r) == 720
    for w in r[:50]:
        assert w.dot(w) == GoldenInt(12, 16)  # 20 + 8*sqrt(5)
    census = cell.rectified_shape_census()
    expected_shapes = {
        ((0, 0), (0, 0), (0, 2), (2, 2)),  # (0, 0, 2phi, 2phi^2)
        ((1, 0), (1, 0), (1, 2), (1, 2)),  # (1, 1, phi^3, phi^3)
        ((0, 0), (0, 1), (1, 0), (1, 3)),  # (0, 1, phi, 1+3phi)
        ((0, 0), (1, 1), (1, 2), (2, 1)),  # (0, phi^2, phi^3, 2+phi)
        ((0, 1), (1, 0), (1, 1), (2, 2)),  # (1, phi, 2phi^2, phi^2)
        ((0, 1), (0, 2), (1, 1), (1, 2)),  # (phi, phi^2, 2phi, phi^3)
    }
    assert set(census) == expected_shapes
    assert sum(census.values()) == 720
