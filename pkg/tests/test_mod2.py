from collections import Counter
from itertools import combinations

from h4geom.mod2 import (
    F4_MUL,
    F4_TRACE,
    OMEGA,
    OMEGA_BAR,
    build_phi,
    build_points,
    build_quotient,
    classify_lines,
    classify_planes,
    isotropic_4spaces,
    pentad_completions,
)


def test_f4_arithmetic_tables():
    for a in range(4):
        assert F4_MUL[a][1] == a and F4_MUL[1][a] == a
        for b in range(4):
            assert F4_MUL[a][b] == F4_MUL[b][a]
    assert F4_MUL[OMEGA][OMEGA] == OMEGA_BAR
    assert F4_MUL[OMEGA][OMEGA_BAR] == 1
    assert F4_TRACE == (0, 0, 1, 1)


def test_quotient_census(geo):
    assert build_quotient() == {"zero": 1, "isotropic": 135, "non_isotropic": 120}
    assert geo.q[0] == 0


def test_b_is_alternating_and_nondegenerate(geo):
    for x in range(256):
        assert geo.bform(x, x) == 0
    for x in range(1, 256):
        assert any(geo.bform(x, y) for y in range(1, 256))


def test_q_well_defined_on_classes(geo):
    # changing the lift by twice a lattice vector must not change Q
    e8 = geo.e8
    for x in (1, 37, 130, 255):
        lift = [0] * 8
        for i in range(8):
            if x >> i & 1:
                lift = [a + b for a, b in zip(lift, e8.basis_int[i])]
        q1 = (e8.bform_int(tuple(lift), tuple(lift)) // 2) & 1
        for shift in (e8.basis_int[0], e8.basis_int[5]):
            moved = tuple(a + 2 * b for a, b in zip(lift, shift))
            q2 = (e8.bform_int(moved, moved) // 2) & 1
            assert q2 == q1 == geo.q[x]
    # polarization: Q(x + y) = Q(x) + Q(y) + B(x, y)
    for x in range(0, 256, 5):
        for y in range(0, 256, 3):
            assert geo.q[x ^ y] == geo.q[x] ^ geo.q[y] ^ geo.bform(x, y)


def test_phi_map_properties(geo):
    phi = build_phi()
    t = phi.table
    assert tuple(t[t[t[x]]] for x in range(256)) == tuple(range(256))
    for x in range(1, 256):
        assert t[x] != x
    # self-adjoint for B (replaces the false "isometry" claim; see ledger)
    for x in range(0, 256, 3):
        for y in range(256):
            assert geo.bform(t[x], y) == geo.bform(x, t[y])


def test_roots_nonisotropic_and_sums_isotropic(geo):
    for i in range(120):
        c, d = geo.class_of_h[i], geo.class_of_phi_h[i]
        assert geo.q[c] == 1 and geo.q[d] == 1
        assert geo.q[c ^ d] == 0
        assert geo.phi.table[c] == d


def test_points_and_tags(geo):
    points, tags = build_points()
    assert len(points) == 85
    kinds = Counter(t[0] for t in tags)
    assert kinds == {"vertex": 60, "cell": 25}
    for k, p in enumerate(points):
        qs = sorted(geo.q[x] for x in p)
        assert qs == ([0, 1, 1] if tags[k][0] == "vertex" else [0, 0, 0])
    assert len({t[1] for t in tags if t[0] == "vertex"}) == 60
    assert len({t[1] for t in tags if t[0] == "cell"}) == 25


def test_points_are_phibar_closed(geo):
    t = geo.phi.table
    for p in geo.points:
        assert {t[x] for x in p} == set(p)


def test_line_census_and_certificates(geo):
    assert classify_lines() == {
        "partition": 10, "pentagon": 72, "cell16": 75, "triangle": 200,
    }
    assert geo.line_certificates() == {
        "partition": 10, "pentagon": 72, "cell16": 75, "triangle": 200,
    }


def test_every_line_has_five_points_and_is_phibar_closed(geo):
    t = geo.phi.table
    for line in geo.lines[::17]:
        assert len(line) == 5
        vecs = {x for p in line for x in geo.points[p]}
        assert {t[x] for x in vecs} == vecs


def test_plane_compositions(geo):
    assert classify_planes() == {"vertex": 60, "cell": 25}


def test_q_omega(geo):
    checks = geo.q_omega_checks()
    assert checks == {
        "values": True, "trace": True, "scaling": True, "biadditive": True,
    }
    from h4geom.mod2 import q_omega

    for x in (1, 100, 255):
        assert q_omega(x) == geo.q_omega(x)
    assert q_omega(geo.class_of_h[0]) == OMEGA_BAR
    assert q_omega(geo.class_of_phi_h[0]) == OMEGA


def test_symmetry_action_commutes_with_phibar(geo, group):
    for g in group.generators:
        assert geo.commutes_with_phi(g)


def test_isotropic_4spaces_count(geo):
    spaces = isotropic_4spaces()
    assert len(spaces) == 270
    for s in spaces[::31]:
        assert len(s) == 15
        assert all(geo.q[x] == 0 for x in s)
        for a, b in combinations(sorted(s)[:5], 2):
            assert geo.bform(a, b) == 0


def test_figure1(geo):
    assert geo.figure1_check()


def test_pentads(geo):
    res = pentad_completions(geo.pentad_rows[0], geo.pentad_rows[1])
    assert res["common_disjoint"] == 28
    assert res["completion_sizes"] == [5, 9]
    assert res["duad_graph"]


def test_orbit_classes(geo):
    cls = geo.orbit_class_analysis()
    assert all(cls.values()), cls


def test_two_classes_intersection_dims(geo):
    spaces = geo.isotropic4
    for u in spaces[::7]:
        for w in spaces[::11]:
            if u == w:
                continue
            assert len(u & w) in (0, 1, 3, 7)
