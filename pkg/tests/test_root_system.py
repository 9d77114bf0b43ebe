"""Cartan data, root enumeration, and basic invariants."""

import itertools

import pytest

from weylkit.root_system import (
    CartanError,
    WeylOrderGuardError,
    build,
    cartan_matrix,
    parse_label,
    positive_root_count,
    weyl_order,
)

# family -> (label, |W|, number of positive roots)
KNOWN_COUNTS = [
    ("A1", 2, 1),
    ("A2", 6, 3),
    ("A3", 24, 6),
    ("A4", 120, 10),
    ("B2", 8, 4),
    ("B3", 48, 9),
    ("C3", 48, 9),
    ("C4", 384, 16),
    ("D4", 192, 12),
    ("G2", 12, 6),
    ("F4", 1152, 24),
    ("E6", 51840, 36),
]


@pytest.mark.parametrize("label,order,npos", KNOWN_COUNTS)
def test_closed_form_counts(label, order, npos):
    lab = parse_label(label)
    assert weyl_order(lab) == order
    assert positive_root_count(lab) == npos


@pytest.mark.parametrize("label", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "XY", ""])
def test_bad_labels_rejected(label):
    with pytest.raises(CartanError):
        parse_label(label)


def test_guard_triggers():
    with pytest.raises(WeylOrderGuardError):
        build("A9", max_weyl_order=1000)
    # disabled guard allows any supported label
    build("A9", max_weyl_order=None)


@pytest.mark.parametrize("label", [l for l, _, _ in KNOWN_COUNTS if l != "E6"])
def test_cartan_matrix_shape(label):
    lab = parse_label(label)
    c = cartan_matrix(lab)
    n = lab.rank
    assert len(c) == n and all(len(row) == n for row in c)
    for i in range(n):
        assert c[i][i] == 2
        for j in range(n):
            if i != j:
                assert c[i][j] <= 0
                assert (c[i][j] == 0) == (c[j][i] == 0)


def test_g2_cartan_convention():
    # first node short: pairing of the long root against the short coroot is -3
    assert [list(r) for r in cartan_matrix(parse_label("G2"))] == [[2, -3], [-1, 2]]


def test_f4_cartan_convention():
    assert [list(r) for r in cartan_matrix(parse_label("F4"))] == [
        [2, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -2, 2, -1],
        [0, 0, -1, 2],
    ]


def test_bc_duality():
    # B3 and C3 Cartan matrices are transposes of one another
    b = cartan_matrix(parse_label("B3"))
    c = cartan_matrix(parse_label("C3"))
    n = 3
    assert all(b[i][j] == c[j][i] for i in range(n) for j in range(n))


@pytest.mark.parametrize("label", ["A2", "B2", "B3", "C3", "G2", "D4", "F4"])
def test_positive_roots_enumeration(label):
    rs = build(label)
    roots = rs.positive_roots
    assert len(roots) == positive_root_count(rs.label)
    seen = set()
    for r in roots:
        assert all(c >= 0 for c in r.simple_coords)
        assert sum(r.simple_coords) == r.height >= 1
        assert r.simple_coords not in seen
        seen.add(r.simple_coords)
        # weight coords match the simple-coordinate expansion
        expanded = rs.to_simple_coords(r.weight_coords)
        assert expanded == r.simple_coords
    # simple roots come first, one per node
    for i in range(rs.rank):
        simple = [r for r in roots if r.height == 1 and r.simple_coords[i] == 1]
        assert len(simple) == 1


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "B3", "C3", "D4"])
def test_rho_is_all_ones_and_half_sum(label):
    rs = build(label)
    assert rs.rho == (1,) * rs.rank
    total = [0] * rs.rank
    for r in rs.positive_roots:
        total = [a + b for a, b in zip(total, r.weight_coords)]
    assert tuple(x // 2 for x in total) == rs.rho
    assert all(x % 2 == 0 for x in total)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3", "F4"])
def test_coroot_coords_integral_pairing(label):
    rs = build(label)
    for r in rs.positive_roots:
        # <alpha, alpha^vee> = 2 for every root
        assert rs.pair(r.weight_coords, r) == 2
        # <rho, alpha^vee> equals the coroot height (sum of coroot coords)
        assert rs.pair(rs.rho, r) == sum(r.coroot_coords)


def test_symmetrized_inner_product_symmetric():
    for label in ["B2", "G2", "C3", "F4"]:
        rs = build(label)
        vecs = list(itertools.product((-1, 0, 1, 2), repeat=rs.rank))[:30]
        for a in vecs[:8]:
            for b in vecs[:8]:
                assert rs.ip_scaled(a, b) == rs.ip_scaled(b, a)


def test_dominance():
    rs = build("B2")
    assert rs.is_dominant((0, 0)) and rs.is_dominant((2, 1))
    assert not rs.is_dominant((-1, 3))
