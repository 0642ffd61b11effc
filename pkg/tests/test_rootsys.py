import pytest

from quatrep.rootsys import (
    DominantWeight,
    LieType,
    LieTypeError,
    algebra_real_dim,
    bourbaki_to_printed,
    build_root_system,
    diagram_automorphisms,
    opposition_involution,
    printed_to_bourbaki,
    root_system,
    translate_printed_weight,
    weyl_dim,
)

# (type, number of positive roots, real dimension of the algebra)
ROOT_COUNTS = [
    ("A1", 1, 3), ("A3", 6, 15), ("A7", 28, 63), ("B2", 4, 10), ("B4", 16, 36), ("C3", 9, 21),
    ("D4", 12, 28), ("D5", 20, 45), ("E6", 36, 78), ("E7", 63, 133), ("E8", 120, 248),
    ("F4", 24, 52), ("G2", 6, 14),
]


@pytest.mark.parametrize("name,positive,real_dim", ROOT_COUNTS)
def test_root_counts_and_algebra_dims(name, positive, real_dim):
    rs = root_system(name)
    assert len(rs.positive_roots) == positive
    assert algebra_real_dim(name) == real_dim


# Dimensions of fundamental modules, Bourbaki numbering, from standard tables
FUNDAMENTAL_DIMS = {
    "A3": (4, 6, 4),
    "B3": (7, 21, 8),
    "C3": (6, 14, 14),
    "D4": (8, 28, 8, 8),
    "D5": (10, 45, 120, 16, 16),
    "G2": (7, 14),
    "F4": (52, 1274, 273, 26),
    "E6": (27, 78, 351, 2925, 351, 27),
    "E7": (133, 912, 8645, 365750, 27664, 1539, 56),
    "E8": (3875, 147250, 6696000, 6899079264, 146325270, 2450240, 30380, 248),
}


@pytest.mark.parametrize("name", sorted(FUNDAMENTAL_DIMS))
def test_fundamental_dimensions(name):
    rs = root_system(name)
    dims = tuple(weyl_dim(rs, DominantWeight.fundamental(rs.rank, i)) for i in range(1, rs.rank + 1))
    assert dims == FUNDAMENTAL_DIMS[name]


def test_small_dimensions():
    assert weyl_dim("A1", (3,)) == 4
    assert weyl_dim("A2", (1, 1)) == 8
    assert weyl_dim("A3", (0, 1, 0)) == 6
    assert weyl_dim("A3", (0, 0, 0)) == 1
    assert weyl_dim("B2", (0, 1)) == 4
    assert weyl_dim("G2", (0, 1)) == 14


def test_cartan_conventions():
    g2 = build_root_system(LieType("G", 2))
    assert g2.cartan_matrix == ((2, -3), (-1, 2))
    b2 = build_root_system(LieType("B", 2))
    assert b2.cartan_matrix == ((2, -1), (-2, 2))
    # short simple roots carry the smaller symmetrizer entry
    assert b2.symmetrizer == (2, 1)
    c2 = build_root_system(LieType("C", 2))
    assert c2.symmetrizer == (1, 2)


def test_highest_root_heights():
    # the height of the highest root is the Coxeter number minus one
    for name, h in [("A4", 5), ("B3", 6), ("C4", 8), ("D5", 8), ("E6", 12), ("E7", 18), ("E8", 30),
                    ("F4", 12), ("G2", 6)]:
        assert max(sum(r) for r in root_system(name).positive_roots) == h - 1


def test_lie_type_parsing_and_validation():
    assert LieType.parse("e_7") == LieType("E", 7)
    assert str(LieType.parse("A3")) == "A3"
    for bad in ("E5", "F3", "G3", "D2", "X1", "A0"):
        with pytest.raises(LieTypeError):
            LieType.parse(bad)


def test_weight_validation():
    with pytest.raises(ValueError):
        DominantWeight((1, -1))
    with pytest.raises(ValueError):
        weyl_dim("A3", (1, 0))
    assert str(DominantWeight((1, 0, 2))) == "w1+2w3"
    assert str(DominantWeight.zero(3)) == "0"
    assert DominantWeight((1, 0, 2)).support() == (1, 3)


def test_diagram_symmetries():
    assert opposition_involution("A4") == (4, 3, 2, 1)
    assert opposition_involution("D5") == (1, 2, 3, 5, 4)
    assert opposition_involution("D4") == (1, 2, 3, 4)
    assert opposition_involution("E6") == (6, 2, 5, 4, 3, 1)
    assert opposition_involution("E7") == tuple(range(1, 8))
    assert len(diagram_automorphisms("D4")) == 5
    # a diagram automorphism preserves the Cartan matrix and hence dimensions
    for name in ("A4", "D5", "E6", "D4"):
        rs = root_system(name)
        for perm in diagram_automorphisms(name):
            a = rs.cartan_matrix
            assert all(a[perm[i] - 1][perm[j] - 1] == a[i][j] for i in range(rs.rank) for j in range(rs.rank))


def test_paper_labels():
    # node 1 in the printed E7 labelling carries the 56-dimensional module
    assert printed_to_bourbaki("E7", 1) == 7
    assert weyl_dim("E7", translate_printed_weight("E7", (1, 0, 0, 0, 0, 0, 0))) == 56
    assert weyl_dim("F4", translate_printed_weight("F4", (1, 0, 0, 0))) == 26
    assert weyl_dim("E6", translate_printed_weight("E6", (0, 0, 0, 0, 1, 0))) == 27
    for name in ("E6", "E7", "E8", "F4", "A3"):
        n = root_system(name).rank
        assert all(bourbaki_to_printed(name, printed_to_bourbaki(name, i)) == i for i in range(1, n + 1))
