import pytest

from quatrep.freudenthal import OracleGuardError, freudenthal_dim, weight_multiplicities
from quatrep.rootsys import root_system, weyl_dim


def test_sl2_string():
    mults = weight_multiplicities(root_system("A1"), (3,))
    assert sorted(mults.values()) == [1, 1, 1, 1]
    assert freudenthal_dim(root_system("A1"), (3,)) == 4


def test_adjoint_zero_weight():
    rs = root_system("A2")
    mults = weight_multiplicities(rs, (1, 1))
    assert sum(mults.values()) == 8
    assert max(mults.values()) == 2
    # zero weight multiplicity of an adjoint module equals the rank
    for name in ("B2", "G2", "C3"):
        rs = root_system(name)
        top = max(rs.positive_roots, key=sum)
        hw = tuple(sum(c * a for c, a in zip(top, row)) for row in rs.cartan_matrix)
        assert freudenthal_dim(rs, hw) == 2 * len(rs.positive_roots) + rs.rank


def test_trivial():
    for name in ("A1", "B3", "G2", "F4"):
        rs = root_system(name)
        assert freudenthal_dim(rs, (0,) * rs.rank) == 1


@pytest.mark.parametrize("name,weight", [("B3", (0, 0, 1)), ("C3", (0, 1, 0)), ("D4", (0, 0, 1, 1)),
                                         ("G2", (1, 1)), ("F4", (0, 0, 0, 1))])
def test_agrees_with_weyl(name, weight):
    rs = root_system(name)
    assert freudenthal_dim(rs, weight) == weyl_dim(rs, weight)


def test_guards():
    with pytest.raises(OracleGuardError):
        freudenthal_dim(root_system("E6"), (1, 0, 0, 0, 0, 0))
    with pytest.raises(OracleGuardError):
        freudenthal_dim(root_system("A2"), (40, 40))
