import pytest

from quatrep.realforms import lookup_real_form
from quatrep.witness import WitnessUnsupported, build_antiinvolution_witness


@pytest.mark.parametrize("m", range(0, 8))
@pytest.mark.parametrize("name", ["su(2)", "su(1,1)", "sl(2,R)"])
def test_rank_one_witnesses(name, m):
    f = lookup_real_form(name)
    # su(2) modules of odd highest weight are quaternionic, every other case here is real
    natural = "second" if name == "su(2)" and m % 2 else "first"
    w = build_antiinvolution_witness(f, (m,), natural)
    assert w.construction == "irreducible"
    assert w.holds(), w.checks()
    for kind in ("first", "second"):
        d = build_antiinvolution_witness(f, (m,), kind, doubled=True)
        assert d.construction == "doubled"
        assert len(d.j_matrix) == 4 * (m + 1)
        assert d.holds(), d.checks()


def test_second_kind_on_real_module_is_refused():
    with pytest.raises(WitnessUnsupported):
        build_antiinvolution_witness(lookup_real_form("su(2)"), (2,), "second", doubled=False)


@pytest.mark.parametrize("name", ["sl(3,R)", "su(3)", "su(2,1)"])
@pytest.mark.parametrize("weight", [(1, 0), (0, 1)])
def test_rank_two_doubled(name, weight):
    f = lookup_real_form(name)
    for kind in ("first", "second"):
        w = build_antiinvolution_witness(f, weight, kind)
        assert w.construction == "doubled" and w.holds(), w.checks()
        assert len(w.rep_matrices) == 8


def test_tampered_witness_fails():
    w = build_antiinvolution_witness(lookup_real_form("su(2)"), (1,), "second")
    bad = type(w)(w.rep_matrices, w.j_matrix, w.i_matrix, "first", w.construction)
    assert not bad.checks()["square"]


@pytest.mark.parametrize("name,weight", [("su(2)", (20,)), ("so(5)", (1, 0)), ("sl(3,R)", (1, 1)),
                                         ("sp(3,R)", (1, 0, 0))])
def test_guards(name, weight):
    with pytest.raises(WitnessUnsupported):
        build_antiinvolution_witness(lookup_real_form(name), weight, "second")


def test_bad_kind():
    with pytest.raises(ValueError):
        build_antiinvolution_witness(lookup_real_form("su(2)"), (1,), "third")
