import pytest

from quatrep.classify import HRepKind
from quatrep.minrep import (
    brute_force_minimum,
    minimal_quaternionic_rep,
    table3_excluded_checks,
    verify_table3,
)
from quatrep.realforms import default_catalog, lookup_real_form


@pytest.mark.parametrize("name,dim,nodes", [
    ("su(2)", 4, {1}), ("su(3,1)", 12, {2}), ("sl_2(H)", 8, {1, 3}), ("sl_3(H)", 12, {1, 5}),
    ("e7(-5)", 112, {7}), ("g2(2)", 28, {1}), ("sp(2,1)", 12, {1}), ("e8(-24)", 992, {8}),
    ("so(5)", 8, {2}), ("sp(2)", 8, {1}), ("so(3,2)", 16, {2}), ("sp(2,R)", 16, {1}),
    ("so(6,2)", 16, {3, 4}), ("su(2,2)", 16, {1, 3}),
])
def test_examples(name, dim, nodes):
    res = minimal_quaternionic_rep(lookup_real_form(name))
    assert res.real_dim == dim
    assert res.nodes == nodes


def test_e7_minimizer_is_irreducible():
    res = minimal_quaternionic_rep(lookup_real_form("e7(-5)"))
    (d,) = res.minimizers
    assert d.kind is HRepKind.QUATERNIONIC_IRREDUCIBLE and d.weight.coords == (0,) * 6 + (1,)


def test_ties_are_kept_once():
    res = minimal_quaternionic_rep(lookup_real_form("so(8)"))
    assert res.real_dim == 32
    assert sorted(d.weight.support() for d in res.minimizers) == [(1,), (3,), (4,)]
    # a doubled pair appears once, under its canonical weight
    res = minimal_quaternionic_rep(lookup_real_form("su(4)"))
    assert [d.weight.coords for d in res.minimizers] == [(1, 0, 0)]
    assert res.nodes == {1, 3}


def test_forms_without_quaternionic_nodes_double():
    for f in default_catalog().forms:
        if f.rank > 5:
            continue
        res = minimal_quaternionic_rep(f)
        assert res.real_dim % 4 == 0
        if not f.q_set:
            assert all(d.kind is HRepKind.DOUBLED_IRREDUCIBLE for d in res.minimizers), f.name


def test_brute_force_agrees_on_small_forms():
    for name in ("su(3,1)", "so(4,3)", "sp(3,R)", "g2(2)", "so*(10)"):
        f = lookup_real_form(name)
        res = minimal_quaternionic_rep(f)
        best, weights = brute_force_minimum(f, res.real_dim)
        assert best == res.real_dim
        assert {d.weight.coords for d in res.minimizers} <= weights


def test_table3():
    checks = verify_table3()
    assert len(checks) == 83
    assert [c.form for c in checks if not c.match] == []


def test_excluded_instances_disagree_as_documented():
    by_form = {c.form: c for c in table3_excluded_checks()}
    assert (by_form["so(3,2)"].computed_dim, by_form["so(3,2)"].computed_nodes) == (16, {2})
    assert by_form["so(3,2)"].expected_dim == 20
    for name in ("so(8)", "so(7,1)", "so(5,3)", "so(4,4)"):
        assert (by_form[name].computed_dim, by_form[name].computed_nodes) == (32, {1, 3, 4})
        assert by_form[name].expected_nodes == {1}
