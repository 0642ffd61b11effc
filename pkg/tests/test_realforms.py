import pytest

from quatrep.reftables import QUAT_INDEX_ROWS
from quatrep.realforms import (
    FamilyConstraintError,
    RealFormError,
    UnknownRealForm,
    default_catalog,
    family_instance,
    format_catalog,
    generated_forms,
    index_classification,
    load_catalog,
    lookup_real_form,
    parse_catalog,
)
from quatrep.rootsys import LieType, opposition_involution


def test_su31():
    f = lookup_real_form("su(3,1)")
    assert f.complex_type == LieType("A", 3)
    assert f.galois_involution == (3, 2, 1)
    assert f.q_set == {2}
    idx = index_classification(f)
    assert (idx.r_set, idx.c_set, idx.q_set) == (frozenset(), frozenset({1, 3}), frozenset({2}))


def test_split_forms_have_identity_and_empty_q():
    for name in ("sl(3,R)", "g2(2)", "f4(4)", "e8(8)", "e7(7)", "sp(3,R)"):
        f = lookup_real_form(name)
        idx = index_classification(f)
        assert f.galois_involution == tuple(range(1, f.rank + 1))
        assert idx.q_set == frozenset() and idx.c_set == frozenset()
        assert idx.r_set == frozenset(range(1, f.rank + 1))


@pytest.mark.parametrize("name,q", [
    ("sp(2,1)", {1, 3}), ("sp(2,2)", {1, 3}), ("sp(3)", {1, 3}), ("so(5,4)", set()), ("so(4,1)", {2}),
    ("so(5)", {2}), ("so(6,2)", {3, 4}), ("so(7,3)", {4, 5}), ("so*(10)", {1, 3}), ("so*(12)", {1, 3, 5}),
    ("sl_2(H)", {1, 3}), ("su(2)", {1}), ("e7(-5)", {2, 5, 7}), ("e7(-133)", {2, 5, 7}), ("e7(-25)", set()),
    ("sp(2,R)", set()), ("su(2,2)", set()),
])
def test_quaternionic_index_sets(name, q):
    assert lookup_real_form(name).q_set == frozenset(q)


def test_q_is_fixed_by_involution():
    for f in default_catalog().forms:
        assert all(f.t(i) == i for i in f.q_set), f.name
        assert all(f.t(f.t(i)) == i for i in range(1, f.rank + 1))


def test_compact_involution_is_opposition():
    for f in default_catalog().forms:
        if f.is_compact:
            assert f.galois_involution == opposition_involution(f.complex_type), f.name


def test_each_quaternionic_form_has_one_index_row():
    for f in default_catalog().forms:
        rows = [r for r in QUAT_INDEX_ROWS if r.family == f.family_key and r.applies(f.rank, f.parameters)]
        assert len(rows) <= 1, f.name
        assert bool(rows) == bool(f.q_set), f.name
        assert (f.provenance == "paper") == bool(rows), f.name


def test_lookup_round_trip_and_normalization():
    cat = default_catalog()
    for name in cat.names():
        assert cat.lookup(name).name == name
    assert lookup_real_form("SU(3, 1)").name == "su(3,1)"
    assert lookup_real_form("E7(-5)").name == "e7(-5)"


def test_shipped_file_matches_generator():
    assert format_catalog(default_catalog().forms) == format_catalog(generated_forms())
    assert len(default_catalog().forms) == len(generated_forms())


def test_rank_beyond_file_uses_family_rules():
    f = lookup_real_form("su(9,3)")
    assert f.rank == 11 and f.q_set == frozenset({6})
    assert lookup_real_form("so(16,3)").q_set == frozenset({9})
    assert lookup_real_form("so(17,3)").q_set == frozenset()


def test_aliases_are_distinct_entries():
    assert lookup_real_form("so(5)").complex_type == LieType("B", 2)
    assert lookup_real_form("sp(2)").complex_type == LieType("C", 2)


def test_unknown_name_suggests():
    with pytest.raises(UnknownRealForm) as exc:
        lookup_real_form("su(3,l)")
    assert "su(3,1)" in exc.value.suggestions


@pytest.mark.parametrize("name", ["so*(8)", "so(2,1)", "sl_1(H)", "so(3,3)"])
def test_family_constraints(name):
    with pytest.raises(RealFormError):
        family_instance(name)


def test_constraint_error_names_condition():
    with pytest.raises(FamilyConstraintError, match=">="):
        family_instance("so*(8)")


def test_catalog_parse_errors(tmp_path):
    good = format_catalog(generated_forms(3))
    assert [f.name for f in parse_catalog(good)] == [f.name for f in generated_forms(3)]
    with pytest.raises(RealFormError):
        parse_catalog("name\tfamily\n")
    bad_lines = good.splitlines()
    fields = bad_lines[2].split("\t")
    fields[3] = "(1 9)"
    bad_lines[2] = "\t".join(fields)
    with pytest.raises(RealFormError, match=":3:"):
        parse_catalog("\n".join(bad_lines) + "\n")
    path = tmp_path / "forms.tsv"
    path.write_text(good)
    assert load_catalog(path).lookup("su(2,1)").q_set == frozenset()
    # names outside the file still resolve through the family rules
    assert load_catalog(path).lookup("e8(8)").rank == 8
    with pytest.raises(UnknownRealForm):
        load_catalog(path).lookup("e9(1)")
