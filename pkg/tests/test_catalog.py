"""Built-in examples and their expected-fact records."""

import pytest

from nilforms import (
    InvalidParameter,
    UnknownName,
    betti_profile,
    format_salamon,
    get_example,
    heisenberg_line,
    parse_salamon,
)
from nilforms.catalog import PROVENANCES, names


def test_names_are_stable():
    assert sorted(names()) == [
        "filiform_0_0_12_13", "kodaira_thurston", "six_dim_example", "torus4"]


def test_unknown_name_lists_the_choices():
    with pytest.raises(UnknownName) as info:
        get_example("filiform")
    assert "torus4" in str(info.value)


def test_entries_parse_their_own_salamon_strings():
    for name in names():
        entry = get_example(name)
        assert parse_salamon(entry.salamon) == entry.algebra
        assert format_salamon(entry.algebra) == entry.salamon


def test_every_fact_has_a_known_provenance():
    for name in names():
        for fact in get_example(name).facts:
            assert fact.provenance in PROVENANCES


def test_derived_betti_facts_recompute():
    for name in ("torus4", "kodaira_thurston", "filiform_0_0_12_13"):
        entry = get_example(name)
        assert betti_profile(entry.algebra) == entry.fact("betti_profile").value


def test_literature_facts_are_flagged_not_asserted():
    entry = get_example("filiform_0_0_12_13")
    complex_fact = entry.fact("complex_structure_exists")
    assert complex_fact.value is False
    provenances = {f.fact: f.provenance for f in entry.facts}
    assert provenances["complex_structure_exists"] == "literature"
    assert provenances["kahler_metric_exists"] == "literature"


def test_catalog_entries_are_cached():
    assert get_example("torus4").algebra is get_example("torus4").algebra


def test_kt_entry_carries_hermitian_data():
    entry = get_example("kodaira_thurston")
    assert entry.metric is not None and entry.acs is not None
    assert get_example("torus4").acs is not None
    assert get_example("filiform_0_0_12_13").metric is None


def test_heisenberg_line_small_cases(kt):
    assert heisenberg_line(2) == kt
    assert format_salamon(heisenberg_line(2)) == "(0,0,0,12)"
    six = heisenberg_line(3)
    assert six.dim == 6
    assert betti_profile(six)[1] == 5


def test_heisenberg_line_bracket_shape():
    algebra = heisenberg_line(4)
    assert algebra.dim == 8
    for i in range(1, 4):
        vec = algebra.bracket(2 * i - 1, 2 * i)
        assert vec[-1] == -1
        assert all(v == 0 for v in vec[:-1])
    assert all(v == 0 for v in algebra.bracket(7, 8))


def test_heisenberg_line_rejects_small_n():
    with pytest.raises(InvalidParameter):
        heisenberg_line(1)
    with pytest.raises(InvalidParameter):
        heisenberg_line("2")
