import pytest
from hypothesis import given, settings, strategies as st

from systemic.core import build_surpass_circ, relation_pairs
from systemic.instancefile import (DATA_DIR, InstanceError, canonical_text, load_instance,
                                   parse_instance, serialize, shipped_files)
from systemic.instances import FINITE_NAMES, get_instance
from systemic.modules import MapTable, SystemicModule, free_module

MINI = """kind system
name mini
elem 0 1
zero 0
one 1
tangible 1
neg 0 -> 0
neg 1 -> 1
add 0 0 -> 0
add 0 1 -> 1
add 1 0 -> 1
add 1 1 -> 1
mul 0 0 -> 0
mul 0 1 -> 0
mul 1 0 -> 0
mul 1 1 -> 1
surpass: circ
"""


@pytest.mark.parametrize("path", shipped_files(), ids=lambda p: p.name)
def test_shipped_files_round_trip(path):
    obj = load_instance(path)
    text = canonical_text(path)
    again = parse_instance(text, str(path), DATA_DIR)
    assert again == obj
    if isinstance(again, MapTable):
        assert again.table == obj.table
    else:
        assert serialize(again) == text


@pytest.mark.parametrize("name", FINITE_NAMES)
def test_registry_systems_round_trip(name):
    S = get_instance(name)
    assert parse_instance(serialize(S)) == S


def test_free_module_round_trip():
    F = free_module(get_instance("sym-bool"), 2)
    G = parse_instance(serialize(F))
    assert isinstance(G, SystemicModule)
    assert (G.elements, G.add, G.act, G.le, G.tangibles) == (F.elements, F.add, F.act, F.le,
                                                             F.tangibles)


def test_circ_directive_matches_builder():
    S = parse_instance(MINI)
    assert relation_pairs(S) == build_surpass_circ(S)
    spelled = MINI.replace("surpass: circ\n", "".join(
        f"surpass {a} <= {b}\n" for a, b in sorted(build_surpass_circ(S)) if a != b))
    assert parse_instance(spelled).le == S.le


def test_error_positions():
    bad = MINI.replace("add 1 1 -> 1", "add 1 2 -> 1")
    with pytest.raises(InstanceError) as e:
        parse_instance(bad, "mini.sys")
    assert e.value.line == 12 and "undeclared element '2'" in e.value.message
    assert str(e.value).startswith("mini.sys:12:")


def test_non_total_table_names_the_pair():
    bad = MINI.replace("mul 1 0 -> 0\n", "")
    with pytest.raises(InstanceError) as e:
        parse_instance(bad)
    assert "non-total" in e.value.message and "(1, 0)" in e.value.message


def test_conflicting_entries_and_unknown_directive():
    with pytest.raises(InstanceError, match="conflicting"):
        parse_instance(MINI + "add 1 1 -> 0\n")
    with pytest.raises(InstanceError, match="unknown directive"):
        parse_instance(MINI + "frobnicate 1\n")
    with pytest.raises(InstanceError, match="kind"):
        parse_instance("kind widget\n")
    with pytest.raises(InstanceError, match="twice"):
        parse_instance(MINI.replace("elem 0 1", "elem 0 1 1"))


def test_references():
    text = "kind map\nsource free supertrop-B 1\ntarget supertrop-B\n" \
           "map 0 -> 0\nmap 1 -> 1\nmap nu -> nu\n"
    f = parse_instance(text)
    assert f.table == (0, 1, 2)
    with pytest.raises(InstanceError, match="unknown instance"):
        parse_instance(text.replace("target supertrop-B", "target tropical"))
    with pytest.raises(InstanceError, match="cannot read"):
        parse_instance(text.replace("target supertrop-B", "target file nowhere.sys"),
                       base=DATA_DIR)


def test_matrix_file_errors():
    with pytest.raises(InstanceError, match="different lengths"):
        parse_instance("kind matrix\nsystem supertrop-B\nrow 1 1\nrow 0\n")
    with pytest.raises(InstanceError, match="undeclared"):
        parse_instance("kind matrix\nsystem supertrop-B\nrow 1 7\n")


names = st.sampled_from(["0", "1", "nu"])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(names, min_size=2, max_size=2), min_size=1, max_size=3))
def test_matrix_serialization_round_trip(rows):
    text = "kind matrix\nsystem supertrop-B\n" + "".join("row " + " ".join(r) + "\n"
                                                         for r in rows)
    A = parse_instance(text)
    assert serialize(A) == text
    assert parse_instance(serialize(A)) == A
