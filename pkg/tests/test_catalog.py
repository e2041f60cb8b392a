import pytest

from lscat import (
    ConsistencyError,
    DimensionMismatch,
    ParseError,
    TriState,
    UnknownGenerator,
    load_facts,
    query_vanishing,
)
from lscat.words import identity

GOOD = """
gen a dom=3 cod=2 h1=iota
gen b dom=4 cod=3 susp_of=a
gen c dom=9 cod=4
fact zero b*c susp=2
fact nonzero b*c susp=0
"""


def test_shipped_catalog_contents(cat):
    eta = cat.generators["eta_2"]
    assert (eta.dom, eta.cod) == (3, 2)
    assert cat.h1_declaration("eta_2") == identity(3)
    assert cat.generators["eta_3"].susp_of == "eta_2"
    assert len(cat.source_digest) == 64


def test_empty_file_gives_empty_catalog():
    empty = load_facts(b"")
    assert not empty.generators and not empty.facts


def test_zero_then_nonzero_conflict_rejected():
    with pytest.raises(ConsistencyError):
        load_facts(GOOD + "fact nonzero b*c susp=3\n")


def test_stable_nonzero_conflicts_with_any_zero():
    with pytest.raises(ConsistencyError):
        load_facts(GOOD + "fact nonzero b*c susp=stable\n")


def test_dangling_names_rejected():
    with pytest.raises(ConsistencyError):
        load_facts("gen a dom=4 cod=3 susp_of=ghost\n")
    with pytest.raises(ConsistencyError):
        load_facts("gen a dom=3 cod=2\nfact zero a*ghost susp=0\n")


def test_susp_of_dimension_check():
    with pytest.raises(ConsistencyError):
        load_facts("gen a dom=3 cod=2\ngen b dom=5 cod=3 susp_of=a\n")


def test_suspension_with_nonzero_h1_rejected():
    text = "gen a dom=3 cod=2\ngen b dom=4 cod=3 susp_of=a h1=iota\n"
    with pytest.raises(ConsistencyError):
        load_facts(text)


def test_declared_h1_dimensions_checked():
    # h1 of a generator S^6 -> S^3 must land in S^5
    with pytest.raises(ConsistencyError):
        load_facts("gen a dom=3 cod=2 h1=iota\ngen q dom=6 cod=3 h1=a\n")


def test_generator_needs_dom_greater_than_cod():
    with pytest.raises(ConsistencyError):
        load_facts("gen a dom=3 cod=3\n")


def test_parse_errors_report_lines():
    with pytest.raises(ParseError) as err:
        load_facts("gen a dom=3 cod=2\nbogus line here\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        load_facts("gen a dom=x cod=2\n")
    with pytest.raises(ParseError):
        load_facts("gen a dom=3\n")
    with pytest.raises(ParseError):
        load_facts("gen a dom=3 cod=2 color=red\n")
    with pytest.raises(ParseError):
        load_facts("gen a dom=3 cod=2\ngen a dom=4 cod=3\n")
    with pytest.raises(ParseError):
        load_facts("gen a dom=3 cod=2\nfact zero a susp=-1\n")
    with pytest.raises(ParseError):
        load_facts("gen a dom=3 cod=2\nfact zero a susp=stable\n")


def test_comments_and_blank_lines_ignored():
    parsed = load_facts("# header\n\ngen a dom=3 cod=2  # trailing\n")
    assert set(parsed.generators) == {"a"}


def test_query_vanishing_closure(cat):
    w = cat.word_class(("alpha1_3_p3", "alpha1_6_p3"))
    assert query_vanishing(cat, w, 0) is TriState.NONZERO
    assert query_vanishing(cat, w, 1) is TriState.UNKNOWN
    assert query_vanishing(cat, w, 2) is TriState.ZERO
    assert query_vanishing(cat, w, 7) is TriState.ZERO

    m2 = cat.word_class(("eta_3", "eta_4", "eps_5"))
    assert query_vanishing(cat, m2, 2) is TriState.NONZERO
    assert query_vanishing(cat, m2, 0) is TriState.NONZERO
    assert query_vanishing(cat, m2, 5) is TriState.UNKNOWN
    assert query_vanishing(cat, m2, 6) is TriState.ZERO


def test_query_accounts_for_class_suspension(cat):
    from lscat import suspend

    w = suspend(cat.word_class(("alpha1_3_p3", "alpha1_6_p3")), 2)
    assert query_vanishing(cat, w, 0) is TriState.ZERO


def test_query_unknown_generator(cat):
    from lscat.words import CompositionClass

    bogus = CompositionClass(dom=9, cod=2, word=("eta_2", "ghost"))
    with pytest.raises(UnknownGenerator):
        query_vanishing(cat, bogus, 0)


def test_word_class_validates_chaining(cat):
    with pytest.raises(DimensionMismatch):
        cat.word_class(("eta_2", "eta_2"))
    with pytest.raises(UnknownGenerator):
        cat.word_class(("ghost",))


def test_stable_flag_roundtrip():
    parsed = load_facts(GOOD + "gen d dom=7 cod=2\nfact nonzero d susp=stable\n")
    w = parsed.word_class(("d",))
    assert parsed.stably_nonzero(w)
    assert query_vanishing(parsed, w, 100) is TriState.NONZERO


def test_serialize_roundtrip(cat):
    text = cat.dumps()
    again = load_facts(text)
    assert again == cat
    assert again.canonical_digest == cat.canonical_digest
    # canonical form is a fixed point
    assert again.dumps() == text


def test_roundtrip_of_synthetic_catalog():
    parsed = load_facts(GOOD)
    again = load_facts(parsed.dumps())
    assert again == parsed
    assert again.canonical_digest == parsed.canonical_digest
