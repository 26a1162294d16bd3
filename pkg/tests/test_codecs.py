import pytest

from core.codecs import (gauss_code_inline, parse_gauss_code, parse_matched_graph,
                         serialize_gauss_code, serialize_matched_graph)
from core.errors import InvariantError, ParseError
from core.fixtures import GAUSS_CODE_TEXTS, MATCHED_GRAPH_TEXTS


@pytest.mark.parametrize("name", sorted(MATCHED_GRAPH_TEXTS))
def test_matched_graph_text_is_stable(name):
    g = parse_matched_graph(MATCHED_GRAPH_TEXTS[name])
    text = serialize_matched_graph(g)
    assert serialize_matched_graph(parse_matched_graph(text)) == text


@pytest.mark.parametrize("name", sorted(GAUSS_CODE_TEXTS))
def test_gauss_code_text_is_stable(name):
    d = parse_gauss_code(GAUSS_CODE_TEXTS[name])
    assert parse_gauss_code(serialize_gauss_code(d)) == d


def test_comments_and_blank_lines_are_ignored():
    g = parse_matched_graph("# theta\n\n" + MATCHED_GRAPH_TEXTS["THETA"] + "\n# end\n")
    assert len(g.vertices) == 2
    assert [e.id for e in g.edges if e.matched] == ["e1"]


def test_twist_mark_and_flag_survive():
    text = MATCHED_GRAPH_TEXTS["THETA"].replace("edge e2", "edge e2 ~") + "flag zgraphene\n"
    g = parse_matched_graph(text)
    assert g.edge("e2").twisted
    assert g.z_flag
    out = serialize_matched_graph(g)
    assert "edge e2 ~" in out
    assert out.endswith("flag zgraphene\n")


def test_unknown_keyword_reports_position():
    with pytest.raises(ParseError) as info:
        parse_matched_graph("vertex u solid e1.a e2.a e3.a\n  bogus x\n")
    assert info.value.line == 2
    assert info.value.column == 3


def test_bad_decoration_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_matched_graph("vertex u striped e1.a e2.a e3.a\n")


def test_imperfect_matching_is_rejected():
    text = MATCHED_GRAPH_TEXTS["THETA"].replace("medge e1 + a", "edge e1")
    with pytest.raises(InvariantError) as info:
        parse_matched_graph(text)
    assert "matching_not_perfect" in str(info.value)


def test_gauss_code_needs_two_passes_per_crossing():
    with pytest.raises(InvariantError) as info:
        parse_gauss_code("component: O1+ U2+\n")
    assert "crossing_passes" in str(info.value)


def test_crossing_with_two_signs_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        parse_gauss_code("component: O1+ U1-\n")
    assert info.value.line == 1


def test_inline_form():
    assert gauss_code_inline(parse_gauss_code(GAUSS_CODE_TEXTS["HOPF2"])) == "O1+ O2+ / U1+ U2+"
    assert gauss_code_inline(parse_gauss_code(GAUSS_CODE_TEXTS["UNKNOT0"])) == "()"
