import random

import pytest

from core.errors import ConstructionError, SizeLimitError
from core.fixtures import gauss_code_fixture, matched_graph_fixture
from embed.colorings import (Multicycle, bicolored_multicycles, dkh_rank, is_multicycle,
                             multicycle_bijection, two_colorings)
from embed.strong import embedding_text, strong_embedding
from functor.kmap import k_map
from rewrite.search import random_walk


@pytest.mark.parametrize("name, expected", [("HOPF2", 4), ("UNKNOT0", 2), ("TREFOIL", 2),
                                            ("ODD_LINK", 0)])
def test_two_coloring_counts(name, expected):
    assert len(two_colorings(gauss_code_fixture(name))) == expected
    assert dkh_rank(gauss_code_fixture(name)) == expected


def test_two_colorings_alternate():
    for coloring in two_colorings(gauss_code_fixture("TREFOIL")):
        (comp,) = coloring.colors
        assert all(comp[k] != comp[(k + 1) % len(comp)] for k in range(len(comp)))
    assert sorted(c.text() for c in two_colorings(gauss_code_fixture("HOPF2")))[0] == "12 / 12"


@pytest.mark.parametrize("name, expected", [("THETA", 2), ("UNGRAPH1", 2), ("CUBEQ3", 4),
                                            ("PETERSEN", 0)])
def test_multicycle_counts(name, expected):
    g = matched_graph_fixture(name)
    found = bicolored_multicycles(g)
    assert len(found) == expected
    assert all(is_multicycle(g, c) for c in found)


def test_mono_colored_vertex_is_not_a_multicycle():
    g = matched_graph_fixture("THETA")
    assert not is_multicycle(g, Multicycle.from_dict({"e2": 1, "e3": 1}))
    with pytest.raises(ConstructionError):
        multicycle_bijection(g, Multicycle.from_dict({"e2": 1, "e3": 1}))


@pytest.mark.parametrize("name", ["THETA", "UNGRAPH1", "CUBEQ3", "K4M", "FRANKLIN"])
def test_multicycles_biject_onto_two_colorings(name):
    g = matched_graph_fixture(name)
    images = [multicycle_bijection(g, c) for c in bicolored_multicycles(g)]
    assert len(set(images)) == len(images)
    assert set(images) == set(two_colorings(k_map(g)))


def test_dkh_rank_counts_multicycles():
    g = matched_graph_fixture("CUBEQ3")
    assert dkh_rank(k_map(g)) == len(bicolored_multicycles(g)) == 4


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_dkh_rank_survives_moves(seed):
    d = gauss_code_fixture("HOPF2")
    walked, _ = random_walk(d, 6, random.Random(seed), max_crossings=8)
    assert dkh_rank(walked) == dkh_rank(d)


def test_theta_embeds_in_the_sphere():
    g = matched_graph_fixture("THETA")
    for c in bicolored_multicycles(g):
        emb = strong_embedding(g, c)
        assert len(emb.faces) == 3
        assert emb.orientable
        assert emb.genus == 0
        assert embedding_text(emb).splitlines()[-1] == "genus 0 orientable yes"


def test_cube_has_a_spherical_strong_embedding():
    g = matched_graph_fixture("CUBEQ3")
    embeddings = [strong_embedding(g, c) for c in bicolored_multicycles(g)]
    for emb in embeddings:
        assert sum(len(face) for face in emb.faces) == 2 * len(g.edges)
        assert emb.labels.count("C") == 2
    assert any(emb.orientable and emb.euler_genus == 0 for emb in embeddings)


def test_k4_example_is_projective():
    g = matched_graph_fixture("EMBED_EXAMPLE")
    (c, *_) = bicolored_multicycles(g)
    emb = strong_embedding(g, c)
    assert len(emb.faces) == 3
    assert emb.euler_genus == 1
    assert not emb.orientable
    assert emb.genus == 1
    assert embedding_text(emb).splitlines()[-1] == "genus 1 orientable no"


def test_free_loop_embedding():
    g = matched_graph_fixture("UNGRAPH1")
    emb = strong_embedding(g, bicolored_multicycles(g)[0])
    assert emb.faces == ()
    assert emb.genus == 0
    assert "loop l1" in embedding_text(emb)


def test_enumeration_limits():
    with pytest.raises(SizeLimitError):
        two_colorings(gauss_code_fixture("HOPF2"), limit=1)
    with pytest.raises(SizeLimitError):
        dkh_rank(gauss_code_fixture("HOPF2"), limit=1)
    assert dkh_rank(gauss_code_fixture("HOPF2"), limit=2) == 4
    with pytest.raises(SizeLimitError):
        bicolored_multicycles(matched_graph_fixture("CUBEQ3"), limit=1)
    assert len(bicolored_multicycles(matched_graph_fixture("CUBEQ3"), limit=2)) == 4
