"""Finite simplicial sets: simplicial identities, standard complexes,
products and pushout-products, and cellular certificates."""

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from awfslab import sset
from awfslab.sset import (
    CellularCertificate,
    CertStep,
    Mono,
    SearchExhausted,
    anodyne_certificate,
    anodyne_target,
    boundary,
    boundary_inclusion,
    certificate_lift,
    certificate_verify,
    close_complex,
    degeneracy,
    delta,
    empty_sset,
    face,
    horn,
    horn_certificate_search,
    horn_inclusion,
    is_degenerate,
    load_anodyne_table,
    mono_icellular,
    pinned_101_steps,
    simplicial_map,
    sset_product,
    sset_pp,
    sset_pushout,
    shuffle_count,
    validate_smap,
    validate_sset,
)

simplices = st.lists(st.integers(0, 5), min_size=2, max_size=6).map(
    lambda vs: tuple(sorted(vs))
)


@settings(max_examples=60, deadline=None)
@given(simplices, st.data())
def test_face_face_identity(s, data):
    n = len(s) - 1
    if n < 2:
        return
    j = data.draw(st.integers(1, n))
    i = data.draw(st.integers(0, j - 1))
    assert face(face(s, j), i) == face(face(s, i), j - 1)


@settings(max_examples=60, deadline=None)
@given(simplices, st.data())
def test_degeneracy_degeneracy_identity(s, data):
    n = len(s) - 1
    j = data.draw(st.integers(0, n))
    i = data.draw(st.integers(0, j))
    assert degeneracy(degeneracy(s, j), i) == degeneracy(degeneracy(s, i), j + 1)


@settings(max_examples=60, deadline=None)
@given(simplices, st.data())
def test_face_degeneracy_identities(s, data):
    n = len(s) - 1
    j = data.draw(st.integers(0, n))
    t = degeneracy(s, j)
    assert face(t, j) == s and face(t, j + 1) == s
    for i in range(0, j):
        assert face(t, i) == degeneracy(face(s, i), j - 1)
    for i in range(j + 2, n + 2):
        assert face(t, i) == degeneracy(face(s, i - 1), j)


def test_degenerate_detection():
    assert not is_degenerate((0, 1, 2))
    assert is_degenerate((0, 1, 1))
    assert is_degenerate(degeneracy((0, 1), 0))


def test_standard_complexes_are_lawful():
    for x in (delta(0), delta(2), delta(3), boundary(2), boundary(3),
              horn(2, 0), horn(2, 1), horn(3, 1), empty_sset()):
        assert validate_sset(x) == []


def test_boundary_and_horn_cell_counts():
    assert len(delta(2).nondeg(2)) == 1
    assert len(boundary(2).nondeg(1)) == 3
    assert len(boundary(2).nondeg(2)) == 0
    for k in range(3):
        h = horn(2, k)
        assert len(h.nondeg(1)) == 2
        assert face((0, 1, 2), k) not in h.nondeg(1)
        assert h.is_subcomplex_of(boundary(2))


def test_product_shuffle_counts():
    for p in range(5):
        for q in range(5 - p):
            assert shuffle_count(p, q) == comb(p + q, p)


def test_product_is_lawful_and_has_paired_vertices():
    prod = sset_product(delta(1), delta(2))
    assert validate_sset(prod) == []
    assert prod.vertices() == frozenset((i, j) for i in range(2) for j in range(3))


def test_pushout_with_empty_apex_is_coproduct():
    e = empty_sset()
    f = Mono(e, delta(1))
    g = Mono(e, delta(2))
    po, left, right = sset_pushout(f, g)
    assert validate_sset(po) == []
    assert len(po.vertices()) == 2 + 3
    assert validate_smap(left) == [] and validate_smap(right) == []


def test_pushout_product_of_point_inclusion_keeps_shape():
    # (empty -> point) pp j is j itself up to pairing the vertices with
    # the point
    j = boundary_inclusion(1)
    ppd = sset_pp(Mono(empty_sset(), delta(0)), j)
    assert len(ppd.dom.vertices()) == len(j.dom.vertices())
    assert len(ppd.cod.vertices()) == len(j.cod.vertices())
    assert len(ppd.cod.nondeg(1)) == len(j.cod.nondeg(1))


def test_simplicial_map_validation():
    m = simplicial_map(delta(1), delta(2), {0: 0, 1: 2})
    assert validate_smap(m) == []
    collapse = simplicial_map(delta(1), delta(2), {0: 1, 1: 1})
    assert validate_smap(collapse) == []


def test_icellular_certificates_replay():
    for mono in (boundary_inclusion(2), horn_inclusion(2, 1),
                 Mono(empty_sset(), boundary(1))):
        cert = mono_icellular(mono)
        assert all(s.kind == "bdry" for s in cert.steps)
        assert certificate_verify(cert)["ok"]


def test_icellular_attaches_in_dimension_order():
    cert = mono_icellular(Mono(empty_sset(), delta(2)))
    dims = [s.n for s in cert.steps]
    assert dims == sorted(dims)


def test_anodyne_table_is_complete_and_replays():
    table = load_anodyne_table()
    assert len(table) == 15
    for n in (1, 2):
        for k in range(n + 1):
            for m in (0, 1, 2):
                cert = anodyne_certificate(n, k, m)
                assert certificate_verify(cert)["ok"], (n, k, m)
                assert all(s.kind == "horn" for s in cert.steps)


def test_pinned_101_certificate_matches_table():
    table = load_anodyne_table()
    assert list(table[(1, 0, 1)]) == list(pinned_101_steps())


def test_scrambled_certificate_is_rejected_with_located_step():
    cert = anodyne_certificate(2, 1, 1)
    assert len(cert.steps) >= 2
    scrambled = CellularCertificate(
        cert.target, (cert.steps[-1],) + cert.steps[1:-1] + (cert.steps[0],),
        cert.cert_kind,
    )
    rep = certificate_verify(scrambled)
    assert not rep["ok"]
    kinds = {v[0] for v in rep["violations"]}
    assert "step-invalid" in kinds or "composite-mismatch" in kinds


def test_search_exhaustion_raises():
    m = anodyne_target(2, 1, 2)
    with pytest.raises(SearchExhausted):
        horn_certificate_search(m, budget=2)


def test_certificate_lift_replays_a_cleavage():
    # lift the identity fibration along a certificate whose fillers have
    # all vertices available at fill time
    cert = anodyne_certificate(2, 1, 0)
    dom = cert.target.dom
    vmap = {v: v for v in dom.vertices()}

    def fill(n, k, images):
        assert None not in images
        return images

    lifted = certificate_lift(cert, vmap, fill)
    assert lifted == {v: v for v in cert.target.cod.vertices()}


def test_trough_structures_are_valid_and_distinct():
    rep = sset.trough_demo()
    assert rep["a_valid"] and rep["b_valid"]
    assert not rep["equal"]
    assert rep["first_divergence"] is not None
    assert {rep["end_triangle_dim_a"], rep["end_triangle_dim_b"]} == {2, 3}
