"""Finite category infrastructure: validity of the stock categories,
functor calculus, universal constructions, and the two functorial
replacements (mapping cylinder and iso-comma)."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from awfslab import catfolk
from awfslab.fincat import (
    CapExceeded,
    adjunction_check,
    arrow_iso,
    all_functors,
    all_nattrans,
    cat_empty,
    cat_terminal,
    chain,
    compose_functors,
    coproduct,
    copair_functor,
    cyclic_group,
    discrete,
    identity_functor,
    interval,
    inverse_functor,
    is_faithful,
    is_full,
    is_injective_on_objects,
    is_iso_functor,
    iso_comma,
    mapping_cylinder,
    mk_functor,
    pair_functor,
    parallel_pair,
    product,
    pullback,
    pushout_bounded,
    pushout_factor,
    pushout_universal_check,
    swap_functor,
    validate_category,
    validate_functor,
    validate_nattrans,
    vcompose_nattrans,
    walking_arrow,
)

STOCK = [
    cat_empty(),
    cat_terminal(),
    walking_arrow(),
    parallel_pair(),
    interval(),
    discrete([0, 1, 2]),
    chain(3),
    cyclic_group(2),
    cyclic_group(3),
]


@pytest.mark.parametrize("cat", STOCK, ids=lambda c: c.name)
def test_stock_categories_are_valid(cat):
    assert validate_category(cat) == []


def test_interval_is_a_free_standing_isomorphism():
    iv = interval()
    isos = iv.isos()
    assert set(isos) == set(iv.morphisms)
    assert len(iv.objects) == 2


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_random_categories_and_functors_are_valid(seed):
    rng = random.Random(seed)
    c = catfolk.random_category(rng)
    assert validate_category(c) == []
    d = catfolk.random_category(rng)
    f = catfolk.random_functor(rng, c, d)
    if f is not None:
        assert validate_functor(f) == []


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_functor_composition_laws(seed):
    rng = random.Random(seed)
    c = catfolk.random_category(rng)
    d = catfolk.random_category(rng)
    f = catfolk.random_functor(rng, c, d)
    if f is None:
        return
    assert compose_functors(f, identity_functor(c)) == f
    assert compose_functors(identity_functor(d), f) == f


def test_product_projections_and_pairing():
    p, pi1, pi2 = product(walking_arrow(), interval())
    assert validate_category(p) == []
    assert validate_functor(pi1) == [] and validate_functor(pi2) == []
    diag = pair_functor(identity_functor(interval()), identity_functor(interval()))
    assert validate_functor(diag) == []
    sw = swap_functor(product(interval(), chain(2))[0], product(chain(2), interval())[0])
    assert validate_functor(sw) == []
    assert is_iso_functor(sw)


def test_coproduct_copairing():
    s, inl, inr = coproduct(walking_arrow(), cat_terminal())
    assert validate_category(s) == []
    fold = copair_functor(
        identity_functor(walking_arrow()),
        mk_functor(cat_terminal(), walking_arrow(), {"*": 0},
                   {("id", "*"): ("id", 0)}),
        s, inl, inr, walking_arrow(),
    )
    assert validate_functor(fold) == []
    assert compose_functors(fold, inl) == identity_functor(walking_arrow())


def test_pullback_of_projections():
    p, pi1, _ = product(chain(2), chain(2))
    pb, q1, q2 = pullback(pi1, pi1)
    assert validate_category(pb) == []
    assert compose_functors(pi1, q1) == compose_functors(pi1, q2)


def test_exponential_transposition_is_bijective():
    rep = adjunction_check(walking_arrow(), chain(2), interval())
    assert rep["ok"], rep
    rep = adjunction_check(interval(), cat_terminal(), walking_arrow())
    assert rep["ok"], rep


def test_natural_transformation_laws():
    two = walking_arrow()
    fs = all_functors(two, interval())
    f, g = fs[0], fs[1]
    nats = all_nattrans(f, f)
    assert len(nats) >= 1
    ident = [a for a in nats if all(a.comp[x] == f.dst.id(f.ob[x]) for x in two.objects)]
    assert len(ident) == 1
    for a in nats:
        assert validate_nattrans(a) == []
        assert vcompose_nattrans(a, ident[0]).comp == a.comp


def test_iso_functor_inverse_roundtrip():
    iv = interval()
    flip = mk_functor(
        iv, iv, {0: 1, 1: 0},
        {"u": "v", "v": "u", ("id", 0): ("id", 1), ("id", 1): ("id", 0)},
        "flip",
    )
    assert is_iso_functor(flip)
    assert compose_functors(inverse_functor(flip), flip) == identity_functor(iv)


def test_arrow_iso_detects_shape():
    g = catfolk.generator_arrows()
    assert arrow_iso(g["j"], g["j"]) is not None
    assert arrow_iso(g["j"], g["c"]) is None


def test_mapping_cylinder_factorization():
    g = catfolk.generator_arrows()
    for f in (g["j"], g["d"], g["e"]):
        cyl = mapping_cylinder(f)
        assert validate_category(cyl.cat) == []
        assert compose_functors(cyl.proj, cyl.into) == f
        assert is_injective_on_objects(cyl.into)
        assert is_full(cyl.proj) and is_faithful(cyl.proj)


def test_iso_comma_factorization():
    g = catfolk.generator_arrows()
    for f in (g["j"], g["d"], g["e"]):
        ic = iso_comma(f)
        assert validate_category(ic.cat) == []
        assert compose_functors(ic.proj, ic.into) == f


def test_pushout_universal_property():
    g = catfolk.generator_arrows()
    one = cat_terminal()
    iv = interval()
    # glue two copies of the free-standing isomorphism along a point
    j0 = g["j"]
    po = pushout_bounded(j0, j0)
    assert validate_category(po.cat) == []
    fold = pushout_factor(po, identity_functor(iv), identity_functor(iv))
    assert pushout_universal_check(po, identity_functor(iv), identity_functor(iv))
    assert compose_functors(fold, po.inl) == identity_functor(iv)


def test_pushout_morphism_cap():
    g = catfolk.generator_arrows()
    with pytest.raises(CapExceeded):
        catfolk.pp(g["d"], g["j"], max_morphisms=3)
