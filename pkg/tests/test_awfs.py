"""Functorial factorization laws, (co)algebra calculus, and morphisms of
factorization systems."""

from awfslab import catfolk
from awfslab.awfs import (
    Algebra,
    Coalgebra,
    alg_compose,
    alg_pullback,
    alg_validate,
    awfs_morphism_validate,
    chosen_lift,
    coalg_compose,
    coalg_pushforward,
    coalg_validate,
    validate_awfs,
)
from awfslab.arrowcat import is_lift, lifting_problems
from awfslab.fincat import (
    cat_terminal,
    compose_functors,
    constant_functor,
    identity_functor,
    interval,
)


def test_factorizations_compose_to_the_arrow(tc, cof, corpus):
    for w in (tc, cof):
        for f in corpus[:8]:
            assert compose_functors(w.R(f), w.L(f)) == f


def test_laws_on_a_small_subcorpus(tc, cof, corpus):
    sub = corpus[:8]
    assert validate_awfs(tc, sub) == []
    assert validate_awfs(cof, sub) == []


def test_free_coalgebra_and_free_algebra_are_lawful(tc, corpus):
    for f in corpus[:6]:
        assert coalg_validate(tc, Coalgebra(tc.L(f), tc.delta(f))) == []
        assert alg_validate(tc, Algebra(tc.R(f), tc.mu(f))) == []


def test_canonical_j_coalgebra_and_composition(tc):
    g = catfolk.generator_arrows()
    zj = catfolk.canonical_j_coalg(tc)
    assert coalg_validate(tc, zj) == []
    iso = g["j"].dst
    rep = catfolk.unique_coalg(tc, identity_functor(iso))
    assert rep["count"] == 1
    comp = coalg_compose(tc, zj, rep["structure"])
    assert comp.f == g["j"]
    assert coalg_validate(tc, comp) == []


def test_algebra_composition_is_lawful(tc):
    pairs = catfolk.composable_algebra_pairs(tc, 0, count=3)
    for inner, outer in pairs:
        comp = alg_compose(tc, inner, outer)
        assert comp.g == compose_functors(outer.g, inner.g)
        assert alg_validate(tc, comp) == []


def test_chosen_lift_solves_the_problem(tc):
    g = catfolk.generator_arrows()
    zj = catfolk.canonical_j_coalg(tc)
    iv = interval()
    to_pt = constant_functor(iv, cat_terminal(), "*", "iso_to_pt")
    alg = catfolk.alg_structures(tc, to_pt)[0]
    for (u, v) in lifting_problems(g["j"], to_pt):
        phi = chosen_lift(tc, zj, alg, u, v)
        assert is_lift(g["j"], to_pt, u, v, phi)


def test_comparison_triangles_and_comultiplication(tc, cof, corpus):
    xi = lambda f: catfolk.comparison_xi(cof, tc, f)
    rep = awfs_morphism_validate(tc, cof, xi, corpus[:10])
    assert all(v["law"] == "xi-mult-pentagon" for v in rep), rep


def test_coalgebra_pushforward_along_comparison(tc, cof):
    g = catfolk.generator_arrows()
    zj = catfolk.canonical_j_coalg(tc)
    xi = lambda f: catfolk.comparison_xi(cof, tc, f)
    pushed = coalg_pushforward(cof, xi, zj)
    assert coalg_validate(cof, pushed) == []


def test_algebra_pullback_along_comparison(tc, cof):
    iv = interval()
    to_pt = constant_functor(iv, cat_terminal(), "*", "iso_to_pt")
    xi = lambda f: catfolk.comparison_xi(cof, tc, f)
    for a in catfolk.alg_structures(cof, to_pt):
        pulled = alg_pullback(tc, xi, a)
        assert alg_validate(tc, pulled) == []
