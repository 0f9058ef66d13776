"""Squares, lifting problems, and lifting functions."""

from awfslab import catfolk
from awfslab.arrowcat import (
    Square,
    all_lifting_functions,
    identity_square,
    is_lift,
    liftfun_compose,
    liftfun_validate,
    lifting_problems,
    mk_square,
    square_compose,
)
from awfslab.fincat import (
    cat_terminal,
    compose_functors,
    constant_functor,
    identity_functor,
    interval,
)


def test_square_validity_and_composition():
    g = catfolk.generator_arrows()
    j = g["j"]
    s = identity_square(j)
    assert s.is_valid()
    assert square_compose(s, s).is_valid()
    collapse = constant_functor(j.dst, j.dst, 0, "collapse")
    t = mk_square(j, j, identity_functor(j.src), collapse)
    assert t.is_valid()
    assert square_compose(t, s).bot == collapse


def test_lifting_problems_of_j_against_point_collapse():
    g = catfolk.generator_arrows()
    iv = interval()
    to_pt = constant_functor(iv, cat_terminal(), "*", "iso_to_pt")
    probs = list(lifting_problems(g["j"], to_pt))
    assert len(probs) == 2  # the domain point can land on either end
    for (a, b) in probs:
        assert compose_functors(to_pt, a) == compose_functors(b, g["j"])


def test_coherent_lifting_functions_against_invertibility_generator():
    g = catfolk.generator_arrows()
    gens = catfolk.gens_iso_side()
    iv = interval()
    to_pt = constant_functor(iv, cat_terminal(), "*", "iso_to_pt")
    lfs = all_lifting_functions(gens, to_pt)
    assert len(lfs) == 1
    lf = lfs[0]
    assert liftfun_validate(lf) == []
    for (name, a, b), phi in lf.table.items():
        assert is_lift(gens.arrows[name], to_pt, a, b, phi)


def test_lifting_function_composition_solves_composite_problems():
    gens = catfolk.gens_iso_side()
    iv = interval()
    one = cat_terminal()
    f = constant_functor(iv, one, "*", "f")
    ident = identity_functor(one)
    lf_f = all_lifting_functions(gens, f)[0]
    lf_g = all_lifting_functions(gens, ident)[0]
    comp = liftfun_compose(lf_f, lf_g)
    assert comp.target == compose_functors(ident, f)
    assert liftfun_validate(comp) == []


def test_generator_category_squares_validate():
    assert catfolk.gens_iso_side().validate() == []
    assert catfolk.gens_cof_side().validate() == []
