"""Shared fixtures.  The two factorization systems and the seeded corpus
are expensive enough to build once per session; the pushout-product cache
inside awfslab.catfolk is module level, so sharing these fixtures keeps
the heavy tests fast."""

import pytest

from awfslab import catfolk


@pytest.fixture(scope="session")
def tc():
    return catfolk.trivcof_awfs()


@pytest.fixture(scope="session")
def cof():
    return catfolk.cof_awfs()


@pytest.fixture(scope="session")
def corpus():
    return catfolk.random_corpus(0, size=50)


@pytest.fixture(scope="session")
def pp_table(tc):
    table, squares = catfolk.lifted_pp_table(tc)
    return table, squares
