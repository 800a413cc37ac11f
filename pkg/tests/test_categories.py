import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocoh.categories import (
    FinCategory,
    Monad,
    NatTransformation,
    PresentedCategory,
    ReflexiveGraph,
    check_adjunction,
    check_monad,
    commutative_square,
    compose_functors,
    em_category,
    enumerate_functors,
    find_category_isomorphism,
    free_category,
    functor_category,
    group_category,
    homotopy_category,
    identity_adjunction,
    identity_functor,
    identity_monad,
    induced_monad,
    monotone_functor,
    nerve,
    ordinal,
    poset_category,
    poset_nat,
    vertical,
    whisker_left,
    whisker_right,
    horizontal,
)
from hocoh.corpus import categories, circle, galois_adjunction, twisted_group_monad
from hocoh.errors import InvalidStructure
from hocoh.simplicial import check_simplicial_identities, horn, is_quasi_category, standard_simplex


def brute_strings(A: FinCategory, m: int) -> int:
    """Composable strings of m non-identity morphisms, by filtering all m-tuples."""
    gens = A.non_identities()
    return sum(1 for t in itertools.product(gens, repeat=m)
               if all(A.tgt(f) == A.src(g) for f, g in zip(t, t[1:])))


@pytest.mark.parametrize("name", ["[2]", "[3]", "square", "BZ2", "galois-A"])
def test_nerve_counts_match_brute_force(name):
    A = categories()[name]
    N = nerve(A, 3)
    assert N.counts()[0] == len(A.objects)
    for m in range(1, 4):
        expected = brute_strings(A, m)
        assert len(N.nondegenerate(m)) == expected


def test_nerve_of_ordinal_is_simplex():
    for n in range(4):
        N = nerve(ordinal(n), n)
        assert N.counts() == tuple(comb(n + 1, m + 1) for m in range(n + 1))
        assert N.meta["complete"]


def test_square_nerve_counts():
    assert nerve(commutative_square(), 3).counts() == (4, 5, 2)


def test_group_nerve_one_simplex_per_dimension():
    assert nerve(group_category(2), 4).counts() == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("name", ["[1]", "[2]", "square", "BZ2", "galois-A"])
def test_nerve_is_quasi_category_with_unique_fillers(name):
    A = categories()[name]
    N = nerve(A, 3)
    rep = is_quasi_category(N, 3)
    assert rep.verdict and rep.unique
    assert check_simplicial_identities(N) == []


@pytest.mark.parametrize("name", ["[2]", "square", "BZ2"])
def test_homotopy_category_of_nerve(name):
    A = categories()[name]
    P = homotopy_category(nerve(A, 2))
    B = P.to_category(4)
    assert B is not None
    assert find_category_isomorphism(A, B) is not None


def test_homotopy_category_of_horn_is_free_chain():
    P = homotopy_category(horn(2, 1))
    assert len(P.generators) == 2 and P.rules == []
    assert find_category_isomorphism(ordinal(2), P.to_category(4)) is not None


def test_homotopy_category_of_circle_is_free_monoid():
    P = homotopy_category(circle())
    assert len(P.objects) == 1 and list(P.generators) == ["e"] and P.rules == []
    assert P.to_category(6) is None
    assert P.equal(("e", "e"), ("e",)) == "no"


def test_presented_category_word_problem():
    P = PresentedCategory(("*",), {"a": ("*", "*")}, [(("a", "a"), ("a",))])
    assert P.is_confluent()
    assert P.equal(("a", "a", "a"), ("a",)) == "yes"
    assert P.reduce(("a",) * 5) == ("a",)
    A = P.to_category(4)
    assert len(A.morphisms) == 2


def test_free_category_on_path_graph():
    g = ReflexiveGraph((0, 1, 2), {"i0": (0, 0), "i1": (1, 1), "i2": (2, 2), "p": (0, 1), "q": (1, 2)},
                       {0: "i0", 1: "i1", 2: "i2"})
    F = free_category(g, 4)
    assert not F.truncated
    assert find_category_isomorphism(ordinal(2), F) is not None


def test_free_category_on_loop_is_truncated():
    g = ReflexiveGraph(("*",), {"i": ("*", "*"), "e": ("*", "*")}, {"*": "i"})
    F = free_category(g, 3)
    assert F.truncated and len(F.morphisms) == 4


def test_functor_category_of_arrow():
    # functors [1] -> [1] are the three monotone maps; natural transformations order them
    C = functor_category(ordinal(1), ordinal(1))
    assert len(C.objects) == 3
    assert len(C.non_identities()) == 3


@given(st.integers(0, 2), st.integers(0, 2))
def test_functors_between_ordinals_are_monotone_maps(m, n):
    assert len(list(enumerate_functors(ordinal(m), ordinal(n)))) == comb(n + m + 1, m + 1)


def test_galois_adjunction_and_monad():
    J = galois_adjunction()
    assert check_adjunction(J) == []
    M = induced_monad(J)
    assert check_monad(M) == []
    assert M.T.obj == {0: 0, 1: 2, 2: 2}


def test_em_category_of_closure_monad():
    M = induced_monad(galois_adjunction())
    BT, JT = em_category(M)
    assert sorted(a[0] for a in BT.objects) == [0, 2]
    assert check_adjunction(JT) == []
    assert induced_monad(JT).tables() == M.tables()


def test_em_category_of_twisted_group_monad():
    M = twisted_group_monad()
    assert check_monad(M) == []
    BT, JT = em_category(M)
    assert len(BT.objects) == 1
    assert check_adjunction(JT) == []
    assert induced_monad(JT).tables() == M.tables()


def test_unit_law_failure_reported():
    B = group_category(2)
    T = identity_functor(B)
    bad = Monad(T, NatTransformation(identity_functor(B), T, {"*": "g0"}),
                NatTransformation(compose_functors(T, T), T, {"*": "g1"}))
    problems = check_monad(bad)
    assert any("unit" in p for p in problems)
    with pytest.raises(InvalidStructure):
        em_category(bad)


def test_identity_monad_and_adjunction():
    B = commutative_square()
    assert check_monad(identity_monad(B)) == []
    assert check_adjunction(identity_adjunction(B)) == []
    BT, _ = em_category(identity_monad(B))
    assert len(BT.objects) == len(B.objects)


def test_interchange_law_on_posets():
    A = ordinal(2)
    consts = [monotone_functor(A, A, {x: c for x in A.objects}) for c in range(3)]
    ident = identity_functor(A)
    F, G, H = consts[0], ident, consts[2]
    alpha, beta = poset_nat(F, G), poset_nat(G, H)
    gamma, delta = poset_nat(F, G), poset_nat(G, H)
    lhs = horizontal(vertical(delta, gamma), vertical(beta, alpha))
    rhs = vertical(horizontal(delta, beta), horizontal(gamma, alpha))
    assert lhs.components == rhs.components
    assert whisker_left(alpha, ident).components == alpha.components
    assert whisker_right(ident, alpha).components == alpha.components


def test_invalid_category_detected():
    A = poset_category((0, 1), lambda a, b: a <= b)
    A.comp[((0, 1), (0, 0))] = (1, 1)
    assert A.violations()


def test_nerve_of_simplex_category_matches_standard_simplex():
    from hocoh.simplicial import find_isomorphism

    assert find_isomorphism(nerve(ordinal(3), 3), standard_simplex(3)) is not None
