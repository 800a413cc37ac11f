import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocoh.errors import BadIndex, DimBoundExceeded, DomainMismatch
from hocoh.simplicial import (
    CanonicalSimplex,
    Operator,
    boundary,
    check_action,
    check_simplicial_identities,
    coface,
    codegeneracy,
    compose_operators,
    count_maps,
    enumerate_maps,
    epis,
    extend_bound,
    ez_factor,
    find_isomorphism,
    horn,
    is_kan,
    is_quasi_category,
    isomorphism_map,
    mapping_complex,
    nd,
    operators,
    product,
    standard_simplex,
)


@st.composite
def operator(draw, max_dim=6):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return Operator(tuple(vals), n)


@given(operator())
def test_ez_factor_is_epi_then_mono(f):
    e, m = ez_factor(f)
    assert e.is_epi() and m.is_mono()
    assert compose_operators(m, e) == f


def test_ez_factor_unique_by_exhaustive_search():
    # every (epi, mono) pair composing to f must be the one ez_factor returns
    for m in range(5):
        for n in range(5):
            pairs = {}
            for k in range(min(m, n) + 1):
                for e in epis(m, k):
                    for mono in itertools.combinations(range(n + 1), k + 1):
                        f = tuple(mono[v] for v in e)
                        pairs.setdefault(f, []).append((e, mono))
            for f in operators(m, n):
                e, mono = ez_factor(f)
                assert pairs[f.values] == [(e.values, mono.values)]


def test_operator_count_is_binomial():
    # monotone maps [m] -> [n] are multisets of size m+1 from n+1 values
    for m in range(5):
        for n in range(5):
            assert len(list(operators(m, n))) == comb(n + m + 1, m + 1)


def test_operator_validation():
    with pytest.raises(DomainMismatch):
        Operator((1, 0), 1)
    with pytest.raises(DomainMismatch):
        Operator((0, 3), 2)
    with pytest.raises(BadIndex):
        coface(2, 3)


@given(st.integers(2, 5), st.data())
def test_cosimplicial_identities(n, data):
    j = data.draw(st.integers(1, n))
    i = data.draw(st.integers(0, j - 1))
    assert compose_operators(coface(n, j), coface(n - 1, i)) == compose_operators(coface(n, i), coface(n - 1, j - 1))
    k = data.draw(st.integers(0, n - 1))
    assert compose_operators(codegeneracy(n - 1, k), coface(n, k)).is_identity()
    assert compose_operators(codegeneracy(n - 1, k), coface(n, k + 1)).is_identity()


def test_standard_simplex_counts():
    for n in range(5):
        X = standard_simplex(n)
        assert X.counts() == tuple(comb(n + 1, m + 1) for m in range(n + 1))


def test_boundary_and_horn_counts():
    assert boundary(2).counts() == (3, 3)
    assert horn(2, 1).counts() == (3, 2)
    assert horn(3, 1).counts() == (4, 6, 3)


@pytest.mark.parametrize("X", [standard_simplex(2), boundary(3), horn(3, 2), standard_simplex(1, 3)],
                         ids=["simplex2", "boundary3", "horn32", "simplex1-d3"])
def test_simplicial_identities_and_action(X):
    assert check_simplicial_identities(X) == []
    assert check_action(X, 2) == []


def test_all_simplices_counts_every_operator():
    # m-simplices of Δ¹ are monotone maps [m] -> [1]
    X = standard_simplex(1, 4)
    for m in range(5):
        assert len(X.all_simplices(m)) == m + 2


def test_degenerate_face_data_rejected():
    with pytest.raises(DomainMismatch):
        standard_simplex(2).act(Operator((0, 1), 2), nd((0, 1), 1))


def test_map_counts_into_simplex():
    # maps Δ^m -> Δ^n are the monotone maps [m] -> [n]
    for m in range(3):
        for n in range(3):
            assert count_maps(standard_simplex(m), standard_simplex(n, max(m, n))) == comb(n + m + 1, m + 1)


def test_horn_inclusion_extends_uniquely():
    H, D = horn(2, 1), standard_simplex(2)
    assert count_maps(H, D) == comb(5, 3)  # all vertex-monotone assignments agree with Δ² maps
    maps = list(enumerate_maps(H, D))
    assert all(f.violations() == [] for f in maps)


def test_standard_simplex_is_quasi_not_kan():
    assert is_quasi_category(standard_simplex(2), 2).unique
    assert not is_kan(standard_simplex(1, 2), 2).verdict


def test_product_of_intervals():
    P = product(standard_simplex(1), standard_simplex(1), 2)
    assert P.counts() == (4, 5, 2)
    assert check_simplicial_identities(P) == []


def test_find_isomorphism_recovers_relabelling():
    X = standard_simplex(2)
    phi = find_isomorphism(X, X)
    assert phi is not None
    assert isomorphism_map(X, X, phi).violations() == []
    assert find_isomorphism(boundary(2), horn(2, 1)) is None


def test_mapping_complex_vertices_are_maps():
    M = mapping_complex(standard_simplex(1), standard_simplex(1), 1)
    assert M.counts()[0] == 3


def test_extend_bound_needs_completeness():
    X = standard_simplex(1)
    assert extend_bound(X, 3).dim_bound == 3
    from hocoh.categories import group_category, nerve

    with pytest.raises(DimBoundExceeded):
        extend_bound(nerve(group_category(2), 1), 2)


def test_canonical_simplex_shape():
    c = CanonicalSimplex("x", (0, 0, 1))
    assert c.dim == 2 and c.base_dim == 1 and c.is_degenerate()
