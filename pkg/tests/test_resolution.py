import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocoh.categories import commutative_square, group_category, ordinal
from hocoh.corpus import categories
from hocoh.enriched import check_simplicial_computad
from hocoh.errors import BadIndex, DomainMismatch
from hocoh.resolution import (
    Resolution,
    ResolutionArrow,
    atomic_split,
    chains,
    contraction_violations,
    res_act,
    res_compose,
    res_degeneracy,
    res_face,
    resolution_arrows,
    strings,
)
from hocoh.simplicial import (
    check_simplicial_identities,
    compose_operators,
    find_isomorphism,
    operators,
    product,
    standard_simplex,
)
from oracles import strict_subset_chains, subset_chains


def test_string_counts_of_ordinal():
    # strings from 0 to n in [n] are compositions of n
    for n in range(1, 5):
        assert len(strings(ordinal(n), 0, n, n)) == 2 ** (n - 1)


def test_chain_counts():
    # interior positions choose a depth 0..n
    assert len(chains(3, 2)) == 3 ** 2
    assert chains(0, 2) == [((0,), (0,))]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hom_of_ordinal_is_a_cube(n):
    R = Resolution(ordinal(n), n - 1, n)
    H = R.hom(0, n)
    for m in range(n):
        assert len(H.nondegenerate(m)) == strict_subset_chains(n - 1, m)
        assert len(H.all_simplices(m)) == subset_chains(n - 1, m)


def test_hom_of_four_is_cube_cubed():
    H = Resolution(ordinal(4), 3, 4).hom(0, 4)
    assert H.counts() == (8, 19, 18, 6)
    I = standard_simplex(1, 3)
    cube = product(I, product(I, I, 3), 3)
    assert find_isomorphism(H, cube) is not None


@pytest.mark.parametrize("name", ["[3]", "square", "BZ2", "omega5"])
def test_resolution_axioms_and_identities(name):
    A = categories()[name]
    R = Resolution(A, 2, 3)
    assert R.violations() == []
    for x in A.objects:
        for y in A.objects:
            assert check_simplicial_identities(R.hom(x, y)) == []


@pytest.mark.parametrize("name", ["[3]", "square", "BZ2", "galois-A"])
def test_resolution_is_a_computad(name):
    rep = check_simplicial_computad(Resolution(categories()[name], 2, 3))
    assert rep.ok, rep.violations[:3]


def test_atomic_arrows_are_single_block():
    R = Resolution(commutative_square(), 1, 2)
    atoms = [a for a in R.hom("a", "d").nondegenerate(1) if a.is_atomic()]
    assert [a.string for a in atoms] == [("f", "g"), ("h", "k")]
    split = atomic_split(ResolutionArrow("a", "d", ("f", "g"), ((0, 2),)))
    assert [p.string for p in split] == [("f", "g")]


def test_face_examples():
    A = ordinal(3)
    a = ResolutionArrow(0, 3, ((0, 1), (1, 2), (2, 3)), ((0, 1, 3),))
    assert res_face(A, 0, a) == ResolutionArrow(0, 3, ((0, 1), (1, 3)), ())
    assert res_face(A, 1, a).string == a.string and res_face(A, 1, a).levels == ()
    with pytest.raises(BadIndex):
        res_face(A, 2, a)


def test_compose_merges_levels():
    f = ResolutionArrow(0, 1, ((0, 1),), ((0, 1),))
    g = ResolutionArrow(1, 2, ((1, 2),), ((0, 1),))
    assert res_compose(g, f) == ResolutionArrow(0, 2, ((0, 1), (1, 2)), ((0, 1, 2),))
    with pytest.raises(DomainMismatch):
        res_compose(f, g)


def test_identity_composites_drop_out():
    A = group_category(2)
    a = ResolutionArrow("*", "*", ("g1", "g1"), ((0, 2),))
    assert res_face(A, 0, a) == ResolutionArrow("*", "*", (), ())


@st.composite
def square_arrow(draw, max_level=3):
    A = commutative_square()
    n = draw(st.integers(0, max_level))
    pool = resolution_arrows(A, "a", "d", n, 2)
    return draw(st.sampled_from(pool))


@given(square_arrow(), st.data())
def test_action_is_functorial(a, data):
    A = commutative_square()
    n = a.level
    m = data.draw(st.integers(0, 3))
    k = data.draw(st.integers(0, 3))
    f = data.draw(st.sampled_from(list(operators(m, n))))
    g = data.draw(st.sampled_from(list(operators(k, m))))
    assert res_act(A, compose_operators(f, g), a) == res_act(A, g, res_act(A, f, a))


@given(square_arrow(2), st.data())
def test_face_of_degeneracy(a, data):
    A = commutative_square()
    j = data.draw(st.integers(0, a.level))
    assert res_face(A, j, res_degeneracy(A, j, a)) == a
    assert res_face(A, j + 1, res_degeneracy(A, j, a)) == a


@given(square_arrow(), st.data())
def test_levels_are_nested(a, data):
    assert a.violations(commutative_square()) == []


@pytest.mark.parametrize("name", sorted(categories()))
def test_contraction(name):
    A = categories()[name]
    for x in A.objects:
        for y in A.objects:
            assert contraction_violations(A, x, y, 2, 4) == []


def test_truncation_flag():
    assert Resolution(group_category(2), 1, 3).truncated
    assert not Resolution(ordinal(3), 1, 3).truncated
