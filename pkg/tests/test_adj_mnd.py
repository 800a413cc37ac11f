import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocoh.adj_mnd import (
    F_SQUIGGLE,
    U_SQUIGGLE,
    Adj,
    Mnd,
    OrdinalChain,
    OrdinalMap,
    Squiggle,
    chain_sum,
    chain_to_squiggle,
    enumerate_squiggles,
    monad_resolution,
    ordinal_chains,
    ordinal_compose,
    ordinal_identity,
    ordinal_maps,
    ordinal_nerve,
    ordinal_sum,
    squiggle_atomic,
    squiggle_compose,
    squiggle_degeneracy,
    squiggle_face,
    squiggle_identity,
    squiggle_to_chain,
    squiggle_validate,
    squiggle_violations,
    strict_adjunction_functor,
    strict_monad_functor,
)
from hocoh.categories import (
    Monad,
    NatTransformation,
    em_category,
    identity_adjunction,
    identity_monad,
    induced_monad,
    ordinal,
)
from hocoh.corpus import galois_adjunction, twisted_group_monad
from hocoh.enriched import atomic_arrows, check_simplicial_computad
from hocoh.errors import DomainMismatch, InvalidSquiggle, InvalidStructure
from hocoh.simplicial import check_simplicial_identities

KINDS = ("++", "-+", "+-", "--")
T_SQUIGGLE = Squiggle(1, (0, 1, 0))


def brute_maps(p, q, kind="++"):
    """Monotone maps by filtering all functions; the kind filter is applied literally."""
    out = []
    for vals in itertools.product(range(q), repeat=p):
        if any(a > b for a, b in zip(vals, vals[1:])):
            continue
        if kind == "-+" and not (p and vals[-1] == q - 1):
            continue
        if kind == "+-" and not (p and vals[0] == 0):
            continue
        out.append(vals)
    return out


def brute_nondegenerate(kind, m, size_bound):
    """Strings of ``m`` non-identity maps in the ordinal category of ``kind``."""
    sizes = range(1, size_bound + 1) if kind in ("-+", "+-") else range(size_bound + 1)
    mk = "++" if kind == "--" else kind

    def rec(obj, left):
        if left == 0:
            return 1
        total = 0
        for o in sizes:
            p, q = (o, obj) if kind == "--" else (obj, o)
            for vals in brute_maps(p, q, mk):
                if p == q and vals == tuple(range(p)):
                    continue
                total += rec(o, left - 1)
        return total

    return sum(rec(o, m) for o in sizes)


# ---------------------------------------------------------------------------
# Ordinals


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5)])
def test_ordinal_map_counts(p, q):
    assert len(ordinal_maps(p, q)) == len(brute_maps(p, q))
    if q:
        assert len(ordinal_maps(p, q)) == comb(p + q - 1, p)
    for kind in ("-+", "+-"):
        assert len(ordinal_maps(p, q, kind)) == len(brute_maps(p, q, kind))


def test_ordinal_map_validation():
    with pytest.raises(InvalidStructure):
        OrdinalMap(2, 2, (1, 0))
    with pytest.raises(InvalidStructure):
        OrdinalMap(1, 1, (1,))
    with pytest.raises(DomainMismatch):
        ordinal_compose(ordinal_identity(2), ordinal_identity(3))


@pytest.mark.parametrize("kind", KINDS)
def test_ordinal_nerve_counts_against_brute_force(kind):
    N = ordinal_nerve(kind, 2, 3)
    assert N.counts() == tuple(brute_nondegenerate(kind, m, 3) for m in range(3))
    assert check_simplicial_identities(N) == []


def test_ordinal_nerve_frozen_counts():
    assert ordinal_nerve("++", 2, 3).counts() == (4, 31, 362)
    assert ordinal_nerve("-+", 2, 3).counts() == (3, 16, 110)
    assert ordinal_nerve("+-", 2, 3).counts() == (3, 16, 110)
    assert ordinal_nerve("--", 2, 3).counts() == (4, 31, 362)


def test_chain_sum_level_mismatch():
    a = ordinal_chains("++", 1, 1)[0]
    b = ordinal_chains("++", 0, 1)[0]
    with pytest.raises(DomainMismatch):
        chain_sum(a, b)


# ---------------------------------------------------------------------------
# Squiggles


def test_generators_and_their_kinds():
    assert F_SQUIGGLE.kind == "+-"
    assert U_SQUIGGLE.kind == "-+"
    assert T_SQUIGGLE.kind == "++"
    for s in (F_SQUIGGLE, U_SQUIGGLE, T_SQUIGGLE):
        assert squiggle_violations(s) == []


@pytest.mark.parametrize("heights", [(0, 0), (0, 1, 1, 0), (0, 2), (0, 1, 0, 1, 0, 1, 2, 1)])
def test_invalid_squiggles_rejected(heights):
    s = Squiggle(1, heights)
    assert squiggle_violations(s)
    with pytest.raises(InvalidSquiggle):
        squiggle_validate(s)


def test_non_undulating_squiggle_rejected():
    # 0 -> 1 -> 2 on three lines: the interior point 1 is not an extremum
    s = Squiggle(2, (0, 1, 2))
    assert squiggle_violations(s)


def test_composite_of_unit_and_counit_generators():
    assert squiggle_compose(U_SQUIGGLE, F_SQUIGGLE) == T_SQUIGGLE
    assert squiggle_compose(F_SQUIGGLE, U_SQUIGGLE) == Squiggle(1, (1, 0, 1))


def test_atomicity_witness_t():
    assert squiggle_atomic(T_SQUIGGLE, "mnd")
    assert not squiggle_atomic(T_SQUIGGLE, "adj")
    assert squiggle_atomic(F_SQUIGGLE, "adj") and squiggle_atomic(U_SQUIGGLE, "adj")


def test_identities_are_not_atomic():
    for obj in "+-":
        assert not squiggle_atomic(squiggle_identity(obj, 1))


def test_squiggle_chain_translation_of_generators():
    c = squiggle_to_chain(T_SQUIGGLE)
    assert c.kind == "++" and c.objects == (1,)
    assert squiggle_to_chain(F_SQUIGGLE).objects == (1,)
    assert chain_to_squiggle(c) == T_SQUIGGLE


@pytest.mark.parametrize("n", range(4))
def test_round_trip_on_all_narrow_squiggles(n):
    for kind in KINDS:
        for s in enumerate_squiggles(n, kind, 6):
            c = squiggle_to_chain(s)
            assert c.kind == kind and c.level == n
            assert chain_to_squiggle(c) == s


def test_round_trip_chain_side_small():
    # every chain whose squiggle is narrow comes from the squiggle enumeration
    seen = {s for n in range(3) for k in KINDS for s in enumerate_squiggles(n, k, 6)}
    hit = set()
    for n in range(3):
        for kind in KINDS:
            for c in ordinal_chains(kind, n, 3):
                s = chain_to_squiggle(c)
                assert squiggle_to_chain(s) == c
                if s.width <= 6:
                    hit.add(s)
    assert hit == {s for s in seen if all(o <= 3 for o in squiggle_to_chain(s).objects)}


@pytest.mark.parametrize("kind", KINDS)
def test_level_zero_squiggles(kind):
    # one zig per ordinal element: width 2k + 1 for [k] in the closed kinds, 2k otherwise
    got = {squiggle_to_chain(s).objects[0]: s.width for s in enumerate_squiggles(0, kind, 6)}
    if kind in ("++", "--"):
        assert got == {k: 2 * k + 1 for k in range(3)}
    else:
        assert got == {k: 2 * k for k in range(1, 4)}


def test_faces_and_degeneracies_match_chains():
    for n in range(1, 3):
        for kind in KINDS:
            for s in enumerate_squiggles(n, kind, 6):
                c = squiggle_to_chain(s)
                for i in range(n + 1):
                    assert squiggle_to_chain(squiggle_face(i, s)) == c.face(i)
                    assert squiggle_to_chain(squiggle_degeneracy(i, s)) == c.degeneracy(i)


def test_composition_is_ordinal_sum():
    for n in range(3):
        sq = [s for s in enumerate_squiggles(n, "++", 5)]
        for g, f in itertools.product(sq, repeat=2):
            assert squiggle_to_chain(squiggle_compose(g, f)) == chain_sum(
                squiggle_to_chain(g), squiggle_to_chain(f))


squiggle_strategy = st.sampled_from(
    [s for n in range(3) for k in KINDS for s in enumerate_squiggles(n, k, 6)])


@given(squiggle_strategy, squiggle_strategy, squiggle_strategy)
def test_composition_associative_and_unital(a, b, c):
    if not (a.level == b.level == c.level and a.src == b.tgt and b.src == c.tgt):
        return
    left = squiggle_compose(squiggle_compose(a, b), c)
    right = squiggle_compose(a, squiggle_compose(b, c))
    assert left == right
    assert squiggle_compose(a, squiggle_identity(a.src, a.level)) == a
    assert squiggle_compose(squiggle_identity(a.tgt, a.level), a) == a


@given(squiggle_strategy)
def test_face_of_composite_is_composite_of_faces(s):
    if s.level == 0:
        return
    for other in enumerate_squiggles(s.level, s.src + "+", 4):
        if other.tgt != s.src:
            continue
        for i in range(s.level + 1):
            assert squiggle_face(i, squiggle_compose(s, other)) == squiggle_compose(
                squiggle_face(i, s), squiggle_face(i, other))


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.data())
def test_ordinal_sum_is_functorial(p, q, r, data):
    f = data.draw(st.sampled_from(ordinal_maps(p, q)))
    g = data.draw(st.sampled_from(ordinal_maps(q, r)))
    f2 = data.draw(st.sampled_from(ordinal_maps(r, p)))
    g2 = data.draw(st.sampled_from(ordinal_maps(p, q)))
    assert ordinal_compose(ordinal_sum(g, g2), ordinal_sum(f, f2)) == ordinal_sum(
        ordinal_compose(g, f), ordinal_compose(g2, f2))


# ---------------------------------------------------------------------------
# The simplicial categories


def test_adj_homs_are_ordinal_nerves():
    A = Adj(2, 3)
    for x in "+-":
        for y in "+-":
            assert A.hom(x, y).counts() == ordinal_nerve(x + y, 2, 3).counts()
            assert check_simplicial_identities(A.hom(x, y)) == []


def test_mnd_hom_and_atoms():
    M = Mnd(2, 3)
    assert M.objects == ("+",)
    assert M.hom("+", "+").counts() == (4, 31, 362)
    # an n-arrow of the monad is atomic exactly when its last object is [1]
    for m in range(3):
        expected = sum(1 for c in ordinal_chains("++", m, 3) if c.objects[-1] == 1)
        assert len(atomic_arrows(M, m)) == expected
    assert [len(atomic_arrows(M, m)) for m in range(3)] == [1, 4, 35]


def test_mnd_is_computad():
    rep = check_simplicial_computad(Mnd(2, 3))
    assert rep.ok, rep.summary()


def test_adj_is_computad():
    rep = check_simplicial_computad(Adj(2, 3))
    assert rep.ok, rep.summary()


def test_adj_is_computad_at_level_one_size_four():
    assert check_simplicial_computad(Adj(1, 4)).ok


# ---------------------------------------------------------------------------
# Strict functors out of Mnd and Adj


def test_galois_strict_adjunction_functor():
    rep = strict_adjunction_functor(galois_adjunction(), 3)
    assert rep.ok, rep.violations[:5]
    assert set(rep.objects) == set(KINDS)


def test_em_and_identity_strict_adjunction_functors():
    M = induced_monad(galois_adjunction())
    _, J = em_category(M)
    assert strict_adjunction_functor(J, 3).ok
    assert strict_adjunction_functor(identity_adjunction(ordinal(2)), 3).ok


@pytest.mark.parametrize("M", [twisted_group_monad(), identity_monad(ordinal(1)),
                               induced_monad(galois_adjunction())], ids=["twisted", "identity", "galois"])
def test_strict_monad_functor(M):
    rep = strict_monad_functor(M, 3)
    assert rep.ok, rep.violations[:5]


def test_strict_monad_functor_rejects_invalid_monad():
    M = twisted_group_monad()
    # identity unit with multiplication g1 breaks the unit law
    bad = Monad(M.T, NatTransformation(M.eta.source, M.T, {"*": "g0"}), M.mu)
    with pytest.raises(InvalidStructure):
        strict_monad_functor(bad, 2)


def test_monad_resolution_cosimplicial_identities():
    M = twisted_group_monad()
    R = monad_resolution(M, 2)
    B = M.category
    # coface 0 of level 0 is the unit
    assert R[("coface", 0, 0)] == M.eta.components
    # s_j d_i = id for i = j, j + 1, componentwise
    for n in range(2):
        for j in range(n + 1):
            for i in (j, j + 1):
                sd = {x: B.compose(R[("codegeneracy", n, j)][x], R[("coface", n + 1, i)][x])
                      for x in B.objects}
                assert all(v == B.identities[x] for x, v in sd.items())


def test_ordinal_chain_faces_compose():
    c = OrdinalChain("++", (2, 1, 1), (OrdinalMap(2, 1, (0, 0)), ordinal_identity(1)))
    assert c.face(1).maps == (OrdinalMap(2, 1, (0, 0)),)
    assert c.degeneracy(0).objects == (2, 2, 1, 1)
