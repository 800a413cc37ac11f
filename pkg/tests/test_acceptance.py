"""The ten acceptance criteria, one test each.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
"""

import itertools

import pytest

from hocoh.adj_mnd import (
    F_SQUIGGLE,
    U_SQUIGGLE,
    Adj,
    Mnd,
    Squiggle,
    chain_sum,
    chain_to_squiggle,
    enumerate_squiggles,
    ordinal_chains,
    squiggle_atomic,
    squiggle_compose,
    squiggle_to_chain,
)
from hocoh.categories import (
    check_adjunction,
    check_monad,
    commutative_square,
    em_category,
    find_category_isomorphism,
    homotopy_category,
    induced_monad,
    nerve,
    ordinal,
)
from hocoh.coherent_nerve import check_transposes, hc_nerve, verify_nerve_quasi
from hocoh.corpus import categories, circle, galois_adjunction, galois_posets, simplicial_categories
from hocoh.enriched import ConstantSimplicialCategory, check_simplicial_computad, factorizations
from hocoh.realization import (
    compare_resolution_realization,
    cube_isomorphism,
    cubical_horn_hom,
    realize,
)
from hocoh.resolution import Resolution, contraction_violations
from hocoh.simplicial import (
    CanonicalSimplex,
    boundary,
    check_action,
    check_simplicial_identities,
    epis,
    ez_factor,
    find_isomorphism,
    horn,
    is_quasi_category,
    isomorphism_violations,
    operators,
    standard_simplex,
)

from oracles import strict_subset_chains

KINDS = ("++", "-+", "+-", "--")
CORPUS_SSETS = {"horn21": horn(2, 1), "boundary2": boundary(2), "circle": circle()}


def corpus_sset_list():
    out = dict(CORPUS_SSETS)
    out.update({f"simplex{n}": standard_simplex(n) for n in range(4)})
    return out


@pytest.mark.criterion(1, "cube hom-spaces of realized simplices")
def test_criterion_1_cube_homs():
    for n in range(1, 6):
        f = cube_isomorphism(n, 0, n)
        assert isomorphism_violations(f) == [], n
        assert f.source.counts()[0] == 2 ** (n - 1)
    H = realize(standard_simplex(4), 3, 4).hom((0,), (4,))
    assert len(H.nondegenerate(1)) == strict_subset_chains(3, 1) == 19
    assert len(H.nondegenerate(3)) == strict_subset_chains(3, 3) == 6


@pytest.mark.criterion(2, "resolution of A isomorphic to realization of its nerve")
def test_criterion_2_resolution_vs_realization():
    for name, A in categories().items():
        rep = compare_resolution_realization(A, 2, 4)
        assert rep.ok, (name, rep.summary())
        witness = rep.witness_json()
        assert witness, name


@pytest.mark.criterion(3, "computad suite")
def test_criterion_3_computads():
    for name, A in categories().items():
        assert check_simplicial_computad(Resolution(A, 2, 4)).ok, name
    for name, X in corpus_sset_list().items():
        assert check_simplicial_computad(realize(X, 2, 4)).ok, name
    assert check_simplicial_computad(Adj(2, 3)).ok
    assert check_simplicial_computad(Adj(1, 4)).ok
    assert check_simplicial_computad(Mnd(2, 3)).ok

    S = ConstantSimplicialCategory(commutative_square(), 2)
    rep = check_simplicial_computad(S)
    assert not rep.ok
    diag = CanonicalSimplex(("diag", 0), (0,))
    paths = factorizations(S, "a", "d", diag)
    assert len(paths) == 2 and all(len(p) == 2 for p in paths)
    assert any("2 atomic factorizations" in v for v in rep.summary()["violations"])


@pytest.mark.criterion(4, "coherent nerves are quasi-categories via cubical lifting")
def test_criterion_4_coherent_nerve_quasi():
    for name, S in simplicial_categories(2).items():
        q = verify_nerve_quasi(S, 3, per_horn=None)
        assert q.precondition_ok and q.ok, name
        assert q.reduction_agrees, name
        # exactly one lifting problem per inner horn
        assert len(q.lifting) == len(q.horn.entries), name
    for n in (2, 3):
        for k in range(1, n):
            Q = cubical_horn_hom(n, k, n - 1)
            H = realize(horn(n, k), n - 1, n).hom((0,), (n,))
            assert find_isomorphism(H, Q) is not None, (n, k)


@pytest.mark.criterion(5, "realization/nerve transposes round-trip")
def test_criterion_5_transposes():
    for xname, X in CORPUS_SSETS.items():
        for sname, S in simplicial_categories(2).items():
            rep = check_transposes(X, S)
            assert rep.maps == rep.functors, (xname, sname, rep)
            assert rep.ok, (xname, sname, rep)


@pytest.mark.criterion(6, "nerve facts and homotopy categories")
def test_criterion_6_nerve_facts():
    for name, A in categories().items():
        rep = is_quasi_category(nerve(A, 3), 3)
        assert rep.verdict and rep.unique, name
        B = homotopy_category(nerve(A, 2)).to_category(4)
        assert B is not None and find_category_isomorphism(A, B) is not None, name
    for n in range(4):
        B = homotopy_category(standard_simplex(n)).to_category(n + 1)
        assert find_category_isomorphism(ordinal(n), B) is not None
    P = homotopy_category(horn(2, 1))
    assert len(P.generators) == 2 and P.rules == []
    assert find_category_isomorphism(ordinal(2), P.to_category(4)) is not None
    P = homotopy_category(circle())
    assert len(P.objects) == 1 and len(P.generators) == 1 and P.rules == []
    # a free monoid on one generator: powers of the loop stay distinct
    assert P.equal(("e", "e"), ("e",)) == "no"


@pytest.mark.criterion(7, "Galois monad, Eilenberg-Moore category and triangle identities")
def test_criterion_7_galois():
    J = galois_adjunction()
    assert check_adjunction(J) == []
    M = induced_monad(J)
    assert check_monad(M) == []
    BT, JT = em_category(M)
    assert sorted(b for b, _ in BT.objects) == [0, 2]
    _, A = galois_posets()
    assert find_category_isomorphism(A, BT) is not None
    assert check_adjunction(JT) == []
    assert induced_monad(JT).tables() == M.tables()


@pytest.mark.criterion(8, "squiggle calculus")
def test_criterion_8_squiggles():
    narrow = set()
    for n in range(4):
        for kind in KINDS:
            for s in enumerate_squiggles(n, kind, 6):
                assert chain_to_squiggle(squiggle_to_chain(s)) == s
                narrow.add(s)
    # from the chain side: every chain of sizes <= 4 with a narrow squiggle
    hit = set()
    for n in range(4):
        for kind in KINDS:
            for c in ordinal_chains(kind, n, 4):
                s = chain_to_squiggle(c)
                if s.width <= 6:
                    assert squiggle_to_chain(s) == c
                    hit.add(s)
    assert hit == narrow

    for n in range(4):
        plus = [s for s in narrow if s.level == n and s.kind == "++"]
        for g, f in itertools.product(plus, repeat=2):
            assert squiggle_to_chain(squiggle_compose(g, f)) == chain_sum(
                squiggle_to_chain(g), squiggle_to_chain(f))

    t = squiggle_compose(U_SQUIGGLE, F_SQUIGGLE)
    assert t == Squiggle(1, (0, 1, 0))
    assert squiggle_atomic(t, "mnd") and not squiggle_atomic(t, "adj")


@pytest.mark.criterion(9, "augmentation and extra degeneracy of the resolution")
def test_criterion_9_contraction():
    for name, A in categories().items():
        for x in A.objects:
            for y in A.objects:
                assert contraction_violations(A, x, y, 2, 4) == [], (name, x, y)


def constructed_complexes():
    out = dict(corpus_sset_list())
    for name, A in categories().items():
        out[f"nerve{name}"] = nerve(A, 2)
    out["res[3]"] = Resolution(ordinal(3), 2, 4).hom(0, 3)
    out["real-simplex3"] = realize(standard_simplex(3), 2, 4).hom((0,), (3,))
    out["real-horn31"] = realize(horn(3, 1), 2, 4).hom((0,), (3,))
    out["cube3"] = cube_isomorphism(3, 0, 3).target
    for kind in KINDS:
        x, y = kind[0], kind[1]
        out[f"adj{kind}"] = Adj(2, 2).hom(x, y)
    out["hcnerveBZ2"] = hc_nerve(simplicial_categories(2)["nerveBZ2"], 2)
    out["hcnerve-square"] = hc_nerve(simplicial_categories(2)["constsquare"], 2)
    return out


@pytest.mark.criterion(10, "simplicial identities, action and unique Eilenberg-Zilber factorization")
def test_criterion_10_bedrock():
    for name, X in constructed_complexes().items():
        assert check_simplicial_identities(X) == [], name
        assert check_action(X, 2) == [], name
    for m in range(7):
        for n in range(7):
            pairs = {}
            for k in range(min(m, n) + 1):
                for e in epis(m, k):
                    for mono in itertools.combinations(range(n + 1), k + 1):
                        pairs.setdefault(tuple(mono[v] for v in e), []).append((e, mono))
            for f in operators(m, n):
                e, mono = ez_factor(f)
                assert pairs[f.values] == [(e.values, mono.values)], f
