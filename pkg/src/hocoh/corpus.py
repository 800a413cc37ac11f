"""Small named instances used by the tests, the scripts and the bundled JSON files."""

from __future__ import annotations

from .categories import (
    Adjunction,
    FinCategory,
    Monad,
    NatTransformation,
    commutative_square,
    compose_functors,
    group_category,
    identity_functor,
    monotone_functor,
    ordinal,
    poset_category,
    poset_nat,
)
from .enriched import ConstantSimplicialCategory, GroupNerveCategory, SimplicialCategory
from .simplicial import CanonicalSimplex, FiniteSimplicialSet, boundary, horn, standard_simplex


def omega(n: int = 5) -> FinCategory:
    """The ordinal ``ω`` cut off after ``n``."""
    A = ordinal(n)
    A.name = f"omega<={n}"
    return A


def galois_posets() -> tuple[FinCategory, FinCategory]:
    """``B = {0 < 1 < 2}`` and its closed elements ``A = {0 < 2}``."""
    B = ordinal(2)
    A = poset_category((0, 2), lambda a, b: a <= b, name="{0<2}")
    return B, A


def galois_adjunction() -> Adjunction:
    """Closure ``0 -> 0, 1 -> 2, 2 -> 2`` on ``[2]`` split through the closed elements."""
    B, A = galois_posets()
    F = monotone_functor(B, A, {0: 0, 1: 2, 2: 2})
    U = monotone_functor(A, B, {0: 0, 2: 2})
    eta = poset_nat(identity_functor(B), compose_functors(U, F))
    eps = poset_nat(compose_functors(F, U), identity_functor(A))
    return Adjunction(F, U, eta, eps)


def twisted_group_monad() -> Monad:
    """On ``B(Z/2)``: ``T = id`` with unit and multiplication the generator.

    Unlike the poset examples its hom-sets are not thin, so strict-functor
    checks exercise more than a preorder can.
    """
    B = group_category(2)
    T = identity_functor(B)
    eta = NatTransformation(identity_functor(B), T, {"*": "g1"})
    mu = NatTransformation(compose_functors(T, T), T, {"*": "g1"})
    return Monad(T, eta, mu)


def categories() -> dict[str, FinCategory]:
    out = {f"[{n}]": ordinal(n) for n in range(5)}
    out["omega5"] = omega(5)
    out["square"] = commutative_square()
    out["BZ2"] = group_category(2)
    B, A = galois_posets()
    out["galois-B"] = B
    out["galois-A"] = A
    return out


def circle(dim_bound: int = 1) -> FiniteSimplicialSet:
    """``Δ¹/∂Δ¹``: one vertex ``*`` and one loop ``e``."""
    v = CanonicalSimplex("*", (0,))
    X = FiniteSimplicialSet(dim_bound, [["*"], ["e"]], {"e": (v, v)}, name="circle")
    X.meta["complete"] = True
    return X


def simplicial_sets() -> dict[str, FiniteSimplicialSet]:
    out = {"horn21": horn(2, 1), "boundary2": boundary(2), "circle": circle()}
    for n in range(4):
        out[f"simplex{n}"] = standard_simplex(n)
    return out


def simplicial_categories(d: int) -> dict[str, SimplicialCategory]:
    """The group-nerve category and the constant simplicial categories over the corpus."""
    out: dict[str, SimplicialCategory] = {"nerveBZ2": GroupNerveCategory(2, d)}
    for name, A in categories().items():
        out[f"const{name}"] = ConstantSimplicialCategory(A, d)
    return out
