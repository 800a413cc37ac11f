"""Finite categories, functors, monads, adjunctions, nerves and homotopy categories.

Convention: a composable string ``f1, ..., fk`` with ``fi: a(i-1) -> ai``
denotes the composite ``fk ∘ ... ∘ f1``. Words of generators are stored in
the same (path) order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Mapping, Sequence

from .errors import BadIndex, InvalidStructure, TruncationError
from .simplicial import CanonicalSimplex, FiniteSimplicialSet, SimplicialMap, nd, sort_key


@dataclass
class FinCategory:
    """A finite category given by a composition table.

    ``comp[(g, f)]`` is ``g ∘ f``; pairs involving identities may be omitted.
    A ``truncated`` category may leave composable pairs undefined, in which
    case :meth:`compose` raises :class:`TruncationError`.
    """

    objects: tuple
    morphisms: dict  # id -> (src, tgt)
    identities: dict  # object -> id
    comp: dict  # (g, f) -> g∘f
    name: str | None = None
    truncated: bool = False

    def __post_init__(self):
        self.objects = tuple(self.objects)
        self._id_set = set(self.identities.values())
        self._homs: dict = {}
        for f, (s, t) in self.morphisms.items():
            self._homs.setdefault((s, t), []).append(f)

    def src(self, f) -> Hashable:
        return self.morphisms[f][0]

    def tgt(self, f) -> Hashable:
        return self.morphisms[f][1]

    def is_identity(self, f) -> bool:
        return f in self._id_set

    def hom(self, x, y) -> list:
        return list(self._homs.get((x, y), ()))

    def non_identities(self) -> list:
        return [f for f in self.morphisms if f not in self._id_set]

    def compose(self, g, f):
        """``g ∘ f``."""
        if self.tgt(f) != self.src(g):
            raise InvalidStructure(f"{g!r} ∘ {f!r} not composable")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        try:
            return self.comp[(g, f)]
        except KeyError:
            if self.truncated:
                raise TruncationError(f"{g!r} ∘ {f!r} exceeds the truncation") from None
            raise InvalidStructure(f"composite {g!r} ∘ {f!r} missing from table") from None

    def compose_path(self, path: Sequence, start=None):
        """Composite of a string in path order; identity at ``start`` when empty."""
        if not path:
            return self.identities[start]
        out = path[0]
        for g in path[1:]:
            out = self.compose(g, out)
        return out

    def violations(self) -> list[str]:
        bad = []
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.morphisms.get(i) != (x, x):
                bad.append(f"identity of {x!r} malformed")
        for (g, f), h in self.comp.items():
            if self.tgt(f) != self.src(g):
                bad.append(f"entry {g!r}∘{f!r} not composable")
            elif self.morphisms[h] != (self.src(f), self.tgt(g)):
                bad.append(f"entry {g!r}∘{f!r} has wrong endpoints")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.tgt(f) != self.src(g):
                    continue
                try:
                    gf = self.compose(g, f)
                except TruncationError:
                    continue
                for h in self.morphisms:
                    if self.src(h) != self.tgt(g):
                        continue
                    try:
                        a = self.compose(h, gf)
                        b = self.compose(self.compose(h, g), f)
                    except TruncationError:
                        continue
                    if a != b:
                        bad.append(f"associativity fails at {h!r},{g!r},{f!r}")
        return bad

    def opposite(self) -> "FinCategory":
        return FinCategory(
            self.objects,
            {f: (t, s) for f, (s, t) in self.morphisms.items()},
            dict(self.identities),
            {(f, g): h for (g, f), h in self.comp.items()},
            name=f"{self.name}^op",
            truncated=self.truncated,
        )


# ---------------------------------------------------------------------------
# Constructors


def poset_category(elements: Sequence, leq, name: str | None = None) -> FinCategory:
    """A poset as a category; the morphism ``x <= y`` has id ``(x, y)``."""
    elements = tuple(elements)
    morphisms = {(x, y): (x, y) for x in elements for y in elements if leq(x, y)}
    comp = {}
    for (y, z) in morphisms:
        for (x, y2) in morphisms:
            if y2 == y:
                comp[((y, z), (x, y))] = (x, z)
    return FinCategory(elements, morphisms, {x: (x, x) for x in elements}, comp, name=name)


def ordinal(n: int) -> FinCategory:
    """The category ``[n] = 0 -> 1 -> ... -> n``."""
    return poset_category(range(n + 1), lambda a, b: a <= b, name=f"[{n}]")


def group_category(order: int, name: str | None = None) -> FinCategory:
    """``B(Z/order)``: one object ``*``, morphisms ``g0`` (identity) ... ``g{order-1}``."""
    ms = {f"g{i}": ("*", "*") for i in range(order)}
    comp = {(f"g{i}", f"g{j}"): f"g{(i + j) % order}" for i in range(order) for j in range(order)}
    return FinCategory(("*",), ms, {"*": "g0"}, comp, name=name or f"BZ{order}")


def commutative_square() -> FinCategory:
    """``a -> b -> d`` and ``a -> c -> d`` with equal composites ``diag``."""
    ms = {
        "1a": ("a", "a"), "1b": ("b", "b"), "1c": ("c", "c"), "1d": ("d", "d"),
        "f": ("a", "b"), "g": ("b", "d"), "h": ("a", "c"), "k": ("c", "d"), "diag": ("a", "d"),
    }
    comp = {("g", "f"): "diag", ("k", "h"): "diag"}
    return FinCategory(("a", "b", "c", "d"), ms, {x: f"1{x}" for x in "abcd"}, comp, name="square")


@dataclass
class ReflexiveGraph:
    nodes: tuple
    edges: dict  # id -> (src, tgt)
    identity: dict  # node -> edge id

    def violations(self) -> list[str]:
        return [f"identity edge of {x!r} malformed" for x in self.nodes
                if self.edges.get(self.identity.get(x)) != (x, x)]

    @classmethod
    def of_category(cls, A: FinCategory) -> "ReflexiveGraph":
        return cls(A.objects, dict(A.morphisms), dict(A.identities))


def free_category(g: ReflexiveGraph, len_bound: int) -> FinCategory:
    """Free category on a reflexive graph, keeping paths of length ``<= len_bound``.

    Morphism ids: ``("id", x)`` for identities and tuples of edge ids (path
    order) otherwise. The result is flagged ``truncated`` when some
    concatenation would exceed the bound.
    """
    if len_bound < 1:
        raise BadIndex("len_bound must be at least 1")
    idents = set(g.identity.values())
    plain = sorted((e for e in g.edges if e not in idents), key=sort_key)
    paths: list[tuple] = [(e,) for e in plain]
    frontier = list(paths)
    truncated = False
    for _ in range(len_bound - 1):
        nxt = []
        for p in frontier:
            for e in plain:
                if g.edges[e][0] == g.edges[p[-1]][1]:
                    nxt.append(p + (e,))
        paths.extend(nxt)
        frontier = nxt
    for p in frontier:
        if any(g.edges[e][0] == g.edges[p[-1]][1] for e in plain):
            truncated = True
            break
    morphisms = {("id", x): (x, x) for x in g.nodes}
    for p in paths:
        morphisms[p] = (g.edges[p[0]][0], g.edges[p[-1]][1])
    comp = {}
    for p in paths:
        for q in paths:
            if g.edges[p[-1]][1] == g.edges[q[0]][0] and len(p) + len(q) <= len_bound:
                comp[(q, p)] = p + q
    return FinCategory(g.nodes, morphisms, {x: ("id", x) for x in g.nodes}, comp,
                       name="free", truncated=truncated)


# ---------------------------------------------------------------------------
# Functors and natural transformations


@dataclass
class Functor:
    source: FinCategory
    target: FinCategory
    obj: dict
    mor: dict

    def __call__(self, f):
        return self.mor[f]

    def violations(self) -> list[str]:
        A, B = self.source, self.target
        bad = []
        for x in A.objects:
            if self.mor.get(A.identities[x]) != B.identities.get(self.obj.get(x)):
                bad.append(f"identity of {x!r} not preserved")
        for f, (s, t) in A.morphisms.items():
            if f not in self.mor:
                bad.append(f"{f!r} unmapped")
                continue
            if B.morphisms.get(self.mor[f]) != (self.obj[s], self.obj[t]):
                bad.append(f"endpoints of {f!r} not preserved")
        if bad:
            return bad
        for f in A.morphisms:
            for g in A.morphisms:
                if A.tgt(f) != A.src(g):
                    continue
                try:
                    gf = A.compose(g, f)
                except TruncationError:
                    continue
                if self.mor[gf] != B.compose(self.mor[g], self.mor[f]):
                    bad.append(f"composite {g!r}∘{f!r} not preserved")
        return bad

    def key(self) -> tuple:
        return (tuple(sorted(self.obj.items(), key=sort_key)),
                tuple(sorted(self.mor.items(), key=sort_key)))

    def __eq__(self, other):
        return isinstance(other, Functor) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def identity_functor(A: FinCategory) -> Functor:
    return Functor(A, A, {x: x for x in A.objects}, {f: f for f in A.morphisms})


def compose_functors(G: Functor, F: Functor) -> Functor:
    return Functor(F.source, G.target, {x: G.obj[F.obj[x]] for x in F.source.objects},
                   {f: G.mor[F.mor[f]] for f in F.source.morphisms})


@dataclass
class NatTransformation:
    source: Functor
    target: Functor
    components: dict

    def __getitem__(self, x):
        return self.components[x]

    def violations(self) -> list[str]:
        F, G = self.source, self.target
        A, B = F.source, F.target
        bad = []
        for x in A.objects:
            c = self.components.get(x)
            if c is None or B.morphisms.get(c) != (F.obj[x], G.obj[x]):
                bad.append(f"component at {x!r} malformed")
        if bad:
            return bad
        for f, (s, t) in A.morphisms.items():
            if B.compose(G.mor[f], self.components[s]) != B.compose(self.components[t], F.mor[f]):
                bad.append(f"naturality fails at {f!r}")
        return bad


def identity_nat(F: Functor) -> NatTransformation:
    B = F.target
    return NatTransformation(F, F, {x: B.identities[F.obj[x]] for x in F.source.objects})


def vertical(beta: NatTransformation, alpha: NatTransformation) -> NatTransformation:
    B = alpha.source.target
    return NatTransformation(alpha.source, beta.target,
                             {x: B.compose(beta[x], alpha[x]) for x in alpha.source.source.objects})


def whisker_left(alpha: NatTransformation, H: Functor) -> NatTransformation:
    """``α H`` for ``H: C -> A`` and ``α: F => G`` with ``F, G: A -> B``."""
    return NatTransformation(compose_functors(alpha.source, H), compose_functors(alpha.target, H),
                             {x: alpha[H.obj[x]] for x in H.source.objects})


def whisker_right(K: Functor, alpha: NatTransformation) -> NatTransformation:
    """``K α`` for ``K: B -> C``."""
    return NatTransformation(compose_functors(K, alpha.source), compose_functors(K, alpha.target),
                             {x: K.mor[alpha[x]] for x in alpha.source.source.objects})


def horizontal(beta: NatTransformation, alpha: NatTransformation) -> NatTransformation:
    """``β * α`` for ``α: F => F'`` (A -> B) and ``β: G => G'`` (B -> C)."""
    C = beta.source.target
    comps = {x: C.compose(beta[alpha.target.obj[x]], beta.source.mor[alpha[x]])
             for x in alpha.source.source.objects}
    return NatTransformation(compose_functors(beta.source, alpha.source),
                             compose_functors(beta.target, alpha.target), comps)


def enumerate_functors(A: FinCategory, B: FinCategory) -> Iterator[Functor]:
    """Brute-force enumeration of all functors ``A -> B`` (small categories only)."""
    objs = list(A.objects)
    gens = [f for f in A.non_identities()]
    for images in itertools.product(B.objects, repeat=len(objs)):
        obj = dict(zip(objs, images))
        choices = [B.hom(obj[A.src(f)], obj[A.tgt(f)]) for f in gens]
        for pick in itertools.product(*choices):
            mor = {A.identities[x]: B.identities[obj[x]] for x in objs}
            mor.update(zip(gens, pick))
            F = Functor(A, B, obj, mor)
            if not F.violations():
                yield F


def enumerate_nats(F: Functor, G: Functor) -> Iterator[NatTransformation]:
    A, B = F.source, F.target
    objs = list(A.objects)
    for pick in itertools.product(*[B.hom(F.obj[x], G.obj[x]) for x in objs]):
        alpha = NatTransformation(F, G, dict(zip(objs, pick)))
        if not alpha.violations():
            yield alpha


def functor_category(A: FinCategory, B: FinCategory) -> FinCategory:
    """``B^A`` with functors as objects and natural transformations as morphisms."""
    functors = list(enumerate_functors(A, B))
    obj_ids = {F.key(): i for i, F in enumerate(functors)}
    morphisms, by_id = {}, {}
    for F in functors:
        for G in functors:
            for alpha in enumerate_nats(F, G):
                mid = (obj_ids[F.key()], obj_ids[G.key()],
                       tuple(alpha[x] for x in A.objects))
                morphisms[mid] = (obj_ids[F.key()], obj_ids[G.key()])
                by_id[mid] = alpha
    identities = {obj_ids[F.key()]: (obj_ids[F.key()], obj_ids[F.key()],
                                     tuple(B.identities[F.obj[x]] for x in A.objects))
                  for F in functors}
    comp = {}
    for (a, b, ca) in morphisms:
        for (b2, c, cb) in morphisms:
            if b2 == b:
                comp[((b, c, cb), (a, b, ca))] = (
                    a, c, tuple(B.compose(y, x) for x, y in zip(ca, cb)))
    out = FinCategory(tuple(range(len(functors))), morphisms, identities, comp,
                      name=f"{B.name}^{A.name}")
    out.functors = functors
    return out


def find_category_isomorphism(A: FinCategory, B: FinCategory) -> Functor | None:
    """Search for an isomorphism of categories (small categories only)."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return None
    a_objs = list(A.objects)
    for perm in itertools.permutations(B.objects):
        obj = dict(zip(a_objs, perm))
        if any(len(A.hom(x, y)) != len(B.hom(obj[x], obj[y])) for x in a_objs for y in a_objs):
            continue
        gens = A.non_identities()
        mor = {A.identities[x]: B.identities[obj[x]] for x in a_objs}
        used = set(mor.values())

        def rec(i):
            if i == len(gens):
                F = Functor(A, B, obj, dict(mor))
                return F if not F.violations() else None
            f = gens[i]
            for g in B.hom(obj[A.src(f)], obj[A.tgt(f)]):
                if g in used or B.is_identity(g):
                    continue
                mor[f] = g
                used.add(g)
                ok = True
                for (h2, h1), h in A.comp.items():
                    if h2 in mor and h1 in mor and h in mor:
                        try:
                            if B.compose(mor[h2], mor[h1]) != mor[h]:
                                ok = False
                                break
                        except TruncationError:
                            ok = False
                            break
                if ok:
                    res = rec(i + 1)
                    if res is not None:
                        return res
                used.discard(g)
                del mor[f]
            return None

        res = rec(0)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# Monads and adjunctions


@dataclass
class Monad:
    T: Functor
    eta: NatTransformation
    mu: NatTransformation

    @property
    def category(self) -> FinCategory:
        return self.T.source

    def tables(self) -> tuple:
        return (self.T.key(), tuple(sorted(self.eta.components.items(), key=sort_key)),
                tuple(sorted(self.mu.components.items(), key=sort_key)))


@dataclass
class Adjunction:
    F: Functor  # B -> A
    U: Functor  # A -> B
    eta: NatTransformation  # id_B => UF
    epsilon: NatTransformation  # FU => id_A


def check_monad(M: Monad) -> list[str]:
    """Failed equations of the monad axioms, componentwise; empty means valid."""
    B = M.category
    bad = [f"T: {v}" for v in M.T.violations()]
    if bad:
        return bad
    bad += [f"eta: {v}" for v in M.eta.violations()]
    bad += [f"mu: {v}" for v in M.mu.violations()]
    if bad:
        return bad
    T, eta, mu = M.T, M.eta, M.mu
    for b in B.objects:
        Tb = T.obj[b]
        lhs = B.compose(mu[b], T.mor[mu[b]])
        rhs = B.compose(mu[b], mu[Tb])
        if lhs != rhs:
            bad.append(f"associativity fails at {b!r}")
        if B.compose(mu[b], T.mor[eta[b]]) != B.identities[Tb]:
            bad.append(f"right unit (μ∘Tη) fails at {b!r}")
        if B.compose(mu[b], eta[Tb]) != B.identities[Tb]:
            bad.append(f"left unit (μ∘ηT) fails at {b!r}")
    return bad


def check_adjunction(J: Adjunction) -> list[str]:
    """Failed triangle identities (and malformed data); empty means valid."""
    bad = [f"F: {v}" for v in J.F.violations()] + [f"U: {v}" for v in J.U.violations()]
    if bad:
        return bad
    bad += [f"eta: {v}" for v in J.eta.violations()] + [f"epsilon: {v}" for v in J.epsilon.violations()]
    if bad:
        return bad
    A, B = J.F.target, J.F.source
    for b in B.objects:
        Fb = J.F.obj[b]
        if A.compose(J.epsilon[Fb], J.F.mor[J.eta[b]]) != A.identities[Fb]:
            bad.append(f"εF∘Fη ≠ id at {b!r}")
    for a in A.objects:
        Ua = J.U.obj[a]
        if B.compose(J.U.mor[J.epsilon[a]], J.eta[Ua]) != B.identities[Ua]:
            bad.append(f"Uε∘ηU ≠ id at {a!r}")
    return bad


def induced_monad(J: Adjunction) -> Monad:
    """``(UF, η, UεF)``."""
    problems = check_adjunction(J)
    if problems:
        raise InvalidStructure("invalid adjunction: " + "; ".join(problems))
    T = compose_functors(J.U, J.F)
    mu = NatTransformation(compose_functors(T, T), T,
                           {b: J.U.mor[J.epsilon[J.F.obj[b]]] for b in J.F.source.objects})
    eta = NatTransformation(identity_functor(J.F.source), T, dict(J.eta.components))
    return Monad(T, eta, mu)


def identity_monad(B: FinCategory) -> Monad:
    I = identity_functor(B)
    return Monad(I, identity_nat(I), identity_nat(I))


def identity_adjunction(B: FinCategory) -> Adjunction:
    I = identity_functor(B)
    return Adjunction(I, I, identity_nat(I), identity_nat(I))


def em_category(M: Monad) -> tuple[FinCategory, Adjunction]:
    """Category of algebras ``(b, β: Tb -> b)`` with the free/forgetful adjunction."""
    problems = check_monad(M)
    if problems:
        raise InvalidStructure("invalid monad: " + "; ".join(problems))
    B, T, eta, mu = M.category, M.T, M.eta, M.mu
    algebras = []
    for b in B.objects:
        for beta in B.hom(T.obj[b], b):
            if B.compose(beta, eta[b]) != B.identities[b]:
                continue
            if B.compose(beta, T.mor[beta]) != B.compose(beta, mu[b]):
                continue
            algebras.append((b, beta))
    morphisms, comp = {}, {}
    for (b, beta) in algebras:
        for (c, gamma) in algebras:
            for h in B.hom(b, c):
                if B.compose(h, beta) == B.compose(gamma, T.mor[h]):
                    morphisms[(h, (b, beta), (c, gamma))] = ((b, beta), (c, gamma))
    for (h, x, y) in morphisms:
        for (k, y2, z) in morphisms:
            if y2 == y:
                comp[((k, y, z), (h, x, y))] = (B.compose(k, h), x, z)
    identities = {a: (B.identities[a[0]], a, a) for a in algebras}
    BT = FinCategory(tuple(algebras), morphisms, identities, comp, name=f"{B.name}^T")
    free_obj = {b: (T.obj[b], mu[b]) for b in B.objects}
    FT = Functor(B, BT, free_obj,
                 {f: (T.mor[f], free_obj[B.src(f)], free_obj[B.tgt(f)]) for f in B.morphisms})
    UT = Functor(BT, B, {a: a[0] for a in algebras}, {m: m[0] for m in morphisms})
    eta_T = NatTransformation(identity_functor(B), compose_functors(UT, FT), dict(eta.components))
    eps_T = NatTransformation(compose_functors(FT, UT), identity_functor(BT),
                              {a: (a[1], free_obj[a[0]], a) for a in algebras})
    return BT, Adjunction(FT, UT, eta_T, eps_T)


def monotone_functor(A: FinCategory, B: FinCategory, obj: Mapping) -> Functor:
    """Functor between poset categories determined by a monotone object map."""
    return Functor(A, B, dict(obj), {(x, y): (obj[x], obj[y]) for (x, y) in A.morphisms})


def poset_nat(F: Functor, G: Functor) -> NatTransformation:
    return NatTransformation(F, G, {x: (F.obj[x], G.obj[x]) for x in F.source.objects})


# ---------------------------------------------------------------------------
# Nerves


def _strip(A: FinCategory, start, string: Sequence) -> CanonicalSimplex:
    """Canonical nerve simplex of a string possibly containing identities."""
    base, epi, idx = [], [0], 0
    for f in string:
        if not A.is_identity(f):
            base.append(f)
            idx += 1
        epi.append(idx)
    return CanonicalSimplex(tuple(base) if base else start, tuple(epi))


def nerve_strings(A: FinCategory, m: int) -> list[tuple]:
    """Composable strings of ``m`` non-identity morphisms whose runs all compose."""
    gens = sorted(A.non_identities(), key=sort_key)
    out = [(f,) for f in gens]
    for _ in range(m - 1):
        out = [s + (g,) for s in out for g in gens if A.src(g) == A.tgt(s[-1])]
    good = []
    for s in out:
        try:
            for i in range(len(s)):
                A.compose_path(s[i:])
            good.append(s)
        except TruncationError:
            pass
    return good


def nerve(A: FinCategory, d: int) -> FiniteSimplicialSet:
    """Nerve truncated at ``d``: vertices are objects, ``m``-simplices strings of ``m`` arrows."""
    levels = [list(A.objects)]
    faces = {}
    for m in range(1, d + 1):
        level = nerve_strings(A, m)
        for s in level:
            fs = []
            for i in range(m + 1):
                if i == 0:
                    fs.append(_strip(A, A.tgt(s[0]), s[1:]))
                elif i == m:
                    fs.append(_strip(A, A.src(s[0]), s[:-1]))
                else:
                    fs.append(_strip(A, A.src(s[0]), s[: i - 1] + (A.compose(s[i], s[i - 1]),) + s[i + 1 :]))
            faces[s] = tuple(fs)
        levels.append(level)
    out = FiniteSimplicialSet(d, levels, faces, name=f"N{A.name or ''}")
    out.meta["category"] = A
    out.meta["complete"] = not nerve_strings(A, d + 1) and not A.truncated
    return out


def nerve_string_of(A: FinCategory, s: CanonicalSimplex) -> tuple:
    """Materialize a canonical nerve simplex as a full string (identities included)."""
    if s.base_dim == 0:
        return tuple(A.identities[s.base] for _ in range(s.dim))
    base = s.base
    out = []
    for j in range(s.dim):
        a, b = s.epi[j], s.epi[j + 1]
        out.append(base[a] if b > a else A.identities[A.src(base[a]) if a < len(base) else A.tgt(base[-1])])
    return tuple(out)


def nerve_canonical(A: FinCategory, start, string: Sequence) -> CanonicalSimplex:
    return _strip(A, start, string)


def functor_to_nerve_map(F: Functor, d: int, NA=None, NB=None):
    """The simplicial map ``N(F): N(A) -> N(B)``."""
    NA = NA or nerve(F.source, d)
    NB = NB or nerve(F.target, d)
    assignment = {}
    for x in NA.ids:
        if NA.dim_of(x) == 0:
            assignment[x] = nd(F.obj[x], 0)
        else:
            assignment[x] = _strip(F.target, F.obj[F.source.src(x[0])], tuple(F.mor[f] for f in x))
    return SimplicialMap(NA, NB, assignment)


# ---------------------------------------------------------------------------
# Presented categories and homotopy categories


@dataclass
class PresentedCategory:
    """A category presented by generators and relations between parallel paths."""

    objects: tuple
    generators: dict  # id -> (src, tgt)
    relations: list  # (lhs word, rhs word)
    name: str | None = None
    _rules: list = field(default=None, repr=False)

    def __post_init__(self):
        self._order = {g: i for i, g in enumerate(sorted(self.generators, key=sort_key))}
        for lhs, rhs, *_ in self.relations:
            if self.endpoints(lhs) != self.endpoints(rhs) and lhs and rhs:
                raise InvalidStructure(f"relation {lhs} = {rhs} is not between parallel paths")

    def endpoints(self, word: Sequence) -> tuple | None:
        if not word:
            return None
        for a, b in zip(word, word[1:]):
            if self.generators[a][1] != self.generators[b][0]:
                raise InvalidStructure(f"word {word} is not composable")
        return (self.generators[word[0]][0], self.generators[word[-1]][1])

    def _greater(self, u: tuple, v: tuple) -> bool:
        if len(u) != len(v):
            return len(u) > len(v)
        return [self._order[g] for g in u] > [self._order[g] for g in v]

    @property
    def rules(self) -> list[tuple[tuple, tuple]]:
        """Relations oriented shortlex-decreasing; trivial ones dropped."""
        if self._rules is None:
            rules = set()
            for lhs, rhs, *_ in self.relations:
                lhs, rhs = tuple(lhs), tuple(rhs)
                if lhs == rhs:
                    continue
                rules.add((lhs, rhs) if self._greater(lhs, rhs) else (rhs, lhs))
            self._rules = sorted(rules, key=sort_key)
        return self._rules

    def reduce(self, word: Sequence, budget: int = 10_000) -> tuple | None:
        """Leftmost-innermost normal form; ``None`` if the budget runs out."""
        w = tuple(word)
        for _ in range(budget):
            for i in range(len(w)):
                hit = None
                for lhs, rhs in self.rules:
                    if w[i : i + len(lhs)] == lhs:
                        hit = (lhs, rhs)
                        break
                if hit:
                    w = w[:i] + hit[1] + w[i + len(hit[0]) :]
                    break
            else:
                return w
        return None

    def is_confluent(self) -> bool:
        """Critical-pair test; with the length-decreasing order this decides confluence."""
        rules = self.rules
        for l1, r1 in rules:
            for l2, r2 in rules:
                # overlaps: a suffix of l1 equals a prefix of l2
                for k in range(1, min(len(l1), len(l2)) + 1):
                    if l1[-k:] == l2[:k] and not (k == len(l1) == len(l2) and l1 == l2 and r1 == r2):
                        a = r1 + l2[k:]
                        b = l1[: len(l1) - k] + r2
                        if self.reduce(a) != self.reduce(b):
                            return False
                # containment
                if len(l2) < len(l1):
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i : i + len(l2)] == l2:
                            a = r1
                            b = l1[:i] + r2 + l1[i + len(l2) :]
                            if self.reduce(a) != self.reduce(b):
                                return False
        return True

    def equal(self, u: Sequence, v: Sequence, budget: int = 20_000, slack: int = 2) -> str:
        """Three-valued word equality: ``"yes"``, ``"no"`` or ``"unknown"``."""
        u, v = tuple(u), tuple(v)
        if u == v:
            return "yes"
        nu, nv = self.reduce(u), self.reduce(v)
        if nu is not None and nu == nv:
            return "yes"
        if nu is not None and nv is not None and self.is_confluent():
            return "no"
        # bounded bidirectional search on the undirected rewriting graph
        limit = max(len(u), len(v)) + slack
        seen = {u: 0, v: 1}
        queue = deque([u, v])
        steps = 0
        both = list(self.rules) + [(r, l) for l, r in self.rules]
        while queue:
            w = queue.popleft()
            side = seen[w]
            for lhs, rhs in both:
                if not lhs:
                    continue
                for i in range(len(w) - len(lhs) + 1):
                    if w[i : i + len(lhs)] != lhs:
                        continue
                    x = w[:i] + rhs + w[i + len(lhs) :]
                    if len(x) > limit:
                        continue
                    steps += 1
                    if steps > budget:
                        return "unknown"
                    if x in seen:
                        if seen[x] != side:
                            return "yes"
                        continue
                    seen[x] = side
                    queue.append(x)
        return "unknown"

    def to_category(self, len_bound: int = 8) -> FinCategory | None:
        """The presented category as a table, when confluent and finite within ``len_bound``."""
        if not self.is_confluent():
            return None
        gens = sorted(self.generators, key=sort_key)
        irreducible = [(g,) for g in gens if self.reduce((g,)) == (g,)]
        words = list(irreducible)
        frontier = irreducible
        for _ in range(len_bound):
            nxt = []
            for w in frontier:
                for g in gens:
                    if self.generators[g][0] == self.generators[w[-1]][1]:
                        x = w + (g,)
                        if self.reduce(x) == x:
                            nxt.append(x)
            if not nxt:
                break
            words.extend(nxt)
            frontier = nxt
        else:
            return None
        morphisms = {("id", x): (x, x) for x in self.objects}
        for w in words:
            morphisms[w] = self.endpoints(w)
        comp = {}
        for f in words:
            for g in words:
                if morphisms[f][1] == morphisms[g][0]:
                    r = self.reduce(f + g)
                    comp[(g, f)] = r if r else ("id", morphisms[f][0])
        return FinCategory(self.objects, morphisms, {x: ("id", x) for x in self.objects}, comp,
                           name=self.name)


def homotopy_category(X: FiniteSimplicialSet) -> PresentedCategory:
    """Generators: nondegenerate edges; one relation ``d1σ = d0σ ∘ d2σ`` per 2-simplex."""
    gens = {}
    for e in X.nondegenerate(1):
        d0, d1 = X.faces_of(e)[0], X.faces_of(e)[1]
        gens[e] = (d1.base, d0.base)

    def word(c: CanonicalSimplex) -> tuple:
        return () if c.is_degenerate() else (c.base,)

    relations = []
    for s in X.nondegenerate(2):
        d0, d1, d2 = X.faces_of(s)
        relations.append((word(d1), word(d2) + word(d0), s))
    return PresentedCategory(tuple(X.vertices()), gens, relations, name=f"Ho({X.name})")
