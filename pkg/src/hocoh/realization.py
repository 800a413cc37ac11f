"""Homotopy coherent realization of a finite simplicial set via necklaces.

An ``n``-arrow from ``x`` to ``y`` is a necklace: nondegenerate beads of
dimension at least one joined head to tail, with ``K`` total vertex
positions ``0..K`` and a chain ``{0..K} = C0 ⊇ C1 ⊇ ... ⊇ Cn`` whose
coarsest member is exactly the set of joints together with ``0`` and ``K``.
Only ``C1..Cn`` are stored, coarsest last, mirroring
:class:`hocoh.resolution.ResolutionArrow`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .categories import FinCategory, nerve, nerve_canonical, poset_category
from .enriched import SimplicialCategory, SimplicialFunctor
from .errors import BadIndex, DomainMismatch
from .resolution import ResolutionArrow, Resolution, atomic_split, build_resolution
from .simplicial import (
    CanonicalSimplex,
    FiniteSimplicialSet,
    Operator,
    SimplicialMap,
    coface,
    codegeneracy,
    nd,
    sort_key,
    standard_simplex,
)


@dataclass(frozen=True)
class NecklaceArrow:
    src: Hashable
    tgt: Hashable
    beads: tuple  # nondegenerate simplex ids
    lengths: tuple  # bead dimensions
    levels: tuple  # C1 ⊇ ... ⊇ Cn as sorted position tuples

    @property
    def level(self) -> int:
        return len(self.levels)

    @property
    def width(self) -> int:
        """Total number of vertex positions minus one."""
        return sum(self.lengths)

    def joints(self) -> tuple:
        return tuple(itertools.accumulate(self.lengths, initial=0))

    def chain(self) -> tuple:
        return (tuple(range(self.width + 1)),) + self.levels

    def is_identity(self) -> bool:
        return not self.beads

    def is_atomic(self) -> bool:
        return len(self.beads) == 1

    def components(self) -> list[dict]:
        """Per-bead strict flag (finest first) together with the epi recording repeats."""
        out = []
        for b, (lo, hi) in zip(self.beads, itertools.pairwise(self.joints())):
            sets = [tuple(p - lo for p in T if lo <= p <= hi) for T in self.chain()]
            flag, epi = [], []
            for S in sets:
                if not flag or flag[-1] != S:
                    flag.append(S)
                epi.append(len(flag) - 1)
            out.append({"bead": b, "flag": [list(S) for S in flag], "epi": epi})
        return out

    def __repr__(self):
        body = "".join(f"<{b}>" for b in self.beads) or f"id_{self.src}"
        lv = "".join("{" + ",".join(map(str, T)) + "}" for T in self.levels)
        return f"[{body}|{lv}]"

    def to_json(self) -> dict:
        return {"src": self.src, "tgt": self.tgt, "level": self.level, "components": self.components()}


def identity_necklace(x, n: int) -> NecklaceArrow:
    return NecklaceArrow(x, x, (), (), ((0,),) * n)


def normalize_necklace(X: FiniteSimplicialSet, src, tgt, pieces: Sequence[CanonicalSimplex],
                       chain: Sequence[Sequence[int]]) -> NecklaceArrow:
    """Normal form of possibly degenerate pieces under a chain (finest first).

    ``chain[0]`` selects the surviving positions, ``chain[-1]`` must contain
    every joint of ``pieces``; the pieces are restricted, split at
    ``chain[-1]``, reduced through their EZ decomposition, and vertex pieces
    are dropped.
    """
    offsets = list(itertools.accumulate((p.dim for p in pieces), initial=0))
    keep, cuts = set(chain[0]), sorted(chain[-1])
    where: dict[int, int] = {}
    beads, lengths = [], []
    pos = 0
    j = 0
    if cuts:
        where[cuts[0]] = 0
    for a, b in zip(cuts, cuts[1:]):
        while offsets[j + 1] < b:
            j += 1
        lo = offsets[j]
        if a < lo:
            raise DomainMismatch("cut set misses a joint")
        verts = [p for p in range(a, b + 1) if p in keep]
        c = X.act(Operator(tuple(p - lo for p in verts), pieces[j].dim), pieces[j])
        for p, e in zip(verts, c.epi):
            where[p] = pos + e
        if c.base_dim > 0:
            beads.append(c.base)
            lengths.append(c.base_dim)
        pos += c.base_dim
    levels = tuple(tuple(sorted({where[p] for p in T})) for T in chain[1:])
    return NecklaceArrow(src, tgt, tuple(beads), tuple(lengths), levels)


def _pieces(a: NecklaceArrow) -> list[CanonicalSimplex]:
    return [nd(b, k) for b, k in zip(a.beads, a.lengths)]


def neck_act(X: FiniteSimplicialSet, op: Operator, a: NecklaceArrow) -> NecklaceArrow:
    if op.target != a.level:
        raise DomainMismatch("operator target differs from the arrow level")
    c = a.chain()
    return normalize_necklace(X, a.src, a.tgt, _pieces(a), [c[j] for j in op.values])


def neck_face(X: FiniteSimplicialSet, i: int, a: NecklaceArrow) -> NecklaceArrow:
    if a.level == 0 or not 0 <= i <= a.level:
        raise BadIndex(f"face {i} of a level-{a.level} necklace")
    return neck_act(X, coface(a.level, i), a)


def neck_degeneracy(X: FiniteSimplicialSet, i: int, a: NecklaceArrow) -> NecklaceArrow:
    if not 0 <= i <= a.level:
        raise BadIndex(f"degeneracy {i} of a level-{a.level} necklace")
    return neck_act(X, codegeneracy(a.level, i), a)


def neck_compose(g: NecklaceArrow, f: NecklaceArrow) -> NecklaceArrow:
    if g.level != f.level:
        raise DomainMismatch("composition needs equal levels")
    if f.tgt != g.src:
        raise DomainMismatch(f"cannot compose {g!r} after {f!r}")
    k = f.width
    levels = tuple(tuple(sorted(set(Tf) | {p + k for p in Tg})) for Tf, Tg in zip(f.levels, g.levels))
    return NecklaceArrow(f.src, g.tgt, f.beads + g.beads, f.lengths + g.lengths, levels)


def _endpoints(X: FiniteSimplicialSet) -> dict:
    out = {}
    for k in range(1, X.dim_bound + 1):
        for b in X.nondegenerate(k):
            s = nd(b, k)
            out[b] = (X.vertex(s, 0), X.vertex(s, k), k)
    return out


def bead_sequences(X: FiniteSimplicialSet, x, y, width_bound: int, ends: dict | None = None) -> list[tuple]:
    """Head-to-tail sequences of nondegenerate beads from ``x`` to ``y`` of total length ``<= width_bound``."""
    ends = _endpoints(X) if ends is None else ends
    by_start: dict = {}
    for b, (s, t, k) in sorted(ends.items(), key=lambda kv: sort_key(kv[0])):
        by_start.setdefault(s, []).append(b)
    out = []

    def rec(v, seq, used):
        if v == y:
            out.append(tuple(seq))
        for b in by_start.get(v, ()):
            k = ends[b][2]
            if used + k <= width_bound:
                seq.append(b)
                rec(ends[b][1], seq, used + k)
                seq.pop()

    rec(x, [], 0)
    return out


def necklace_arrows(X: FiniteSimplicialSet, x, y, n: int, width_bound: int,
                    ends: dict | None = None) -> list[NecklaceArrow]:
    """All level-``n`` necklaces (degenerate ones included) from ``x`` to ``y``."""
    ends = _endpoints(X) if ends is None else ends
    out = []
    for seq in bead_sequences(X, x, y, width_bound, ends):
        lengths = tuple(ends[b][2] for b in seq)
        joints = set(itertools.accumulate(lengths, initial=0))
        K = sum(lengths)
        free = [p for p in range(K + 1) if p not in joints]
        if free and n == 0:
            continue
        for depth in itertools.product(range(n), repeat=len(free)):
            levels = []
            for i in range(1, n + 1):
                levels.append(tuple(sorted(joints | {p for p, e in zip(free, depth) if e >= i})))
            out.append(NecklaceArrow(x, y, seq, lengths, tuple(levels)))
    return out


class Realization(SimplicialCategory):
    """Necklace model of the homotopy coherent realization.

    ``width_bound`` caps the total bead length of a necklace, a quantity that
    faces and degeneracies never increase.
    """

    kind = "realization"

    def __init__(self, X: FiniteSimplicialSet, dim_bound: int, width_bound: int):
        super().__init__(X.vertices(), dim_bound, name=f"C({X.name})")
        self.sset = X
        self.width_bound = width_bound
        self._ends = _endpoints(X)
        self.truncated = any(
            len(necklace_arrows(X, x, y, 0, width_bound + 1, self._ends))
            != len(necklace_arrows(X, x, y, 0, width_bound, self._ends))
            for x in self.objects for y in self.objects
        ) if X.vertices() else False

    def _hom_model(self, x, y):
        X = self.sset
        levels = [necklace_arrows(X, x, y, m, self.width_bound, self._ends) for m in range(self.dim_bound + 1)]
        return levels, (lambda i, a: neck_face(X, i, a)), (lambda i, a: neck_degeneracy(X, i, a))

    def _compose_model(self, x, y, z, g, f):
        return neck_compose(g, f)

    def _identity_model(self, x, m):
        return identity_necklace(x, m)


def realize(X: FiniteSimplicialSet, d: int, width_bound: int) -> Realization:
    return Realization(X, d, width_bound)


def realize_map(f: SimplicialMap, source: Realization, target: Realization) -> SimplicialFunctor:
    """The simplicial functor induced by a map of simplicial sets."""
    Y = target.sset
    obj = {v: f(nd(v, 0)).base for v in source.objects}

    def arrow(x, y, c):
        a = source.materialize(x, y, c)
        pieces = [f(nd(b, k)) for b, k in zip(a.beads, a.lengths)]
        b = normalize_necklace(Y, obj[x], obj[y], pieces, a.chain())
        return target.canonical(obj[x], obj[y], b)

    return SimplicialFunctor(source, target, obj, arrow)


# ---------------------------------------------------------------------------
# Cubes


def _interval_poset(j: int, k: int) -> FinCategory:
    inner = list(range(j + 1, k))
    elems = [tuple(sorted({j, k} | set(c))) for r in range(len(inner) + 1)
             for c in itertools.combinations(inner, r)]
    elems.sort(key=lambda t: (len(t), t))
    return poset_category(elems, lambda a, b: set(a) <= set(b), name=f"P({j},{k})")


def cube_hom(n: int, j: int, k: int, d: int | None = None) -> FiniteSimplicialSet:
    """Nerve of the inclusion-ordered subsets ``{j, k} ⊆ T ⊆ [j, k]``."""
    if not 0 <= j <= k <= n:
        raise BadIndex(f"no cube for {j}, {k} in [{n}]")
    P = _interval_poset(j, k)
    dim = max(k - j - 1, 0) if d is None else d
    return nerve(P, dim)


def _chain_vertex_sets(X: FiniteSimplicialSet, a: NecklaceArrow) -> list[frozenset]:
    """Vertex sets of ``Δⁿ`` spanned by each member of the chain of a necklace in ``Δⁿ``."""
    verts = []
    for b in a.beads:
        verts.extend(b if not verts else b[1:])
    if not verts:
        verts = [a.src[0]]
    return [frozenset(verts[p] for p in T) for T in a.chain()]


def cube_isomorphism(n: int, j: int, k: int, realization: Realization | None = None,
                     d: int | None = None) -> SimplicialMap:
    """Explicit isomorphism ``realize(Δⁿ).hom(j, k) -> cube_hom(n, j, k)``.

    A chain ``C0 ⊇ ... ⊇ Cm`` goes to the chain of complements
    ``{j, k} ∪ ([j, k] ∖ Ci)``, which increases under inclusion.
    """
    dim = max(k - j - 1, 0) if d is None else d
    R = realization or realize(standard_simplex(n), dim, max(k - j, 1))
    H = R.hom((j,), (k,))
    Q = cube_hom(n, j, k, dim)
    P = Q.meta["category"]
    full = set(range(j, k + 1))

    def comp(S):
        return tuple(sorted({j, k} | (full - S)))

    assignment = {}
    for m in range(dim + 1):
        for x in H.nondegenerate(m):
            sets = [comp(S) for S in _chain_vertex_sets(R.sset, x)]
            string = tuple((a, b) for a, b in zip(sets, sets[1:]))
            assignment[x] = nerve_canonical(P, sets[0], string)
    return SimplicialMap(H, Q, assignment)


def cubical_horn_hom(n: int, k: int, d: int | None = None) -> FiniteSimplicialSet:
    """Subcomplex of ``cube_hom(n, 0, n)`` of chains supported on ``Λⁿₖ``.

    Under :func:`cube_isomorphism` a chain ``T0 ⊆ ... ⊆ Tm`` comes from a
    single bead covering ``[n]`` or its ``k``-th face exactly when
    ``Tm = [0, n]`` and ``T0 ⊆ {0, k, n}``; those chains are removed.
    """
    if n < 1 or not 0 <= k <= n:
        raise BadIndex(f"no horn Λ^{n}_{k}")
    Q = cube_hom(n, 0, n, d)
    P = Q.meta["category"]
    top = tuple(range(n + 1))
    small = {0, k, n}

    def chain_of(x):
        if Q.dim_of(x) == 0:
            return [x]
        return [P.src(x[0])] + [P.tgt(f) for f in x]

    def excluded(x):
        c = chain_of(x)
        return c[-1] == top and set(c[0]) <= small

    levels = [[x for x in Q.nondegenerate(m) if not excluded(x)] for m in range(Q.dim_bound + 1)]
    faces = {x: Q.faces_of(x) for lv in levels[1:] for x in lv}
    out = FiniteSimplicialSet(Q.dim_bound, levels, faces, name=f"cubical-horn({n},{k})")
    out.meta["category"] = P
    return out


# ---------------------------------------------------------------------------
# Comparison with the free resolution


@dataclass
class ComparisonReport:
    levels: int
    arrows: dict = field(default_factory=dict)  # (x, y) -> per-level counts
    mismatches: list = field(default_factory=list)
    witness: dict = field(default_factory=dict)  # (x, y) -> per-level [(resolution arrow, necklace)]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def witness_json(self) -> dict:
        """The isomorphism as dimension-wise bijections of nondegenerate arrows."""
        return {f"{x}->{y}": [[[a.to_json(), b.to_json()] for a, b in level] for level in levels]
                for (x, y), levels in sorted(self.witness.items(), key=sort_key)}

    def summary(self) -> dict:
        return {
            "isomorphic": self.ok,
            "levels_checked": self.levels,
            "arrow_counts": {f"{x}->{y}": c for (x, y), c in sorted(self.arrows.items(), key=sort_key)},
            "mismatches": self.mismatches[:20],
            "mismatch_count": len(self.mismatches),
        }


def resolution_to_necklace(a: ResolutionArrow) -> NecklaceArrow:
    """Bead per atomic piece: each piece's string is a nondegenerate nerve simplex."""
    out = None
    pieces = atomic_split(a)
    if not pieces:
        return identity_necklace(a.src, a.level)
    x = a.src
    for p in pieces:
        bead = NecklaceArrow(None, None, (p.string,), (p.length,), p.levels)
        out = bead if out is None else NecklaceArrow(None, None, out.beads + bead.beads,
                                                     out.lengths + bead.lengths,
                                                     _merge(out, bead))
    return NecklaceArrow(x, a.tgt, out.beads, out.lengths, out.levels)


def _merge(f: NecklaceArrow, g: NecklaceArrow) -> tuple:
    k = f.width
    return tuple(tuple(sorted(set(Tf) | {p + k for p in Tg})) for Tf, Tg in zip(f.levels, g.levels))


def compare_resolution_realization(A: FinCategory, d: int, len_bound: int,
                                   R: Resolution | None = None,
                                   C: Realization | None = None) -> ComparisonReport:
    """Check that bead splitting is an isomorphism of simplicial categories up to the bounds."""
    R = R or build_resolution(A, d, len_bound)
    C = C or realize(nerve(A, max(len_bound, 1)), d, len_bound)
    report = ComparisonReport(d)
    if set(R.objects) != set(C.objects):
        report.mismatches.append("object sets differ")
        return report
    phi = {}
    for x in A.objects:
        for y in A.objects:
            HR, HC = R.hom(x, y), C.hom(x, y)
            counts, pairs = [], []
            for m in range(d + 1):
                src = HR.nondegenerate(m)
                images = []
                for a in src:
                    b = resolution_to_necklace(a)
                    if b not in HC.canon_of:
                        report.mismatches.append(f"{a!r} has no necklace counterpart {b!r}")
                        continue
                    if HC.canon_of[b] != nd(b, m):
                        report.mismatches.append(f"{a!r} maps to the degenerate necklace {b!r}")
                    phi[(x, y, a)] = b
                    images.append(b)
                if len(set(images)) != len(images):
                    report.mismatches.append(f"level {m}, hom({x},{y}): map not injective")
                if set(images) != set(HC.nondegenerate(m)):
                    report.mismatches.append(f"level {m}, hom({x},{y}): map not surjective")
                counts.append(len(src))
                pairs.append([(a, phi[(x, y, a)]) for a in src if (x, y, a) in phi])
            report.arrows[(x, y)] = counts
            report.witness[(x, y)] = pairs

    def image(x, y, c: CanonicalSimplex) -> CanonicalSimplex:
        return C.hom(x, y).canon_of[phi[(x, y, c.base)]] if c.base_dim == c.dim else \
            C.hom(x, y).act(Operator(c.epi, c.base_dim), nd(phi[(x, y, c.base)], c.base_dim))

    F = SimplicialFunctor(R, C, {x: x for x in A.objects}, image)
    if not report.mismatches:
        report.mismatches.extend(F.violations(d))
    report.functor = F
    return report
