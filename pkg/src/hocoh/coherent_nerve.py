"""Homotopy coherent nerve of a simplicial category and the realization/nerve transposes.

An ``n``-simplex of the nerve is a simplicial functor out of the realization
of ``Δⁿ``. Since that realization is a computad, such a functor is an object
tuple plus a value on every nondegenerate atomic arrow, subject to face
constraints that only involve the previous level; the enumeration below runs
level by level through those constraints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .categories import FinCategory, nerve
from .enriched import (
    SimplicialCategory,
    SimplicialFunctor,
    atomic_arrows,
    factorizations,
)
from .errors import DimBoundExceeded, EnumerationBudgetExceeded, TruncationError
from .realization import NecklaceArrow, Realization, normalize_necklace, realize
from .simplicial import (
    DEFAULT_BUDGET,
    CanonicalSimplex,
    FiniteSimplicialSet,
    Operator,
    SimplicialMap,
    codegeneracy,
    coface,
    enumerate_maps,
    from_model,
    horn,
    horn_report,
    is_kan,
    mapping_complex,
    nd,
    standard_simplex,
    sort_key,
)


@lru_cache(maxsize=None)
def simplex_realization(n: int) -> Realization:
    """Realization of ``Δⁿ`` with every width it can have.

    Levels go one past the last nondegenerate one so that degenerate arrows
    produced by codegeneracies of ``Δⁿ`` stay inside the enumerated hom-sets.
    """
    return realize(standard_simplex(n), n, max(n, 1))


@lru_cache(maxsize=None)
def _simplex(n: int, bound: int) -> FiniteSimplicialSet:
    return standard_simplex(n, bound)


@lru_cache(maxsize=None)
def atomic_necklaces(n: int) -> tuple:
    """Nondegenerate atomic arrows of the realization of ``Δⁿ``, by level then bead."""
    R = simplex_realization(n)
    out = []
    for x in R.objects:
        for y in R.objects:
            H = R.hom(x, y)
            for m in range(R.dim_bound + 1):
                out.extend(a for a in H.nondegenerate(m) if a.is_atomic())
    out.sort(key=lambda a: (a.level, a.width, a.beads))
    return tuple(out)


def split_necklace(a: NecklaceArrow) -> list[NecklaceArrow]:
    """Single-bead pieces of a necklace in path order (chains restricted, possibly non-strict)."""
    out = []
    joints = a.joints()
    for b, k, lo, hi in zip(a.beads, a.lengths, joints, joints[1:]):
        levels = tuple(tuple(p - lo for p in T if lo <= p <= hi) for T in a.levels)
        out.append(NecklaceArrow(None, None, (b,), (k,), levels))
    return out


def _bead_ends(X: FiniteSimplicialSet, b, k) -> tuple:
    s = nd(b, k)
    return X.vertex(s, 0), X.vertex(s, k)


@dataclass(frozen=True)
class CoherentSimplex:
    """Object tuple plus a value for each atomic arrow of the realization of ``Δⁿ``."""

    objects: tuple
    values: tuple  # aligned with atomic_necklaces(n)

    @property
    def dim(self) -> int:
        return len(self.objects) - 1

    def __repr__(self):
        return f"Coh{self.objects}"


class CoherentNerve:
    """The homotopy coherent nerve of ``S`` truncated at ``d``."""

    def __init__(self, S: SimplicialCategory, d: int, budget: int = DEFAULT_BUDGET):
        if d >= 2 and S.dim_bound < d - 1:
            raise DimBoundExceeded(f"hom-sets must be bounded at least at {d - 1}")
        self.S = S
        self.d = d
        self.budget = budget
        self._index: dict = {}
        levels = [self._enumerate(n) for n in range(d + 1)]
        self.sset = from_model(d, levels, self._face, self._degeneracy, name=f"N({S.name})")
        self.sset.meta["coherent"] = self

    # -- evaluation -----------------------------------------------------------

    def _candidates(self, x, y, m: int, faces: tuple | None):
        key = (x, y, m)
        H = self.S.hom(x, y)
        if m == 0:
            return H.all_simplices(0)
        table = self._index.get(key)
        if table is None:
            table = {}
            for s in H.all_simplices(m):
                table.setdefault(H.simplex_faces(s), []).append(s)
            self._index[key] = table
        return table.get(faces, ())

    def evaluate(self, sigma: CoherentSimplex, a: NecklaceArrow) -> CanonicalSimplex:
        """Value of the functor ``sigma`` on any necklace model of the realization of ``Δⁿ``."""
        n = sigma.dim
        R = simplex_realization(n)
        atoms = atomic_necklaces(n)
        where = {b: i for i, b in enumerate(atoms)}
        obj = sigma.objects
        m = a.level
        x = a.src[0]
        if not a.beads:
            return self.S.identity(obj[x], m)
        out = None
        cur = x
        for p in split_necklace(a):
            lo, hi = p.beads[0][0], p.beads[0][-1]
            piece = NecklaceArrow((lo,), (hi,), p.beads, p.lengths, p.levels)
            c = R.hom((lo,), (hi,)).canon_of[piece]
            v = self.S.hom(obj[lo], obj[hi]).act(Operator(c.epi, c.base_dim), sigma.values[where[c.base]])
            out = v if out is None else self.S.compose(obj[x], obj[cur], obj[hi], v, out)
            cur = hi
        return out

    def _enumerate(self, n: int) -> list[CoherentSimplex]:
        S = self.S
        atoms = atomic_necklaces(n)
        R = simplex_realization(n)
        by_level: dict = {}
        for i, a in enumerate(atoms):
            by_level.setdefault(a.level, []).append(i)
        out = []
        steps = [0]
        for objs in itertools.product(S.objects, repeat=n + 1):
            values: list = [None] * len(atoms)

            def rec(level):
                if level not in by_level:
                    out.append(CoherentSimplex(objs, tuple(values)))
                    return
                idxs = by_level[level]
                partial = CoherentSimplex(objs, tuple(values))
                choices = []
                for i in idxs:
                    a = atoms[i]
                    H = R.hom(a.src, a.tgt)
                    x, y = objs[a.src[0]], objs[a.tgt[0]]
                    if level == 0:
                        faces = None
                    else:
                        faces = tuple(self.evaluate(partial, H.model_face(l, a)) for l in range(level + 1))
                    cands = self._candidates(x, y, level, faces)
                    if not cands:
                        return
                    choices.append(cands)
                for pick in itertools.product(*choices):
                    steps[0] += 1
                    if steps[0] > self.budget:
                        raise EnumerationBudgetExceeded(f"coherent nerve enumeration exceeded {self.budget} steps")
                    for i, v in zip(idxs, pick):
                        values[i] = v
                    rec(level + 1)
                for i in idxs:
                    values[i] = None

            rec(0)
        return out

    # -- simplicial structure --------------------------------------------------

    def _pull(self, sigma: CoherentSimplex, op: Operator) -> CoherentSimplex:
        """Precompose with the realization of ``Δ(op): Δ^src -> Δ^tgt``."""
        n = op.source
        Xt = _simplex(op.target, max(op.source, op.target))
        objs = tuple(sigma.objects[v] for v in op.values)
        values = []
        for a in atomic_necklaces(n):
            bead = a.beads[0]
            top = nd(tuple(range(op.target + 1)), op.target)
            image = Xt.act(Operator(tuple(op.values[v] for v in bead), op.target), top)
            b = normalize_necklace(Xt, (op.values[bead[0]],), (op.values[bead[-1]],), [image], a.chain())
            values.append(self.evaluate(sigma, b))
        return CoherentSimplex(objs, tuple(values))

    def _face(self, i: int, sigma: CoherentSimplex) -> CoherentSimplex:
        return self._pull(sigma, coface(sigma.dim, i))

    def _degeneracy(self, i: int, sigma: CoherentSimplex) -> CoherentSimplex:
        return self._pull(sigma, codegeneracy(sigma.dim, i))

    def model(self, c: CanonicalSimplex) -> CoherentSimplex:
        """Materialize a canonical simplex of the nerve as a coherent simplex."""
        sigma = c.base
        for j in range(c.dim):
            if c.epi[j] == c.epi[j + 1]:
                sigma = self._degeneracy(j, sigma)
        return sigma


def hc_nerve(S: SimplicialCategory, d: int, budget: int = DEFAULT_BUDGET) -> FiniteSimplicialSet:
    return CoherentNerve(S, d, budget).sset


def _coherent(N: FiniteSimplicialSet) -> CoherentNerve:
    return N.meta["coherent"]


# ---------------------------------------------------------------------------
# Transposes


def transpose_to_map(F: SimplicialFunctor, X: FiniteSimplicialSet, N: FiniteSimplicialSet) -> SimplicialMap:
    """A functor out of the realization of ``X`` as a map ``X -> N`` into the coherent nerve."""
    C: Realization = F.source
    assignment = {}
    for m in range(min(X.dim_bound, N.dim_bound) + 1):
        for s in X.nondegenerate(m):
            sigma_s = nd(s, m)
            objs = tuple(F.obj[X.vertex(sigma_s, i)] for i in range(m + 1))
            values = []
            for a in atomic_necklaces(m):
                bead = a.beads[0]
                piece = X.act(Operator(bead, m), sigma_s) if m else sigma_s
                src, tgt = X.vertex(sigma_s, bead[0]), X.vertex(sigma_s, bead[-1])
                b = normalize_necklace(X, src, tgt, [piece], a.chain())
                values.append(F(src, tgt, C.canonical(src, tgt, b)))
            model = CoherentSimplex(objs, tuple(values))
            assignment[s] = N.canon_of[model]
    return SimplicialMap(X, N, assignment)


def transpose_to_functor(f: SimplicialMap, C: Realization) -> SimplicialFunctor:
    """A map ``X -> N`` into the coherent nerve as a functor out of the realization ``C`` of ``X``."""
    X = C.sset
    N = f.target
    data = _coherent(N)
    S = data.S
    obj = {v: data.model(f(nd(v, 0))).objects[0] for v in X.vertices()}

    def arrow(x, y, c: CanonicalSimplex) -> CanonicalSimplex:
        a = c.base  # nondegenerate necklace model of level c.base_dim
        m = a.level
        if not a.beads:
            out = S.identity(obj[x], m)
        else:
            out = None
            cur = x
            for piece in split_necklace(a):
                b, k = piece.beads[0], piece.lengths[0]
                lo, hi = _bead_ends(X, b, k)
                sigma = data.model(f(nd(b, k)))
                local = NecklaceArrow((0,), (k,), (tuple(range(k + 1)),), (k,), piece.levels)
                v = data.evaluate(sigma, local)
                out = v if out is None else S.compose(obj[x], obj[cur], obj[hi], v, out)
                cur = hi
        return S.hom(obj[x], obj[y]).act(Operator(c.epi, c.base_dim), out)

    return SimplicialFunctor(C, S, obj, arrow)


def validate_simplicial_functor(F: SimplicialFunctor, d: int | None = None) -> list[str]:
    return F.violations(d)


def functor_key(F: SimplicialFunctor, levels: int | None = None) -> tuple:
    """Hashable summary of a functor by its values on every arrow."""
    C = F.source
    d = C.dim_bound if levels is None else levels
    vals = []
    for x in C.objects:
        for y in C.objects:
            for m in range(d + 1):
                for a in C.hom(x, y).nondegenerate(m):
                    vals.append(((x, y, a), F(x, y, nd(a, m))))
    return (tuple(sorted(F.obj.items(), key=sort_key)), tuple(vals))


def enumerate_functors_from_computad(C: SimplicialCategory, S: SimplicialCategory,
                                     d: int | None = None, budget: int = DEFAULT_BUDGET):
    """All simplicial functors ``C -> S`` for a computad ``C``, via generic atomic factorization.

    Independent of the necklace machinery: atomics come from
    :func:`hocoh.enriched.atomic_arrows` and other arrows are evaluated
    through :func:`hocoh.enriched.factorizations`. Each candidate is checked
    with :meth:`SimplicialFunctor.violations`.
    """
    d = min(C.dim_bound, S.dim_bound) if d is None else d
    atoms = []
    for m in range(d + 1):
        atoms.extend(sorted(((x, y, c) for (x, y, c) in atomic_arrows(C, m) if not c.is_degenerate()),
                            key=sort_key))
    steps = 0
    for objs in itertools.product(S.objects, repeat=len(C.objects)):
        obj = dict(zip(C.objects, objs))
        choices = [S.arrows(obj[x], obj[y], c.dim) for (x, y, c) in atoms]
        for pick in itertools.product(*choices):
            steps += 1
            if steps > budget:
                raise EnumerationBudgetExceeded("functor enumeration exceeded its budget")
            value = dict(zip(atoms, pick))
            F = _functor_from_atomic(C, S, obj, value)
            try:
                if not F.violations(d):
                    yield F
            except (KeyError, TruncationError):
                continue


def _functor_from_atomic(C, S, obj, value) -> SimplicialFunctor:
    def arrow(x, y, c):
        if C.is_identity(x, y, c):
            return S.identity(obj[x], c.dim)
        base = nd(c.base, c.base_dim)
        path = factorizations(C, x, y, base, limit=1)[0]
        out = None
        for (p, q, t) in path:
            v = value[(p, q, t)] if not t.is_degenerate() else \
                S.hom(obj[p], obj[q]).act(Operator(t.epi, t.base_dim), value[(p, q, nd(t.base, t.base_dim))])
            out = v if out is None else S.compose(obj[x], obj[p], obj[q], v, out)
        return S.hom(obj[x], obj[y]).act(Operator(c.epi, c.base_dim), out)

    return SimplicialFunctor(C, S, obj, arrow)


@dataclass
class TransposeReport:
    maps: int = 0  # simplicial maps X -> N(S)
    functors: int = 0  # simplicial functors C(X) -> S, enumerated independently
    invalid_transposes: int = 0
    map_round_trip_failures: int = 0
    functor_round_trip_failures: int = 0

    @property
    def ok(self) -> bool:
        return (self.maps == self.functors and not self.invalid_transposes
                and not self.map_round_trip_failures and not self.functor_round_trip_failures)


def check_transposes(X: FiniteSimplicialSet, S: SimplicialCategory, width_bound: int = 4,
                     budget: int = DEFAULT_BUDGET) -> TransposeReport:
    """Count both sides of the realization/nerve adjunction and round-trip every element.

    Maps into the nerve come from :func:`enumerate_maps`; functors out of the
    realization come from :func:`enumerate_functors_from_computad`, which
    never consults the nerve.
    """
    d = X.dim_bound
    if S.dim_bound < d:
        raise DimBoundExceeded(f"S must be bounded at least at {d}")
    N = hc_nerve(S, d, budget)
    C = realize(X, d, width_bound)
    report = TransposeReport()
    functors = list(enumerate_functors_from_computad(C, S, d, budget))
    report.functors = len(functors)
    for f in enumerate_maps(X, N, budget=budget):
        report.maps += 1
        F = transpose_to_functor(f, C)
        if F.violations(d):
            report.invalid_transposes += 1
        elif transpose_to_map(F, X, N) != f:
            report.map_round_trip_failures += 1
    for F in functors:
        G = transpose_to_functor(transpose_to_map(F, X, N), C)
        if functor_key(G) != functor_key(F):
            report.functor_round_trip_failures += 1
    return report


# ---------------------------------------------------------------------------
# Coh(A, S) and the quasi-category check


def coh_complex(A: FinCategory, S: SimplicialCategory, d: int, budget: int = DEFAULT_BUDGET) -> FiniteSimplicialSet:
    """``Map(N A, 𝔑 S)`` truncated at ``d``; ``A`` must have a finite nerve."""
    NA = nerve(A, max(len(A.objects), 1))
    if not NA.meta.get("complete"):
        raise DimBoundExceeded("the nerve of A must be finite")
    p = NA.top_dim()
    N = hc_nerve(S, p + d, budget)
    return mapping_complex(NA, N, d, budget)


@dataclass
class LiftingProblem:
    n: int
    k: int
    objects: tuple
    fillers: int  # horn fillers in the nerve
    extensions: int  # extensions of the cubical horn map to the cube


@dataclass
class QuasiReport:
    hom_kan: dict = field(default_factory=dict)
    horn: object = None
    lifting: list = field(default_factory=list)

    @property
    def precondition_ok(self) -> bool:
        return all(self.hom_kan.values())

    @property
    def ok(self) -> bool:
        return self.horn is not None and self.horn.verdict

    @property
    def reduction_agrees(self) -> bool:
        return all(p.fillers == p.extensions for p in self.lifting)

    def summary(self) -> dict:
        return {
            "hom_kan": {f"{x}->{y}": v for (x, y), v in sorted(self.hom_kan.items(), key=sort_key)},
            "precondition": self.precondition_ok,
            "quasi_category": self.ok if self.horn is not None else None,
            "horns": self.horn.summary() if self.horn is not None else None,
            "lifting_problems": [
                {"n": p.n, "k": p.k, "objects": [str(o) for o in p.objects],
                 "fillers": p.fillers, "cube_extensions": p.extensions}
                for p in self.lifting
            ],
            "reduction_agrees": self.reduction_agrees,
        }


def verify_nerve_quasi(S: SimplicialCategory, d: int, kan_dim: int | None = None,
                       per_horn: int | None = 1, budget: int = DEFAULT_BUDGET) -> QuasiReport:
    """Horn-filling check of the coherent nerve, with the cube reduction for sample horns.

    ``per_horn`` caps the number of horns of each shape whose cubical
    lifting problem is solved; ``None`` solves one for every inner horn.

    Hom-sets are tested for the Kan condition first; a failure there is a
    precondition failure and stops the check.
    """
    report = QuasiReport()
    kd = min(S.dim_bound, max(d - 1, 1)) if kan_dim is None else kan_dim
    for x in S.objects:
        for y in S.objects:
            H = S.hom(x, y)
            report.hom_kan[(x, y)] = is_kan(H, min(kd, H.dim_bound), budget=budget).verdict
    if not report.precondition_ok:
        return report
    cn = CoherentNerve(S, d, budget)
    N = cn.sset
    report.horn = horn_report(N, d, inner=True, budget=budget)
    for n in range(2, d + 1):
        R = simplex_realization(n)
        H0n = R.hom((0,), (n,))
        for k in range(1, n):
            Hk = horn(n, k)
            RH = realize(Hk, n - 1, n)
            for count, h in enumerate(enumerate_maps(Hk, N, budget=budget)):
                if per_horn is not None and count >= per_horn:
                    break
                F = transpose_to_functor(h, RH)
                objs = tuple(F.obj[(i,)] for i in range(n + 1))
                target = S.hom(objs[0], objs[n])
                fixed = {}
                sub = RH.hom((0,), (n,))
                for m in range(sub.dim_bound + 1):
                    for a in sub.nondegenerate(m):
                        fixed[a] = F((0,), (n,), nd(a, m))
                ext = sum(1 for _ in enumerate_maps(H0n, target, fixed=fixed, budget=budget))
                top = tuple(range(n + 1))
                fillers = sum(
                    1 for y in N.all_simplices(n)
                    if all(N.face(i, y) == h(top[:i] + top[i + 1:]) for i in range(n + 1) if i != k)
                )
                report.lifting.append(LiftingProblem(n, k, objs, fillers, ext))
    return report
