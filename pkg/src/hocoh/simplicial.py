"""Finite truncated simplicial sets in Eilenberg-Zilber canonical form.

A simplex of a :class:`FiniteSimplicialSet` is always stored as a
:class:`CanonicalSimplex`: a nondegenerate simplex identifier together with a
surjective monotone operator. Degenerate simplices are never stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import BadIndex, DimBoundExceeded, DomainMismatch, EnumerationBudgetExceeded

DEFAULT_BUDGET = 500_000


def sort_key(x) -> str:
    """Deterministic total order on heterogeneous hashable identifiers."""
    return repr(x)


# ---------------------------------------------------------------------------
# The simplex category


@dataclass(frozen=True)
class Operator:
    """A monotone map ``[m] -> [n]`` given by its list of values."""

    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise DomainMismatch("operators have nonempty domain")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise DomainMismatch(f"operator {vals} is not monotone")
        if vals[0] < 0 or vals[-1] > self.target:
            raise DomainMismatch(f"operator {vals} does not land in [{self.target}]")

    @property
    def source(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_epi(self) -> bool:
        return set(self.values) == set(range(self.target + 1))

    def is_mono(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_identity(self) -> bool:
        return self.values == tuple(range(self.target + 1))

    def __repr__(self):
        return f"Operator({list(self.values)}->[{self.target}])"


def compose_operators(g: Operator, f: Operator) -> Operator:
    """Return ``g ∘ f``."""
    if f.target != g.source:
        raise DomainMismatch(f"cannot compose {g} after {f}")
    return Operator(tuple(g.values[v] for v in f.values), g.target)


def identity(n: int) -> Operator:
    return Operator(tuple(range(n + 1)), n)


def coface(n: int, i: int) -> Operator:
    """δ^i : [n-1] -> [n], skipping ``i``."""
    if not 0 <= i <= n or n < 1:
        raise BadIndex(f"no coface δ^{i} into [{n}]")
    return Operator(tuple(v if v < i else v + 1 for v in range(n)), n)


def codegeneracy(n: int, i: int) -> Operator:
    """σ^i : [n+1] -> [n], repeating ``i``."""
    if not 0 <= i <= n:
        raise BadIndex(f"no codegeneracy σ^{i} onto [{n}]")
    return Operator(tuple(v if v <= i else v - 1 for v in range(n + 2)), n)


def ez_factor(f: Operator) -> tuple[Operator, Operator]:
    """Factor ``f`` uniquely as ``mono ∘ epi``; returns ``(epi, mono)``."""
    image = sorted(set(f.values))
    pos = {v: j for j, v in enumerate(image)}
    k = len(image) - 1
    return Operator(tuple(pos[v] for v in f.values), k), Operator(tuple(image), f.target)


def _ez_values(values: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    image = sorted(set(values))
    pos = {v: j for j, v in enumerate(image)}
    return tuple(pos[v] for v in values), tuple(image)


def operators(m: int, n: int) -> Iterator[Operator]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order."""
    for vals in itertools.combinations_with_replacement(range(n + 1), m + 1):
        yield Operator(vals, n)


@lru_cache(maxsize=None)
def epis(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Value tuples of all surjections ``[m] ->> [k]``."""
    if k > m:
        return ()
    out = []
    # choose the k positions where the value steps up
    for steps in itertools.combinations(range(1, m + 1), k):
        vals, cur, s = [], 0, set(steps)
        for i in range(m + 1):
            if i in s:
                cur += 1
            vals.append(cur)
        out.append(tuple(vals))
    return tuple(out)


def monos(k: int, n: int) -> Iterator[Operator]:
    for vals in itertools.combinations(range(n + 1), k + 1):
        yield Operator(vals, n)


# ---------------------------------------------------------------------------
# Simplicial sets


class CanonicalSimplex(NamedTuple):
    """``base · epi``: a nondegenerate simplex degenerated along a surjection."""

    base: Hashable
    epi: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.epi) - 1

    @property
    def base_dim(self) -> int:
        return self.epi[-1]

    def is_degenerate(self) -> bool:
        return self.dim != self.base_dim

    def __repr__(self):
        return f"<{self.base!r}·{list(self.epi)}>"


def nd(base: Hashable, k: int) -> CanonicalSimplex:
    """Canonical simplex of a nondegenerate ``k``-simplex."""
    return CanonicalSimplex(base, tuple(range(k + 1)))


class FiniteSimplicialSet:
    """A simplicial set truncated at ``dim_bound``.

    ``simplices[m]`` lists the nondegenerate ``m``-simplex identifiers and
    ``faces[x]`` gives the ``m+1`` faces of ``x`` as canonical simplices.
    """

    def __init__(
        self,
        dim_bound: int,
        simplices: Sequence[Iterable[Hashable]],
        faces: Mapping[Hashable, Sequence[CanonicalSimplex]],
        name: str | None = None,
        check: bool = True,
    ):
        if len(simplices) > dim_bound + 1:
            raise DimBoundExceeded("simplices listed above dim_bound")
        self.dim_bound = dim_bound
        self.name = name
        self._levels: list[tuple] = [tuple(level) for level in simplices]
        while len(self._levels) < dim_bound + 1:
            self._levels.append(())
        self._dim: dict[Hashable, int] = {}
        for m, level in enumerate(self._levels):
            for x in level:
                if x in self._dim:
                    raise DomainMismatch(f"simplex {x!r} listed twice")
                self._dim[x] = m
        self._faces = {x: tuple(CanonicalSimplex(*c) for c in faces.get(x, ())) for x in self._dim}
        self._face_cache: dict = {}
        self._all_cache: dict = {}
        self.meta: dict = {}
        if check:
            self._check_face_data()

    # -- basic accessors -----------------------------------------------------

    def _check_face_data(self):
        for x, m in self._dim.items():
            fs = self._faces[x]
            if m == 0:
                if fs:
                    raise DomainMismatch(f"vertex {x!r} has faces")
                continue
            if len(fs) != m + 1:
                raise DomainMismatch(f"simplex {x!r} needs {m + 1} faces, got {len(fs)}")
            for c in fs:
                if c.base not in self._dim or self._dim[c.base] != c.base_dim:
                    raise DomainMismatch(f"face {c!r} of {x!r} has unknown base")
                if c.dim != m - 1 or set(c.epi) != set(range(c.base_dim + 1)):
                    raise DomainMismatch(f"face {c!r} of {x!r} is not canonical of dim {m - 1}")
                if any(a > b for a, b in zip(c.epi, c.epi[1:])):
                    raise DomainMismatch(f"face {c!r} of {x!r} has non-monotone operator")

    def nondegenerate(self, m: int) -> tuple:
        if m < 0 or m > self.dim_bound:
            return ()
        return self._levels[m]

    def dim_of(self, x: Hashable) -> int:
        return self._dim[x]

    def __contains__(self, x) -> bool:
        return x in self._dim

    def faces_of(self, x: Hashable) -> tuple[CanonicalSimplex, ...]:
        return self._faces[x]

    @property
    def ids(self) -> list:
        return [x for level in self._levels for x in level]

    def counts(self) -> tuple[int, ...]:
        """Nondegenerate simplex counts, trailing empty dimensions dropped."""
        c = [len(level) for level in self._levels]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return tuple(c)

    def top_dim(self) -> int:
        return len(self.counts()) - 1

    def vertices(self) -> tuple:
        return self._levels[0]

    def vertex(self, s: CanonicalSimplex, i: int) -> Hashable:
        """Identifier of the ``i``-th vertex of ``s``."""
        return self.act(Operator((i,), s.dim), s).base

    def __repr__(self):
        label = self.name or "sSet"
        return f"<{label} d≤{self.dim_bound} counts={self.counts()}>"

    # -- the presheaf action --------------------------------------------------

    def act(self, op: Operator, s: CanonicalSimplex) -> CanonicalSimplex:
        """Canonical form of ``s · op``."""
        if op.target != s.dim:
            raise DomainMismatch(f"operator {op} cannot act on a {s.dim}-simplex")
        if op.source > self.dim_bound:
            raise DimBoundExceeded(f"result of dimension {op.source} exceeds bound {self.dim_bound}")
        return self._act_values(tuple(s.epi[v] for v in op.values), s.base)

    def _act_values(self, values: tuple[int, ...], base: Hashable) -> CanonicalSimplex:
        epi, mono = _ez_values(values)
        c = self._face_along(base, mono)
        return CanonicalSimplex(c.base, tuple(c.epi[v] for v in epi))

    def _face_along(self, base: Hashable, mono: tuple[int, ...]) -> CanonicalSimplex:
        key = (base, mono)
        hit = self._face_cache.get(key)
        if hit is not None:
            return hit
        k = self._dim[base]
        if len(mono) == k + 1:
            res = nd(base, k)
        else:
            present = set(mono)
            i = next(v for v in range(k + 1) if v not in present)
            face = self._faces[base][i]
            rest = tuple(v if v < i else v - 1 for v in mono)
            res = self._act_values(tuple(face.epi[v] for v in rest), face.base)
        self._face_cache[key] = res
        return res

    def face(self, i: int, s: CanonicalSimplex) -> CanonicalSimplex:
        if not 0 <= i <= s.dim or s.dim == 0:
            raise BadIndex(f"no face d_{i} of a {s.dim}-simplex")
        return self.act(coface(s.dim, i), s)

    def degeneracy(self, i: int, s: CanonicalSimplex) -> CanonicalSimplex:
        if not 0 <= i <= s.dim:
            raise BadIndex(f"no degeneracy s_{i} of a {s.dim}-simplex")
        return self.act(codegeneracy(s.dim, i), s)

    def canonical(self, x: Hashable) -> CanonicalSimplex:
        return nd(x, self._dim[x])

    def all_simplices(self, m: int) -> tuple[CanonicalSimplex, ...]:
        """Every ``m``-simplex (degenerate ones included) in canonical form."""
        if m > self.dim_bound:
            raise DimBoundExceeded(f"dimension {m} exceeds bound {self.dim_bound}")
        hit = self._all_cache.get(m)
        if hit is None:
            out = []
            for k in range(min(m, self.dim_bound) + 1):
                for x in self._levels[k]:
                    for e in epis(m, k):
                        out.append(CanonicalSimplex(x, e))
            hit = tuple(out)
            self._all_cache[m] = hit
        return hit

    def simplex_faces(self, s: CanonicalSimplex) -> tuple[CanonicalSimplex, ...]:
        return tuple(self.face(i, s) for i in range(s.dim + 1)) if s.dim > 0 else ()

    def truncate(self, d: int) -> "FiniteSimplicialSet":
        """The same data with a smaller bound (simplices above ``d`` dropped)."""
        d = min(d, self.dim_bound)
        levels = self._levels[: d + 1]
        faces = {x: self._faces[x] for level in levels for x in level}
        out = FiniteSimplicialSet(d, levels, faces, name=self.name, check=False)
        out.meta = dict(self.meta)
        return out


# ---------------------------------------------------------------------------
# Builders


def from_model(
    dim_bound: int,
    levels: Sequence[Sequence[Hashable]],
    face: Callable[[int, Hashable], Hashable],
    degeneracy: Callable[[int, Hashable], Hashable],
    name: str | None = None,
) -> FiniteSimplicialSet:
    """Build a canonical simplicial set from a model listing *all* simplices.

    ``levels[m]`` must contain every ``m``-simplex, degenerate ones included.
    The returned object exposes ``canon_of``: model value -> canonical simplex.
    """
    canon: dict[Hashable, CanonicalSimplex] = {}
    nondeg: list[list] = []
    faces: dict[Hashable, tuple] = {}
    for m in range(dim_bound + 1):
        level = levels[m] if m < len(levels) else ()
        mine = []
        for v in level:
            if v in canon:
                continue
            found = None
            for i in range(m):
                lower = face(i, v)
                if degeneracy(i, lower) == v:
                    found = (i, lower)
                    break
            if found is None:
                mine.append(v)
                canon[v] = nd(v, m)
                if m > 0:
                    faces[v] = tuple(canon[face(i, v)] for i in range(m + 1))
            else:
                i, lower = found
                c = canon[lower]
                sig = codegeneracy(m - 1, i).values
                canon[v] = CanonicalSimplex(c.base, tuple(c.epi[j] for j in sig))
        nondeg.append(mine)
    out = FiniteSimplicialSet(dim_bound, nondeg, faces, name=name)
    out.canon_of = canon
    return out


def standard_simplex(n: int, dim_bound: int | None = None) -> FiniteSimplicialSet:
    """Δⁿ; nondegenerate simplices are increasing vertex tuples."""
    if n < 0:
        raise BadIndex("negative simplex dimension")
    out = simplex_subcomplex(n, lambda t: True, dim_bound, name=f"Δ{n}")
    return out


def boundary(n: int, dim_bound: int | None = None) -> FiniteSimplicialSet:
    if n < 1:
        raise BadIndex("∂Δⁿ needs n ≥ 1")
    return simplex_subcomplex(n, lambda t: len(t) < n + 1, dim_bound, name=f"∂Δ{n}")


def horn(n: int, k: int, dim_bound: int | None = None) -> FiniteSimplicialSet:
    """Λⁿₖ: the boundary without its ``k``-th face."""
    if n < 1 or not 0 <= k <= n:
        raise BadIndex(f"no horn Λ^{n}_{k}")
    missing = tuple(v for v in range(n + 1) if v != k)
    out = simplex_subcomplex(n, lambda t: len(t) < n + 1 and t != missing, dim_bound, name=f"Λ{n},{k}")
    out.meta["horn"] = (n, k)
    return out


def simplex_subcomplex(
    n: int, keep: Callable[[tuple], bool], dim_bound: int | None = None, name: str | None = None
) -> FiniteSimplicialSet:
    """Subcomplex of Δⁿ on the vertex tuples accepted by ``keep`` (must be face-closed)."""
    d = n if dim_bound is None else dim_bound
    levels, faces = [], {}
    for m in range(d + 1):
        level = [t for t in itertools.combinations(range(n + 1), m + 1) if keep(t)]
        for t in level:
            if m:
                fs = []
                for i in range(m + 1):
                    f = t[:i] + t[i + 1 :]
                    if not keep(f):
                        raise DomainMismatch(f"subcomplex not closed: {f} missing")
                    fs.append(nd(f, m - 1))
                faces[t] = tuple(fs)
        levels.append(level)
    out = FiniteSimplicialSet(d, levels, faces, name=name)
    out.meta["simplex"] = n
    out.meta["complete"] = d >= n
    return out


def point(dim_bound: int = 0) -> FiniteSimplicialSet:
    return standard_simplex(0, dim_bound)


# ---------------------------------------------------------------------------
# Maps


@dataclass
class SimplicialMap:
    """A map of simplicial sets given on nondegenerate source simplices."""

    source: FiniteSimplicialSet
    target: FiniteSimplicialSet
    assignment: dict = field(default_factory=dict)

    def __call__(self, s: CanonicalSimplex | Hashable) -> CanonicalSimplex:
        if not isinstance(s, CanonicalSimplex):
            s = self.source.canonical(s)
        img = self.assignment[s.base]
        return self.target.act(Operator(s.epi, s.base_dim), img)

    def violations(self) -> list[str]:
        out = []
        for x in self.source.ids:
            m = self.source.dim_of(x)
            if x not in self.assignment:
                out.append(f"{x!r} unassigned")
                continue
            y = self.assignment[x]
            if y.dim != m:
                out.append(f"{x!r} sent to simplex of dimension {y.dim}")
                continue
            if m > 0:
                for i, f in enumerate(self.source.faces_of(x)):
                    if self(f) != self.target.face(i, y):
                        out.append(f"d_{i} fails at {x!r}")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def key(self) -> tuple:
        return tuple(sorted(self.assignment.items(), key=lambda kv: sort_key(kv[0])))

    def __eq__(self, other):
        return isinstance(other, SimplicialMap) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def isomorphism_violations(f: SimplicialMap) -> list[str]:
    """Why ``f`` fails to be an isomorphism: invalid, or not a bijection of nondegenerate simplices."""
    bad = f.violations()
    X, Y = f.source, f.target
    if X.dim_bound != Y.dim_bound:
        bad.append("dimension bounds differ")
    for m in range(min(X.dim_bound, Y.dim_bound) + 1):
        images = [f.assignment[x] for x in X.nondegenerate(m)]
        if any(c.is_degenerate() for c in images):
            bad.append(f"a nondegenerate {m}-simplex maps to a degenerate one")
        if {c.base for c in images} != set(Y.nondegenerate(m)) or len(set(images)) != len(images):
            bad.append(f"not a bijection on nondegenerate {m}-simplices")
    return bad


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(f.source, g.target, {x: g(f(x)) for x in f.source.ids})


def identity_map(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {x: X.canonical(x) for x in X.ids})


class _FaceIndex:
    """Index of the ``m``-simplices of a target by their tuple of faces."""

    def __init__(self, Y: FiniteSimplicialSet):
        self.Y = Y
        self._by_faces: dict[int, dict] = {}

    def candidates(self, m: int, faces: tuple | None) -> Sequence[CanonicalSimplex]:
        if m > self.Y.dim_bound:
            raise DimBoundExceeded(f"target truncated below dimension {m}")
        if m == 0:
            return self.Y.all_simplices(0)
        table = self._by_faces.get(m)
        if table is None:
            table = {}
            for y in self.Y.all_simplices(m):
                table.setdefault(self.Y.simplex_faces(y), []).append(y)
            self._by_faces[m] = table
        return table.get(faces, ())


def enumerate_maps(
    X: FiniteSimplicialSet,
    Y: FiniteSimplicialSet,
    fixed: Mapping | None = None,
    budget: int = DEFAULT_BUDGET,
    index: _FaceIndex | None = None,
) -> Iterator[SimplicialMap]:
    """Every simplicial map ``X -> Y`` extending the partial assignment ``fixed``."""
    order = [x for x in X.ids]
    index = index or _FaceIndex(Y)
    fixed = dict(fixed or {})
    assignment: dict = {}
    steps = [0]

    def image(c: CanonicalSimplex) -> CanonicalSimplex:
        return Y.act(Operator(c.epi, c.base_dim), assignment[c.base])

    def rec(pos: int):
        if pos == len(order):
            yield SimplicialMap(X, Y, dict(assignment))
            return
        x = order[pos]
        m = X.dim_of(x)
        faces = tuple(image(c) for c in X.faces_of(x)) if m else None
        if x in fixed:
            y = fixed[x]
            cands = [y] if (m == 0 or Y.simplex_faces(y) == faces) else []
        else:
            cands = index.candidates(m, faces)
        for y in cands:
            steps[0] += 1
            if steps[0] > budget:
                raise EnumerationBudgetExceeded(f"map enumeration exceeded {budget} steps")
            assignment[x] = y
            yield from rec(pos + 1)
            del assignment[x]

    yield from rec(0)


def count_maps(X, Y, budget: int = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_maps(X, Y, budget=budget))


def _coface_counts(X: FiniteSimplicialSet) -> dict:
    counts = {x: [0] * (X.dim_bound + 2) for x in X.ids}
    for x in X.ids:
        for f in X.faces_of(x):
            counts[f.base][X.dim_of(x)] += 1
    return {x: tuple(v) for x, v in counts.items()}


def find_isomorphism(
    X: FiniteSimplicialSet, Y: FiniteSimplicialSet, budget: int = DEFAULT_BUDGET
) -> dict | None:
    """Search for a bijection of nondegenerate simplices commuting with faces.

    Simplices are assigned top-down so that faces are forced; candidates are
    pruned by dimension and coface-count signatures.
    """
    if X.counts() != Y.counts():
        return None
    sx, sy = _coface_counts(X), _coface_counts(Y)
    by_sig: dict = {}
    for y in Y.ids:
        by_sig.setdefault((Y.dim_of(y), sy[y]), []).append(y)
    order = sorted(X.ids, key=lambda x: (-X.dim_of(x), sort_key(x)))
    phi: dict = {}
    used: set = set()
    steps = [0]

    def force(x, y, trail) -> bool:
        # assign x -> y and propagate through faces
        if x in phi:
            return phi[x] == y
        if y in used or X.dim_of(x) != Y.dim_of(y) or sx[x] != sy[y]:
            return False
        phi[x] = y
        used.add(y)
        trail.append(x)
        for fx, fy in zip(X.faces_of(x), Y.faces_of(y)):
            if fx.epi != fy.epi or not force(fx.base, fy.base, trail):
                return False
        return True

    def undo(trail):
        for x in trail:
            used.discard(phi.pop(x))

    def rec(pos: int) -> bool:
        while pos < len(order) and order[pos] in phi:
            pos += 1
        if pos == len(order):
            return True
        x = order[pos]
        for y in by_sig.get((X.dim_of(x), sx[x]), ()):
            if y in used:
                continue
            steps[0] += 1
            if steps[0] > budget:
                raise EnumerationBudgetExceeded("isomorphism search exceeded budget")
            trail: list = []
            if force(x, y, trail) and rec(pos + 1):
                return True
            undo(trail)
        return False

    return dict(phi) if rec(0) else None


def isomorphism_map(X, Y, phi: Mapping) -> SimplicialMap:
    return SimplicialMap(X, Y, {x: Y.canonical(y) for x, y in phi.items()})


# ---------------------------------------------------------------------------
# Products and mapping complexes


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, d: int | None = None) -> FiniteSimplicialSet:
    """Levelwise product truncated at ``d``; simplices are pairs of canonical simplices."""
    if d is None:
        d = min(X.dim_bound, Y.dim_bound)
    X, Y = extend_bound(X, d), extend_bound(Y, d)
    levels = [[(x, y) for x in X.all_simplices(m) for y in Y.all_simplices(m)] for m in range(d + 1)]

    def face(i, v):
        return (X.face(i, v[0]), Y.face(i, v[1]))

    def degeneracy(i, v):
        return (X.degeneracy(i, v[0]), Y.degeneracy(i, v[1]))

    out = from_model(d, levels, face, degeneracy, name=f"{X.name}×{Y.name}")
    out.meta["complete"] = bool(
        X.meta.get("complete") and Y.meta.get("complete") and d >= X.top_dim() + Y.top_dim()
    )
    return out


def _maps_key(f: SimplicialMap) -> tuple:
    return f.key()


def mapping_complex(
    X: FiniteSimplicialSet, Y: FiniteSimplicialSet, d: int, budget: int = DEFAULT_BUDGET
) -> FiniteSimplicialSet:
    """Internal hom ``Y^X`` truncated at ``d``.

    An ``n``-simplex is a map ``X × Δⁿ -> Y``; faces and degeneracies act by
    precomposition with ``1 × δ^i`` and ``1 × σ^i``.
    """
    p = X.top_dim()
    if Y.meta.get("complete"):
        Y = extend_bound(Y, p + d)
    prods = []
    if p + d > Y.dim_bound:
        raise DimBoundExceeded(f"target must be bounded at least at {p + d}")
    for n in range(d + 1):
        prods.append(product(extend_bound(X, p + d), standard_simplex(n, p + d), p + d))
    maps: list[dict] = []
    total = 0
    for n in range(d + 1):
        found = {}
        for f in enumerate_maps(prods[n], Y, budget=budget):
            total += 1
            if total > budget:
                raise EnumerationBudgetExceeded("mapping complex too large")
            found[f.key()] = f
        maps.append(found)
    simplices = [standard_simplex(n, p + n + 1) for n in range(d + 2)]

    def reindex(key, n_from, n_to, op_of_simplex):
        f = maps[n_from][key]
        P_to = prods[n_to]
        assignment = {}
        for v in P_to.ids:
            x, y = v
            img = (x, op_of_simplex(y))
            c = prods[n_from].canon_of[img]
            assignment[v] = f(c)
        return SimplicialMap(P_to, Y, assignment).key()

    def face(i, key):
        n = _level_of(maps, key)
        return reindex(key, n, n - 1, lambda y: _push(simplices[n], coface(n, i), y))

    def degeneracy(i, key):
        n = _level_of(maps, key)
        return reindex(key, n, n + 1, lambda y: _push(simplices[n], codegeneracy(n, i), y))

    levels = [list(maps[n].keys()) for n in range(d + 1)]
    out = from_model(d, levels, face, degeneracy, name=f"Map({X.name},{Y.name})")
    out.meta["maps"] = maps
    return out


def _push(delta: FiniteSimplicialSet, op: Operator, y: CanonicalSimplex) -> CanonicalSimplex:
    """Image of a simplex ``y`` of Δ^{src op} under the map Δ(op) into Δ^{target op}."""
    verts = tuple(y.base[j] for j in y.epi)  # vertex sequence of y
    image = tuple(op.values[v] for v in verts)
    epi, mono = _ez_values(image)
    return CanonicalSimplex(mono, epi)


def _level_of(maps, key) -> int:
    for n, level in enumerate(maps):
        if key in level:
            return n
    raise KeyError(key)


def _extend_bound(X: FiniteSimplicialSet, d: int) -> FiniteSimplicialSet:
    levels = [X.nondegenerate(m) for m in range(X.dim_bound + 1)]
    faces = {x: X.faces_of(x) for x in X.ids}
    out = FiniteSimplicialSet(d, levels, faces, name=X.name, check=False)
    out.meta = dict(X.meta)
    return out


def extend_bound(X: FiniteSimplicialSet, d: int) -> FiniteSimplicialSet:
    """Raise ``dim_bound`` to ``d``.

    Only allowed for sets flagged ``complete`` (no nondegenerate simplices
    beyond the stored ones); otherwise raises :class:`DimBoundExceeded`.
    """
    if d <= X.dim_bound:
        return X
    if not X.meta.get("complete"):
        raise DimBoundExceeded(f"{X.name or 'simplicial set'} is truncated at {X.dim_bound} < {d}")
    return _extend_bound(X, d)


# ---------------------------------------------------------------------------
# Simplicial identities


def check_simplicial_identities(X: FiniteSimplicialSet, d: int | None = None) -> list[str]:
    """Check every simplicial identity on every simplex up to ``d``; return violations."""
    d = X.dim_bound if d is None else min(d, X.dim_bound)
    bad = []
    for m in range(d + 1):
        for s in X.all_simplices(m):
            face = lambda i, t: X.face(i, t)  # noqa: E731
            deg = lambda i, t: X.degeneracy(i, t)  # noqa: E731
            if m >= 2:
                for j in range(m + 1):
                    for i in range(j):
                        if face(i, face(j, s)) != face(j - 1, face(i, s)):
                            bad.append(f"d{i}d{j} on {s!r}")
            if m + 2 <= X.dim_bound:
                for j in range(m + 1):
                    for i in range(j + 1):
                        if deg(i, deg(j, s)) != deg(j + 1, deg(i, s)):
                            bad.append(f"s{i}s{j} on {s!r}")
            if m + 1 <= X.dim_bound:
                for j in range(m + 1):
                    t = deg(j, s)
                    for i in range(m + 2):
                        lhs = face(i, t)
                        if i < j:
                            rhs = deg(j - 1, face(i, s))
                        elif i in (j, j + 1):
                            rhs = s
                        else:
                            rhs = deg(j, face(i - 1, s))
                        if lhs != rhs:
                            bad.append(f"d{i}s{j} on {s!r}")
    return bad


def check_action(X: FiniteSimplicialSet, d: int | None = None) -> list[str]:
    """Check ``act(f ∘ g) = act(g) ∘ act(f)`` for all operators between levels up to ``d``."""
    d = X.dim_bound if d is None else min(d, X.dim_bound)
    ops = {(m, n): list(operators(m, n)) for m in range(d + 1) for n in range(d + 1)}
    bad = []
    for n in range(d + 1):
        for s in X.all_simplices(n):
            if X.act(identity(n), s) != s:
                bad.append(f"identity moves {s!r}")
            for m in range(d + 1):
                for f in ops[(m, n)]:
                    t = X.act(f, s)
                    for l in range(d + 1):
                        for g in ops[(l, m)]:
                            if X.act(compose_operators(f, g), s) != X.act(g, t):
                                bad.append(f"{f}∘{g} on {s!r}")
    return bad


# ---------------------------------------------------------------------------
# Horn filling


def horn_faces(h: SimplicialMap) -> tuple[int, int, dict[int, CanonicalSimplex]]:
    n, k = h.source.meta["horn"]
    top = tuple(range(n + 1))
    return n, k, {i: h(top[:i] + top[i + 1 :]) for i in range(n + 1) if i != k}


def fill_horn(X: FiniteSimplicialSet, h: SimplicialMap) -> list[CanonicalSimplex]:
    """All ``n``-simplices of ``X`` (degenerate included) restricting to the horn ``h``."""
    n, k, faces = horn_faces(h)
    return [y for y in X.all_simplices(n) if all(X.face(i, y) == f for i, f in faces.items())]


@dataclass
class HornEntry:
    n: int
    k: int
    horn: tuple
    fillers: int


@dataclass
class HornReport:
    kind: str
    dim: int
    entries: list[HornEntry]

    @property
    def verdict(self) -> bool:
        return all(e.fillers > 0 for e in self.entries)

    @property
    def unique(self) -> bool:
        return all(e.fillers == 1 for e in self.entries)

    def failures(self) -> list[HornEntry]:
        return [e for e in self.entries if e.fillers == 0]

    def summary(self) -> dict:
        per: dict = {}
        for e in self.entries:
            slot = per.setdefault(f"{e.n},{e.k}", {"horns": 0, "unfillable": 0, "max_fillers": 0})
            slot["horns"] += 1
            slot["unfillable"] += e.fillers == 0
            slot["max_fillers"] = max(slot["max_fillers"], e.fillers)
        return {"kind": self.kind, "dim": self.dim, "verdict": self.verdict,
                "unique": self.unique, "horns": len(self.entries), "per_horn": per}


def horn_report(X: FiniteSimplicialSet, d: int, inner: bool = True,
                budget: int = DEFAULT_BUDGET) -> HornReport:
    if d > X.dim_bound:
        raise DimBoundExceeded(f"cannot test horns of dimension {d} above bound {X.dim_bound}")
    entries = []
    index = _FaceIndex(X)
    for n in range(2 if inner else 1, d + 1):
        ks = range(1, n) if inner else range(n + 1)
        table: dict = {}
        for y in X.all_simplices(n):
            table.setdefault(X.simplex_faces(y), []).append(y)
        for k in ks:
            H = horn(n, k)
            by_horn: dict = {}
            for fs, ys in table.items():
                key = fs[:k] + fs[k + 1 :]
                by_horn[key] = by_horn.get(key, 0) + len(ys)
            for h in enumerate_maps(H, X, budget=budget, index=index):
                _, _, faces = horn_faces(h)
                key = tuple(faces[i] for i in sorted(faces))
                entries.append(HornEntry(n, k, key, by_horn.get(key, 0)))
    return HornReport("quasi-category" if inner else "kan", d, entries)


def is_quasi_category(X: FiniteSimplicialSet, d: int, **kw) -> HornReport:
    return horn_report(X, d, inner=True, **kw)


def is_kan(X: FiniteSimplicialSet, d: int, **kw) -> HornReport:
    return horn_report(X, d, inner=False, **kw)
