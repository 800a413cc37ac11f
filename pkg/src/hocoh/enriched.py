"""Simplicially enriched categories with finite, truncated hom-sets.

Concrete categories describe every ``m``-arrow by a hashable *model* value;
hom-sets are built from those models and arrows are handed out as canonical
simplices of the hom-set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .categories import FinCategory
from .errors import BadIndex, DomainMismatch, TruncationError
from .simplicial import (
    CanonicalSimplex,
    FiniteSimplicialSet,
    from_model,
    sort_key,
)


class SimplicialCategory:
    """Base class; subclasses provide the model-level data.

    Required hooks: ``_hom_model(x, y) -> (levels, face, degeneracy)``,
    ``_compose_model(x, y, z, g, f)`` and ``_identity_model(x, m)``.
    """

    kind = "abstract"

    def __init__(self, objects, dim_bound: int, name: str | None = None):
        self.objects = tuple(objects)
        self.dim_bound = dim_bound
        self.name = name
        self.truncated = False
        self._homs: dict = {}

    # -- hooks --------------------------------------------------------------

    def _hom_model(self, x, y):
        raise NotImplementedError

    def _compose_model(self, x, y, z, g, f):
        raise NotImplementedError

    def _identity_model(self, x, m: int):
        raise NotImplementedError

    # -- public interface ---------------------------------------------------

    def _check_object(self, x):
        if x not in self.objects:
            raise DomainMismatch(f"{x!r} is not an object of {self.name}")

    def hom(self, x, y) -> FiniteSimplicialSet:
        key = (x, y)
        if key not in self._homs:
            self._check_object(x)
            self._check_object(y)
            levels, face, degeneracy = self._hom_model(x, y)
            H = from_model(self.dim_bound, levels, face, degeneracy, name=f"{self.name}({x},{y})")
            H.model_face, H.model_degeneracy = face, degeneracy
            self._homs[key] = H
        return self._homs[key]

    def materialize(self, x, y, c: CanonicalSimplex):
        """Model value of a canonical arrow of ``hom(x, y)``."""
        H = self.hom(x, y)
        model = c.base
        for j in range(c.dim):
            if c.epi[j] == c.epi[j + 1]:
                model = H.model_degeneracy(j, model)
        return model

    def canonical(self, x, y, model) -> CanonicalSimplex:
        H = self.hom(x, y)
        try:
            return H.canon_of[model]
        except KeyError:
            raise TruncationError(f"{model!r} lies outside the enumerated hom({x!r},{y!r})") from None

    def identity(self, x, m: int = 0) -> CanonicalSimplex:
        return self.canonical(x, x, self._identity_model(x, m))

    def compose(self, x, y, z, g: CanonicalSimplex, f: CanonicalSimplex) -> CanonicalSimplex:
        """``g ∘ f`` for ``f`` in ``hom(x, y)`` and ``g`` in ``hom(y, z)`` at a common level."""
        if g.dim != f.dim:
            raise DomainMismatch("composition needs arrows of equal dimension")
        gm = self.materialize(y, z, g)
        fm = self.materialize(x, y, f)
        return self.canonical(x, z, self._compose_model(x, y, z, gm, fm))

    def arrows(self, x, y, m: int) -> tuple[CanonicalSimplex, ...]:
        if m > self.dim_bound:
            raise BadIndex(f"level {m} above dim_bound {self.dim_bound}")
        return self.hom(x, y).all_simplices(m)

    def is_identity(self, x, y, c: CanonicalSimplex) -> bool:
        return x == y and c == self.identity(x, c.dim)

    def violations(self, d: int | None = None, limit: int = 200_000) -> list[str]:
        """Check unit laws, associativity and compatibility of composition with faces."""
        d = self.dim_bound if d is None else d
        bad = []
        work = 0
        objs = self.objects
        for m in range(d + 1):
            for x in objs:
                for y in objs:
                    for f in self.arrows(x, y, m):
                        if self.compose(x, y, y, self.identity(y, m), f) != f:
                            bad.append(f"left unit fails at {f!r}")
                        if self.compose(x, x, y, f, self.identity(x, m)) != f:
                            bad.append(f"right unit fails at {f!r}")
            for x in objs:
                for y in objs:
                    for z in objs:
                        Hxz = self.hom(x, z)
                        for f in self.arrows(x, y, m):
                            for g in self.arrows(y, z, m):
                                work += 1
                                if work > limit:
                                    return bad
                                try:
                                    gf = self.compose(x, y, z, g, f)
                                except TruncationError:
                                    continue
                                for i in range(m + 1 if m else 0):
                                    Hxy, Hyz = self.hom(x, y), self.hom(y, z)
                                    lhs = Hxz.face(i, gf)
                                    rhs = self.compose(x, y, z, Hyz.face(i, g), Hxy.face(i, f))
                                    if lhs != rhs:
                                        bad.append(f"face {i} does not commute with {g!r}∘{f!r}")
                                for w in objs:
                                    for h in self.arrows(z, w, m):
                                        work += 1
                                        try:
                                            a = self.compose(x, z, w, h, gf)
                                            b = self.compose(x, y, w, self.compose(y, z, w, h, g), f)
                                        except TruncationError:
                                            continue
                                        if a != b:
                                            bad.append(f"associativity fails at {h!r},{g!r},{f!r}")
        return bad


# ---------------------------------------------------------------------------
# Elementary examples


class ConstantSimplicialCategory(SimplicialCategory):
    """A category viewed as a simplicial category with discrete hom-sets."""

    kind = "constant"

    def __init__(self, A: FinCategory, dim_bound: int):
        super().__init__(A.objects, dim_bound, name=f"const({A.name})")
        self.category = A
        self.truncated = A.truncated

    def _hom_model(self, x, y):
        ms = sorted(self.category.hom(x, y), key=sort_key)
        levels = [[(f, m) for f in ms] for m in range(self.dim_bound + 1)]
        return levels, lambda i, v: (v[0], v[1] - 1), lambda i, v: (v[0], v[1] + 1)

    def _compose_model(self, x, y, z, g, f):
        return (self.category.compose(g[0], f[0]), f[1])

    def _identity_model(self, x, m):
        return (self.category.identities[x], m)

    def morphism_of(self, c: CanonicalSimplex):
        return c.base[0]


class GroupNerveCategory(SimplicialCategory):
    """One object whose hom is the nerve of an abelian group, composed pointwise.

    ``m``-arrows are length-``m`` strings of elements of ``Z/order``.
    """

    kind = "group-nerve"

    def __init__(self, order: int, dim_bound: int):
        super().__init__(("*",), dim_bound, name=f"NZ{order}")
        self.order = order

    def _hom_model(self, x, y):
        n = self.order
        levels = [list(itertools.product(range(n), repeat=m)) for m in range(self.dim_bound + 1)]

        def face(i, v):
            m = len(v)
            if i == 0:
                return v[1:]
            if i == m:
                return v[:-1]
            return v[: i - 1] + ((v[i - 1] + v[i]) % n,) + v[i + 1 :]

        def degeneracy(i, v):
            return v[:i] + (0,) + v[i:]

        return levels, face, degeneracy

    def _compose_model(self, x, y, z, g, f):
        return tuple((a + b) % self.order for a, b in zip(g, f))

    def _identity_model(self, x, m):
        return (0,) * m


class SimplicialFunctor:
    """A functor between simplicial categories given by an object map and an arrow rule.

    ``arrow(x, y, c)`` sends a canonical arrow of ``source.hom(x, y)`` to one of
    ``target.hom(obj[x], obj[y])``.
    """

    def __init__(self, source: SimplicialCategory, target: SimplicialCategory, obj: dict, arrow):
        self.source = source
        self.target = target
        self.obj = dict(obj)
        self._arrow = arrow
        self._cache: dict = {}

    def __call__(self, x, y, c: CanonicalSimplex) -> CanonicalSimplex:
        key = (x, y, c)
        if key not in self._cache:
            self._cache[key] = self._arrow(x, y, c)
        return self._cache[key]

    def violations(self, d: int | None = None) -> list[str]:
        """Check identities, composition and compatibility with faces and degeneracies."""
        S, T = self.source, self.target
        d = min(S.dim_bound, T.dim_bound) if d is None else d
        bad = []
        for x in S.objects:
            if x not in self.obj or self.obj[x] not in T.objects:
                return [f"object {x!r} unmapped"]
        for m in range(d + 1):
            for x in S.objects:
                if self(x, x, S.identity(x, m)) != T.identity(self.obj[x], m):
                    bad.append(f"identity at {x!r} not preserved at level {m}")
            for x in S.objects:
                for y in S.objects:
                    Hs, Ht = S.hom(x, y), T.hom(self.obj[x], self.obj[y])
                    for c in S.arrows(x, y, m):
                        img = self(x, y, c)
                        if m and m <= d:
                            for i in range(m + 1):
                                if self(x, y, Hs.face(i, c)) != Ht.face(i, img):
                                    bad.append(f"face {i} of {c!r} not preserved")
                        if m < d:
                            for i in range(m + 1):
                                if self(x, y, Hs.degeneracy(i, c)) != Ht.degeneracy(i, img):
                                    bad.append(f"degeneracy {i} of {c!r} not preserved")
                        for z in S.objects:
                            for g in S.arrows(y, z, m):
                                try:
                                    gc = S.compose(x, y, z, g, c)
                                except TruncationError:
                                    continue
                                fx, fy, fz = self.obj[x], self.obj[y], self.obj[z]
                                try:
                                    rhs = T.compose(fx, fy, fz, self(y, z, g), img)
                                except TruncationError:
                                    bad.append(f"image of {g!r}∘{c!r} leaves the target truncation")
                                    continue
                                if self(x, z, gc) != rhs:
                                    bad.append(f"composite {g!r}∘{c!r} not preserved")
        return bad


# ---------------------------------------------------------------------------
# Simplicial computads


@dataclass
class ComputadReport:
    atomic: dict = field(default_factory=dict)  # level -> number of atomic arrows
    violations: list = field(default_factory=list)
    skipped: int = 0  # composites outside the truncation

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {
            "computad": self.ok,
            "atomic_per_level": {str(k): v for k, v in sorted(self.atomic.items())},
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
            "skipped_composites": self.skipped,
        }


def _level_arrows(C: SimplicialCategory, m: int) -> list[tuple]:
    out = []
    for x in C.objects:
        for y in C.objects:
            for c in C.arrows(x, y, m):
                if not C.is_identity(x, y, c):
                    out.append((x, y, c))
    return out


def _composites(C: SimplicialCategory, arrows: list[tuple]) -> tuple[dict, int]:
    """Every defined composite ``g ∘ f`` of non-identity arrows, keyed by result.

    Returns ``{(x, z, c): [(f, g), ...]}`` and the number of composites that
    fall outside the truncation.
    """
    by_src: dict = {}
    for a in arrows:
        by_src.setdefault(a[0], []).append(a)
    table: dict = {}
    skipped = 0
    for f in arrows:
        x, y, fc = f
        for g in by_src.get(y, ()):
            try:
                c = C.compose(x, y, g[1], g[2], fc)
            except TruncationError:
                skipped += 1
                continue
            table.setdefault((x, g[1], c), []).append((f, g))
    return table, skipped


def atomic_arrows(C: SimplicialCategory, m: int) -> set:
    """Non-identity ``m``-arrows that are not composites of two non-identity arrows."""
    arrows = _level_arrows(C, m)
    table, _ = _composites(C, arrows)
    return {a for a in arrows if a not in table}


def factorizations(C: SimplicialCategory, x, y, c: CanonicalSimplex, limit: int = 10) -> list[tuple]:
    """Up to ``limit`` factorizations of ``c`` into atomic arrows, in path order."""
    arrows = _level_arrows(C, c.dim)
    table, _ = _composites(C, arrows)
    atoms = {a for a in arrows if a not in table}
    return [tuple(p) for p in _paths(table, atoms, (x, y, c), limit)]


def check_simplicial_computad(C: SimplicialCategory, d: int | None = None) -> ComputadReport:
    """Verify unique atomic factorization at every level and atomicity of degeneracies."""
    d = C.dim_bound if d is None else d
    report = ComputadReport()
    atoms_by_level = {}
    for m in range(d + 1):
        arrows = _level_arrows(C, m)
        table, skipped = _composites(C, arrows)
        report.skipped += skipped
        atoms = {a for a in arrows if a not in table}
        atoms_by_level[m] = atoms
        report.atomic[m] = len(atoms)
        for (x, z, c), pairs in table.items():
            if C.is_identity(x, z, c):
                f, g = pairs[0]
                report.violations.append(f"level {m}: identity at {x!r} is a composite {g[2]!r}∘{f[2]!r}")
        count = _factorization_counts(table, atoms, arrows, report)
        for a in arrows:
            n = count.get(a, 0)
            if n == 0:
                report.violations.append(f"level {m}: {a[2]!r} in hom({a[0]!r},{a[1]!r}) has no atomic factorization")
            elif n > 1:
                report.violations.append(
                    f"level {m}: {a[2]!r} in hom({a[0]!r},{a[1]!r}) has {n} atomic factorizations, e.g. "
                    + " | ".join(_render(p) for p in _paths(table, atoms, a, 2)))
    for m in range(d + 1):
        for (x, y, c) in atoms_by_level[m]:
            base = C.hom(x, y).canonical(c.base)
            if (x, y, base) not in atoms_by_level[base.dim]:
                report.violations.append(f"level {m}: atomic {c!r} is a degeneracy of the non-atomic {base!r}")
            if not c.is_degenerate() and m + 1 <= d:
                H = C.hom(x, y)
                for i in range(m + 1):
                    s = H.degeneracy(i, c)
                    if (x, y, s) not in atoms_by_level[m + 1]:
                        report.violations.append(f"level {m}: degeneracy {i} of atomic {c!r} is not atomic")
    return report


def _factorization_counts(table: dict, atoms: set, arrows: list, report) -> dict:
    """Number of atomic factorizations of each arrow, capped at 3.

    An arrow ``a = t ∘ b`` with ``t`` atomic contributes the factorizations of
    ``b``; atoms contribute one more.
    """
    preds = {a: [f for f, g in pairs if g in atoms] for a, pairs in table.items()}
    memo: dict = {}
    visiting = set()

    def count(a) -> int:
        if a in memo:
            return memo[a]
        if a in visiting:
            report.violations.append(f"cyclic factorization through {a[2]!r}")
            return 2
        visiting.add(a)
        n = 1 if a in atoms else 0
        for b in preds.get(a, ()):
            n += count(b)
            if n > 2:
                break
        visiting.discard(a)
        memo[a] = n
        return n

    return {a: count(a) for a in arrows}


def _paths(table: dict, atoms: set, a, limit: int) -> list[tuple]:
    """Up to ``limit`` atomic factorizations of ``a`` (path order)."""
    out = []

    def rec(target, suffix):
        if len(out) >= limit or len(suffix) > len(table):
            return
        if target in atoms:
            out.append((target,) + suffix)
        for f, g in table.get(target, ()):
            if g in atoms:
                rec(f, (g,) + suffix)

    rec(a, ())
    return out


def _render(path) -> str:
    return " then ".join(repr(p[2]) for p in path)
