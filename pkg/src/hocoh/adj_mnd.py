"""The free homotopy coherent monad and adjunction as simplicial categories.

Arrows of the adjunction category are *squiggles*: height sequences over
``n + 1`` horizontal lines, where height ``h`` names the region between line
``h`` and line ``h + 1``; ``0`` is the ``+`` region above the first line and
``n + 1`` the ``-`` region below the last. A squiggle is read right to left:
its last height is the source object and its first height the target.
Vertex ``i`` of an ``n``-arrow corresponds to line ``n + 1 - i``.

Hom-sets are nerves of ordinal categories: ``Δ₊`` for ``(+, +)``, top
preserving maps of nonempty ordinals for ``(-, +)``, bottom preserving ones
for ``(+, -)`` and ``Δ₊^op`` for ``(-, -)``. Hom kinds are written
``src + tgt`` as two-character strings, e.g. ``"-+"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce

from .categories import (
    Adjunction,
    FinCategory,
    Functor,
    Monad,
    NatTransformation,
    check_adjunction,
    check_monad,
    compose_functors,
    horizontal,
    identity_functor,
    identity_nat,
    induced_monad,
    vertical,
    whisker_left,
    whisker_right,
)
from .enriched import SimplicialCategory
from .errors import BadIndex, DomainMismatch, InvalidSquiggle, InvalidStructure, TruncationError
from .simplicial import FiniteSimplicialSet, codegeneracy, coface, from_model

KINDS = ("++", "-+", "+-", "--")


# ---------------------------------------------------------------------------
# Ordinals


@dataclass(frozen=True)
class OrdinalMap:
    """A monotone map ``{0..p-1} -> {0..q-1}``."""

    p: int
    q: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.p or any(not 0 <= v < self.q for v in self.values):
            raise InvalidStructure(f"bad ordinal map {self.values} : {self.p} -> {self.q}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidStructure(f"ordinal map {self.values} is not monotone")

    @property
    def preserves_top(self) -> bool:
        return self.p > 0 and self.q > 0 and self.values[-1] == self.q - 1

    @property
    def preserves_bottom(self) -> bool:
        return self.p > 0 and self.q > 0 and self.values[0] == 0

    def fibers(self) -> tuple:
        return tuple(self.values.count(c) for c in range(self.q))

    def __repr__(self):
        return f"{self.p}->{self.q}{list(self.values)}"


def ordinal_identity(p: int) -> OrdinalMap:
    return OrdinalMap(p, p, tuple(range(p)))


def ordinal_compose(g: OrdinalMap, f: OrdinalMap) -> OrdinalMap:
    if f.q != g.p:
        raise DomainMismatch("ordinal maps not composable")
    return OrdinalMap(f.p, g.q, tuple(g.values[v] for v in f.values))


def ordinal_sum(a: OrdinalMap, b: OrdinalMap) -> OrdinalMap:
    return OrdinalMap(a.p + b.p, a.q + b.q, a.values + tuple(v + a.q for v in b.values))


def ordinal_maps(p: int, q: int, kind: str = "++") -> list[OrdinalMap]:
    """Monotone maps ``p -> q`` allowed in the hom of the given kind (op kinds use ``Δ₊``)."""
    out = []
    for vals in itertools.combinations_with_replacement(range(q), p):
        f = OrdinalMap(p, q, vals)
        if kind == "-+" and not f.preserves_top:
            continue
        if kind == "+-" and not f.preserves_bottom:
            continue
        out.append(f)
    return out


def _sizes(kind: str, size_bound: int) -> range:
    return range(1, size_bound + 1) if kind in ("-+", "+-") else range(size_bound + 1)


@dataclass(frozen=True)
class OrdinalChain:
    """An ``n``-simplex of the nerve of the ordinal category of ``kind``.

    ``maps[i]`` goes ``objects[i] -> objects[i+1]``, except for ``"--"`` where
    it is the ``Δ₊`` map ``objects[i+1] -> objects[i]``.
    """

    kind: str
    objects: tuple
    maps: tuple

    @property
    def level(self) -> int:
        return len(self.objects) - 1

    def _compose_pair(self, first: OrdinalMap, second: OrdinalMap) -> OrdinalMap:
        if self.kind == "--":
            return ordinal_compose(first, second)
        return ordinal_compose(second, first)

    def face(self, i: int) -> "OrdinalChain":
        n = self.level
        objs = self.objects[:i] + self.objects[i + 1 :]
        if i == 0:
            maps = self.maps[1:]
        elif i == n:
            maps = self.maps[:-1]
        else:
            maps = self.maps[: i - 1] + (self._compose_pair(self.maps[i - 1], self.maps[i]),) + self.maps[i + 1 :]
        return OrdinalChain(self.kind, objs, maps)

    def degeneracy(self, i: int) -> "OrdinalChain":
        o = self.objects[i]
        return OrdinalChain(self.kind, self.objects[: i + 1] + self.objects[i:],
                            self.maps[:i] + (ordinal_identity(o),) + self.maps[i:])

    def to_json(self) -> dict:
        return {"kind": self.kind, "objects": list(self.objects),
                "maps": [list(f.values) for f in self.maps]}


def chain_sum(a: OrdinalChain, b: OrdinalChain) -> OrdinalChain:
    """Pointwise ordinal sum of two ``"++"`` chains."""
    if a.level != b.level:
        raise DomainMismatch("levels differ")
    return OrdinalChain("++", tuple(x + y for x, y in zip(a.objects, b.objects)),
                        tuple(ordinal_sum(f, g) for f, g in zip(a.maps, b.maps)))


def ordinal_chains(kind: str, n: int, size_bound: int) -> list[OrdinalChain]:
    out = []
    sizes = _sizes(kind, size_bound)

    def rec(objs, maps):
        if len(objs) == n + 1:
            out.append(OrdinalChain(kind, tuple(objs), tuple(maps)))
            return
        for o in sizes:
            ms = ordinal_maps(o, objs[-1], "++") if kind == "--" else ordinal_maps(objs[-1], o, kind)
            for f in ms:
                rec(objs + [o], maps + [f])

    for o in sizes:
        rec([o], [])
    return out


def ordinal_nerve(kind: str, d: int, size_bound: int) -> FiniteSimplicialSet:
    """Truncated nerve of the ordinal category of ``kind`` with objects of size ``<= size_bound``."""
    levels = [ordinal_chains(kind, m, size_bound) for m in range(d + 1)]
    return from_model(d, levels, lambda i, c: c.face(i), lambda i, c: c.degeneracy(i),
                      name=f"N[{kind}]")


def mnd_hom(d: int, size_bound: int) -> FiniteSimplicialSet:
    return ordinal_nerve("++", d, size_bound)


class Mnd(SimplicialCategory):
    """One object whose hom is the nerve of ``Δ₊``, composed by ordinal sum."""

    kind = "mnd"

    def __init__(self, d: int, size_bound: int):
        super().__init__(("+",), d, name="Mnd")
        self.size_bound = size_bound
        self.truncated = True

    def _hom_model(self, x, y):
        levels = [ordinal_chains("++", m, self.size_bound) for m in range(self.dim_bound + 1)]
        return levels, (lambda i, c: c.face(i)), (lambda i, c: c.degeneracy(i))

    def _compose_model(self, x, y, z, g, f):
        return chain_sum(g, f)

    def _identity_model(self, x, m):
        return OrdinalChain("++", (0,) * (m + 1), (ordinal_identity(0),) * m)


# ---------------------------------------------------------------------------
# Squiggles


@dataclass(frozen=True)
class Squiggle:
    lines: int  # n + 1
    heights: tuple

    @property
    def level(self) -> int:
        return self.lines - 1

    @property
    def width(self) -> int:
        return len(self.heights)

    @property
    def src(self) -> str:
        return "+" if self.heights[-1] == 0 else "-"

    @property
    def tgt(self) -> str:
        return "+" if self.heights[0] == 0 else "-"

    @property
    def kind(self) -> str:
        return self.src + self.tgt

    def __repr__(self):
        return f"~{self.lines}{list(self.heights)}"

    def to_json(self) -> dict:
        return {"lines": self.lines, "heights": list(self.heights), "kind": self.kind}


def squiggle_violations(s: Squiggle) -> list[str]:
    bad = []
    h, top = s.heights, s.lines
    if s.lines < 1:
        bad.append("a squiggle needs at least one line")
    if not h:
        return bad + ["empty height sequence"]
    if any(not 0 <= x <= top for x in h):
        bad.append("height out of range")
    if h[0] not in (0, top) or h[-1] not in (0, top):
        bad.append("endpoints must lie in the + or - region")
    for a, b in zip(h, h[1:]):
        if a == b:
            bad.append("consecutive heights coincide")
            break
    for j in range(1, len(h) - 1):
        if not ((h[j] > h[j - 1] and h[j] > h[j + 1]) or (h[j] < h[j - 1] and h[j] < h[j + 1])):
            bad.append(f"height at position {j} is not a strict extremum")
    return bad


def squiggle_validate(s: Squiggle) -> Squiggle:
    bad = squiggle_violations(s)
    if bad:
        raise InvalidSquiggle("; ".join(bad))
    return s


def _tighten(h: list) -> tuple:
    """Merge repeated heights and drop interior non-extrema until the sequence undulates."""
    h = list(h)
    while True:
        out = [x for j, x in enumerate(h) if j == 0 or x != h[j - 1]]
        for j in range(1, len(out) - 1):
            if (out[j - 1] < out[j] < out[j + 1]) or (out[j - 1] > out[j] > out[j + 1]):
                del out[j]
                break
        if out == h:
            return tuple(h)
        h = out


def squiggle_compose(g: Squiggle, f: Squiggle) -> Squiggle:
    """``g ∘ f``: juxtapose with ``g`` on the left, fusing the shared endpoint."""
    if g.lines != f.lines:
        raise DomainMismatch("squiggles over different numbers of lines")
    if g.heights[-1] != f.heights[0]:
        raise DomainMismatch(f"cannot compose {g!r} after {f!r}")
    return squiggle_validate(_juxtapose(g, f))


def _juxtapose(g: Squiggle, f: Squiggle) -> Squiggle:
    return Squiggle(g.lines, _tighten(list(g.heights) + list(f.heights[1:])))


def squiggle_identity(obj: str, n: int) -> Squiggle:
    return Squiggle(n + 1, (0,) if obj == "+" else (n + 1,))


def squiggle_face(i: int, s: Squiggle) -> Squiggle:
    n = s.level
    if n == 0 or not 0 <= i <= n:
        raise BadIndex(f"face {i} of a level-{n} squiggle")
    L = n + 1 - i
    return Squiggle(n, _tighten([h if h < L else h - 1 for h in s.heights]))


def squiggle_degeneracy(i: int, s: Squiggle) -> Squiggle:
    n = s.level
    if not 0 <= i <= n:
        raise BadIndex(f"degeneracy {i} of a level-{n} squiggle")
    L = n + 1 - i
    return Squiggle(n + 2, tuple(h if h < L else h + 1 for h in s.heights))


def squiggle_atomic(s: Squiggle, ambient: str = "adj") -> bool:
    """Atomic in ``Adj`` (no interior + or - instance) or in ``Mnd`` (no interior +)."""
    if s.width == 1:
        return False
    interior = s.heights[1:-1]
    if ambient == "mnd":
        return 0 not in interior
    return 0 not in interior and s.lines not in interior


def _runs(h: tuple, L: int) -> list[tuple[int, int]]:
    out, start = [], None
    for j, x in enumerate(h):
        if x >= L and start is None:
            start = j
        if x < L and start is not None:
            out.append((start, j - 1))
            start = None
    if start is not None:
        out.append((start, len(h) - 1))
    return out


def _run_chain(s: Squiggle) -> tuple[list[int], list[tuple]]:
    """Run counts per vertex and containment maps ``vertex i -> vertex i+1``."""
    n = s.level
    runs = [_runs(s.heights, n + 1 - i) for i in range(n + 1)]
    maps = []
    for i in range(n):
        coarse = runs[i + 1]
        maps.append(tuple(next(r for r, (a, b) in enumerate(coarse) if a <= lo and hi <= b)
                          for lo, hi in runs[i]))
    return [len(r) for r in runs], maps


def squiggle_to_chain(s: Squiggle) -> OrdinalChain:
    squiggle_validate(s)
    counts, maps = _run_chain(s)
    kind = s.kind
    if kind != "--":
        return OrdinalChain(kind, tuple(counts),
                            tuple(OrdinalMap(counts[i], counts[i + 1], m) for i, m in enumerate(maps)))
    gaps = [c - 1 for c in counts]
    gmaps = []
    for i, phi in enumerate(maps):
        # gap a of vertex i+1 lies inside gap gamma(a) of vertex i
        gamma = tuple(sum(1 for v in phi if v <= a) - 1 for a in range(gaps[i + 1]))
        gmaps.append(OrdinalMap(gaps[i + 1], gaps[i], gamma))
    return OrdinalChain(kind, tuple(gaps), tuple(gmaps))


def chain_to_squiggle(c: OrdinalChain) -> Squiggle:
    n = c.level
    if c.kind == "--":
        counts = [g + 1 for g in c.objects]
        maps = [tuple(sum(1 for a in gm.values if a < r) for r in range(counts[i]))
                for i, gm in enumerate(c.maps)]
    else:
        counts = list(c.objects)
        maps = [f.values for f in c.maps]

    def seq(i: int, r: int) -> list:
        if i == 0:
            return [n + 1]
        L = n + 1 - i
        children = [q for q in range(counts[i - 1]) if maps[i - 1][q] == r]
        if not children:
            return [L]
        out = []
        for j, q in enumerate(children):
            if j:
                out.append(L)
            out.extend(seq(i - 1, q))
        return out

    body: list = []
    for r in range(counts[n]):
        if r:
            body.append(0)
        body.extend(seq(n, r))
    if c.kind[1] == "+":
        body = [0] + body
    if c.kind[0] == "+":
        body = body + [0]
    if not body or (len(body) > 1 and body[0] == body[1] == 0):
        body = [0]
    return squiggle_validate(Squiggle(n + 1, tuple(body)))


def enumerate_squiggles(n: int, kind: str, max_width: int) -> list[Squiggle]:
    """Direct enumeration of valid squiggles of a kind with at most ``max_width`` heights."""
    top = n + 1
    start = 0 if kind[1] == "+" else top
    end = 0 if kind[0] == "+" else top
    out = []

    def rec(seq):
        if seq[-1] == end and squiggle_violations(Squiggle(n + 1, tuple(seq))) == []:
            out.append(Squiggle(n + 1, tuple(seq)))
        if len(seq) == max_width:
            return
        for h in range(top + 1):
            if h == seq[-1]:
                continue
            if len(seq) >= 2:
                up = seq[-1] > seq[-2]
                if up == (h > seq[-1]):
                    continue
            rec(seq + [h])

    rec([start])
    return out


# ---------------------------------------------------------------------------
# The adjunction category


class Adj(SimplicialCategory):
    """Two objects ``+`` and ``-``; hom-sets are ordinal nerves presented by squiggles."""

    kind = "adj"

    def __init__(self, d: int, size_bound: int):
        super().__init__(("+", "-"), d, name="Adj")
        self.size_bound = size_bound
        self.truncated = True

    def _hom_model(self, x, y):
        kind = x + y
        levels = [[chain_to_squiggle(c) for c in ordinal_chains(kind, m, self.size_bound)]
                  for m in range(self.dim_bound + 1)]
        return levels, squiggle_face, squiggle_degeneracy

    def _compose_model(self, x, y, z, g, f):
        # composites of valid squiggles are valid once tightened
        return _juxtapose(g, f)

    def _identity_model(self, x, m):
        return squiggle_identity(x, m)


def build_adj(d: int, size_bound: int) -> Adj:
    return Adj(d, size_bound)


F_SQUIGGLE = Squiggle(1, (1, 0))
U_SQUIGGLE = Squiggle(1, (0, 1))


# ---------------------------------------------------------------------------
# Strict 2-functors into Cat


def _power(T: Functor, k: int, B: FinCategory) -> Functor:
    return reduce(lambda acc, _: compose_functors(T, acc), range(k), identity_functor(B))


def _hstack(parts: list[NatTransformation], unit: NatTransformation) -> NatTransformation:
    """Horizontal composite with the first part outermost."""
    if not parts:
        return unit
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = horizontal(p, out)
    return out


@dataclass
class StrictReport:
    objects: dict = field(default_factory=dict)  # kind -> {size: Functor}
    arrows: dict = field(default_factory=dict)  # (kind, map) -> NatTransformation
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        return {"valid": self.ok, "objects": {k: sorted(v) for k, v in self.objects.items()},
                "arrows": len(self.arrows), "violations": self.violations[:20]}


class _Generators:
    """Iterated units, multiplications and counits of an adjunction or monad."""

    def __init__(self, B: FinCategory, T: Functor, eta: NatTransformation, mu: NatTransformation,
                 J: Adjunction | None = None):
        self.B, self.T, self.eta, self.mu, self.J = B, T, eta, mu, J

    def power(self, k: int) -> Functor:
        return _power(self.T, k, self.B)

    def mult(self, k: int) -> NatTransformation:
        """``T^k => T``: ``η`` for ``k = 0``, iterated ``μ`` otherwise."""
        if k == 0:
            return self.eta
        out = identity_nat(self.T)
        for _ in range(k - 1):
            out = vertical(self.mu, horizontal(identity_nat(self.T), out))
        return out

    def counit_power(self, k: int) -> NatTransformation:
        """``(FU)^k => id_A``."""
        J = self.J
        A = J.F.target
        out = identity_nat(identity_functor(A))
        for _ in range(k):
            out = horizontal(J.epsilon, out)
        return out

    def unit_power(self, k: int) -> NatTransformation:
        """``id_B => (UF)^k``."""
        out = identity_nat(identity_functor(self.B))
        for _ in range(k):
            out = horizontal(self.eta, out)
        return out


def _evaluate_map(gen: _Generators, kind: str, f: OrdinalMap) -> NatTransformation:
    J = gen.J
    fib = f.fibers()
    if kind == "++":
        ident = identity_nat(identity_functor(gen.B))
        return _hstack([gen.mult(k) for k in fib], ident)
    if kind == "-+":
        last = whisker_right(J.U, gen.counit_power(fib[-1] - 1))
        return _hstack([gen.mult(k) for k in fib[:-1]] + [last], None)
    if kind == "+-":
        first = whisker_left(gen.counit_power(fib[0] - 1), J.F)
        return _hstack([first] + [gen.mult(k) for k in fib[1:]], None)
    # "--": f is the Δ₊ map target -> source; each source gap spreads over its fiber
    parts = []
    for k in fib:
        if k == 0:
            parts.append(J.epsilon)
        else:
            parts.append(whisker_left(whisker_right(J.F, gen.unit_power(k - 1)), J.U))
    return _hstack(parts, identity_nat(identity_functor(J.F.target)))


def _object_functor(gen: _Generators, kind: str, o: int) -> Functor:
    J = gen.J
    if kind == "++":
        return gen.power(o)
    if kind == "-+":
        return compose_functors(gen.power(o - 1), J.U)
    if kind == "+-":
        return compose_functors(J.F, gen.power(o - 1))
    A = J.F.target
    FU = compose_functors(J.F, J.U)
    return reduce(lambda acc, _: compose_functors(FU, acc), range(o), identity_functor(A))


def _nat_eq(a: NatTransformation, b: NatTransformation) -> bool:
    return a.source == b.source and a.target == b.target and a.components == b.components


def _check_part(gen: _Generators, kind: str, size_bound: int, report: StrictReport):
    sizes = list(_sizes(kind, size_bound))
    objs = {o: _object_functor(gen, kind, o) for o in sizes}
    report.objects[kind] = objs
    for p in sizes:
        for q in sizes:
            src, tgt = (q, p) if kind == "--" else (p, q)
            for f in ordinal_maps(p, q, kind if kind != "--" else "++"):
                alpha = _evaluate_map(gen, kind, f)
                report.arrows[(kind, f)] = alpha
                bad = alpha.violations()
                if bad:
                    report.violations.append(f"{kind} {f!r}: {bad[0]}")
                if alpha.source != objs[src] or alpha.target != objs[tgt]:
                    report.violations.append(f"{kind} {f!r}: wrong boundary functors")
    for (k1, f), a in list(report.arrows.items()):
        if k1 != kind:
            continue
        if f.p == f.q and f.values == tuple(range(f.p)) and not _nat_eq(a, identity_nat(a.source)):
            report.violations.append(f"{kind}: identity {f!r} not sent to an identity")
        for (k2, g), b in list(report.arrows.items()):
            if k2 != kind:
                continue
            if kind == "--":
                if g.q != f.p:
                    continue
                # Δ₊ maps g then f give op arrows f then g
                lhs = report.arrows.get((kind, ordinal_compose(f, g)))
                rhs = vertical(b, a) if lhs is not None else None
            else:
                if f.q != g.p:
                    continue
                lhs = report.arrows.get((kind, ordinal_compose(g, f)))
                rhs = vertical(b, a) if lhs is not None else None
            if lhs is not None and not _nat_eq(lhs, rhs):
                report.violations.append(f"{kind}: composite of {f!r} and {g!r} not preserved")


def strict_monad_functor(M: Monad, size_bound: int) -> StrictReport:
    """``n ↦ T^n`` and monotone maps to composites of units and multiplications, validated."""
    problems = check_monad(M)
    if problems:
        raise InvalidStructure("invalid monad: " + "; ".join(problems))
    gen = _Generators(M.category, M.T, M.eta, M.mu)
    report = StrictReport()
    _check_part(gen, "++", size_bound, report)
    for (k, f), a in list(report.arrows.items()):
        for (_, g), b in list(report.arrows.items()):
            if f.p + g.p > size_bound or f.q + g.q > size_bound:
                continue
            s = report.arrows[("++", ordinal_sum(f, g))]
            if not _nat_eq(s, horizontal(a, b)):
                report.violations.append(f"ordinal sum {f!r} ⊕ {g!r} not sent to the horizontal composite")
    return report


def strict_adjunction_functor(J: Adjunction, size_bound: int) -> StrictReport:
    """All four hom parts of the strict 2-functor determined by an adjunction, validated.

    Besides functoriality on each part, every composite of squiggle 0- and
    1-arrows within the size bound is checked against the horizontal
    composite of the assigned data.
    """
    problems = check_adjunction(J)
    if problems:
        raise InvalidStructure("invalid adjunction: " + "; ".join(problems))
    M = induced_monad(J)
    gen = _Generators(J.F.source, M.T, M.eta, M.mu, J)
    report = StrictReport()
    for kind in KINDS:
        _check_part(gen, kind, size_bound, report)
    adj = Adj(1, size_bound)
    value = {}
    for x in adj.objects:
        for y in adj.objects:
            for m in (0, 1):
                for s in adj.hom(x, y).all_simplices(m):
                    sq = adj.materialize(x, y, s)
                    c = squiggle_to_chain(sq)
                    value[sq] = report.objects[c.kind][c.objects[0]] if m == 0 else report.arrows[(c.kind, c.maps[0])]
    for x, y, z in itertools.product(adj.objects, repeat=3):
        for m in (0, 1):
            for f in adj.hom(x, y).all_simplices(m):
                for g in adj.hom(y, z).all_simplices(m):
                    try:
                        gf = adj.compose(x, y, z, g, f)
                    except TruncationError:
                        continue
                    sf, sg, sgf = (adj.materialize(x, y, f), adj.materialize(y, z, g),
                                   adj.materialize(x, z, gf))
                    if m == 0:
                        ok = compose_functors(value[sg], value[sf]) == value[sgf]
                    else:
                        ok = _nat_eq(horizontal(value[sg], value[sf]), value[sgf])
                    if not ok:
                        report.violations.append(f"composite {sg!r} ∘ {sf!r} not preserved")
    report.squiggle_values = value
    return report


def monad_resolution(M: Monad, depth: int) -> dict:
    """The augmented cosimplicial resolution ``id => T => T² ...`` as tables.

    Keys are ``("coface", n, i)``: ``T^n => T^{n+1}`` inserting ``η`` at
    position ``i``, and ``("codegeneracy", n, i)``: ``T^{n+2} => T^{n+1}``
    multiplying positions ``i`` and ``i + 1``.
    """
    gen = _Generators(M.category, M.T, M.eta, M.mu)
    out = {}
    for n in range(depth + 1):
        for i in range(n + 1):
            f = OrdinalMap(n, n + 1, coface(n, i).values) if n else OrdinalMap(0, 1, ())
            out[("coface", n, i)] = _evaluate_map(gen, "++", f).components
        for i in range(n + 1):
            s = codegeneracy(n, i)
            out[("codegeneracy", n, i)] = _evaluate_map(gen, "++", OrdinalMap(n + 2, n + 1, s.values)).components
    return out
