"""The free resolution of a category as a simplicial category of bracketed strings.

An ``n``-arrow is a string ``f1, ..., fk`` of composable non-identity
morphisms together with a descending chain of position sets
``{0..k} = T0 ⊇ T1 ⊇ ... ⊇ Tn ⊇ {0, k}``. Only ``T1..Tn`` are stored
(coarsest last). Face ``0`` composes within the blocks cut out by ``T1``;
face ``i > 0`` forgets ``Ti``. Degeneracy ``i`` repeats ``Ti``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Sequence

from .categories import FinCategory
from .enriched import SimplicialCategory
from .errors import BadIndex, DomainMismatch
from .simplicial import Operator, sort_key


@dataclass(frozen=True)
class ResolutionArrow:
    src: Hashable
    tgt: Hashable
    string: tuple
    levels: tuple  # T1 ⊇ ... ⊇ Tn, each a sorted tuple of positions

    @property
    def level(self) -> int:
        return len(self.levels)

    @property
    def length(self) -> int:
        return len(self.string)

    def chain(self) -> tuple:
        """Full chain ``(T0, T1, ..., Tn)`` including the implicit finest set."""
        return (tuple(range(self.length + 1)),) + self.levels

    def is_identity(self) -> bool:
        return not self.string

    def is_atomic(self) -> bool:
        k = self.length
        if k == 0:
            return False
        if self.level == 0:
            return k == 1
        return self.levels[-1] == (0, k)

    def violations(self, A: FinCategory | None = None) -> list[str]:
        bad = []
        k = self.length
        prev = set(range(k + 1))
        for i, T in enumerate(self.levels, 1):
            s = set(T)
            if tuple(sorted(s)) != tuple(T):
                bad.append(f"T{i} not sorted")
            if not s <= prev:
                bad.append(f"T{i} not contained in T{i - 1}")
            if 0 not in s or k not in s:
                bad.append(f"T{i} misses an endpoint")
            prev = s
        if A is not None:
            for f in self.string:
                if A.is_identity(f):
                    bad.append(f"identity {f!r} inside the string")
            for f, g in zip(self.string, self.string[1:]):
                if A.tgt(f) != A.src(g):
                    bad.append(f"{f!r}, {g!r} not composable")
            if self.string and (A.src(self.string[0]) != self.src or A.tgt(self.string[-1]) != self.tgt):
                bad.append("endpoints disagree with the string")
            if not self.string and self.src != self.tgt:
                bad.append("empty string between distinct objects")
        return bad

    def __repr__(self):
        body = ",".join(map(str, self.string)) or f"id_{self.src}"
        lv = "".join("{" + ",".join(map(str, T)) + "}" for T in self.levels)
        return f"[{body}|{lv}]"

    def to_json(self) -> dict:
        return {"src": self.src, "tgt": self.tgt, "string": list(self.string),
                "levels": [list(T) for T in self.levels]}


def identity_arrow(x, n: int) -> ResolutionArrow:
    return ResolutionArrow(x, x, (), ((0,),) * n)


def collapse(A: FinCategory, string: Sequence, T: Sequence[int]) -> tuple[tuple, dict]:
    """Compose ``string`` within the blocks cut out by ``T``.

    Returns the new string and the map from positions in ``T`` to new
    positions. Blocks composing to an identity are dropped.
    """
    new, where = [], {T[0]: 0}
    for a, b in zip(T, T[1:]):
        h = A.compose_path(string[a:b])
        if not A.is_identity(h):
            new.append(h)
        where[b] = len(new)
    return tuple(new), where


def _normalize(A: FinCategory, a: ResolutionArrow, chain: Sequence[Sequence[int]]) -> ResolutionArrow:
    """Arrow for ``chain`` (finest first) over ``a.string``, collapsing to ``chain[0]``."""
    new, where = collapse(A, a.string, chain[0])
    levels = tuple(tuple(sorted({where[p] for p in T})) for T in chain[1:])
    return ResolutionArrow(a.src, a.tgt, new, levels)


def res_face(A: FinCategory, i: int, a: ResolutionArrow) -> ResolutionArrow:
    n = a.level
    if n == 0 or not 0 <= i <= n:
        raise BadIndex(f"face {i} of a level-{n} arrow")
    c = a.chain()
    return _normalize(A, a, c[:i] + c[i + 1 :])


def res_degeneracy(A: FinCategory, i: int, a: ResolutionArrow) -> ResolutionArrow:
    n = a.level
    if not 0 <= i <= n:
        raise BadIndex(f"degeneracy {i} of a level-{n} arrow")
    c = a.chain()
    return ResolutionArrow(a.src, a.tgt, a.string, (c[: i + 1] + c[i:])[1:])


def res_act(A: FinCategory, op: Operator, a: ResolutionArrow) -> ResolutionArrow:
    """Action of a simplicial operator ``[m] -> [n]`` on a level-``n`` arrow."""
    if op.target != a.level:
        raise DomainMismatch("operator target differs from the arrow level")
    c = a.chain()
    return _normalize(A, a, [c[j] for j in op.values])


def res_compose(g: ResolutionArrow, f: ResolutionArrow) -> ResolutionArrow:
    """``g ∘ f``: concatenate strings and merge position sets."""
    if g.level != f.level:
        raise DomainMismatch("composition needs equal levels")
    if f.tgt != g.src:
        raise DomainMismatch(f"cannot compose {g!r} after {f!r}")
    k = f.length
    levels = tuple(tuple(sorted(set(Tf) | {p + k for p in Tg})) for Tf, Tg in zip(f.levels, g.levels))
    return ResolutionArrow(f.src, g.tgt, f.string + g.string, levels)


def augment(A: FinCategory, a: ResolutionArrow):
    """The composite of the string in ``A``."""
    return A.compose_path(a.string, start=a.src)


def extra_degeneracy(a: ResolutionArrow) -> ResolutionArrow:
    """Adjoin the coarsest level ``{0, k}``."""
    k = a.length
    return ResolutionArrow(a.src, a.tgt, a.string, a.levels + (tuple(sorted({0, k})),))


def section(A: FinCategory, f) -> ResolutionArrow:
    """The level-0 arrow ``(f)`` over a morphism, empty for identities."""
    s, t = A.morphisms[f]
    return ResolutionArrow(s, t, () if A.is_identity(f) else (f,), ())


def contraction_violations(A: FinCategory, x, y, d: int, len_bound: int) -> list[str]:
    """Check that ``augment`` is simplicial and ``extra_degeneracy`` splits it on ``hom(x, y)``.

    With ``h`` the extra degeneracy on level-``n`` arrows: ``d_{n+1} h = id``,
    ``d_i h = h d_i`` for ``i <= n`` (``n >= 1``), ``d_0 h = section ∘ augment``
    at level 0, ``s_i h = h s_i`` for ``i <= n`` and ``h h = s_{n+1} h``.
    """
    bad = []
    for n in range(d + 1):
        for a in resolution_arrows(A, x, y, n, len_bound):
            e = augment(A, a)
            h = extra_degeneracy(a)
            if res_face(A, n + 1, h) != a:
                bad.append(f"d{n + 1} h {a!r} != {a!r}")
            if n == 0 and res_face(A, 0, h) != section(A, e):
                bad.append(f"d0 h {a!r} is not the section of its augmentation")
            for i in range(n + 1):
                if n and augment(A, res_face(A, i, a)) != e:
                    bad.append(f"augment changes under d{i} on {a!r}")
                if augment(A, res_degeneracy(A, i, a)) != e:
                    bad.append(f"augment changes under s{i} on {a!r}")
                if n and res_face(A, i, h) != extra_degeneracy(res_face(A, i, a)):
                    bad.append(f"d{i} h != h d{i} on {a!r}")
                if res_degeneracy(A, i, h) != extra_degeneracy(res_degeneracy(A, i, a)):
                    bad.append(f"s{i} h != h s{i} on {a!r}")
            if extra_degeneracy(h) != res_degeneracy(A, n + 1, h):
                bad.append(f"h h != s{n + 1} h on {a!r}")
    for f in A.hom(x, y):
        if augment(A, section(A, f)) != f:
            bad.append(f"augment ∘ section moves {f!r}")
    return bad


def atomic_split(a: ResolutionArrow) -> list[ResolutionArrow]:
    """Split an arrow at its coarsest cut points into atomic pieces (path order)."""
    if a.is_identity():
        return []
    cuts = a.levels[-1] if a.levels else tuple(range(a.length + 1))
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        s = a.string[lo:hi]
        levels = tuple(tuple(p - lo for p in T if lo <= p <= hi) for T in a.levels)
        pieces.append(ResolutionArrow(None, None, s, levels))
    return pieces


def strings(A: FinCategory, x, y, len_bound: int) -> list[tuple]:
    """Composable strings of non-identity morphisms from ``x`` to ``y`` of length ``<= len_bound``."""
    gens = sorted(A.non_identities(), key=sort_key)
    out = [()] if x == y else []
    frontier = [(f,) for f in gens if A.src(f) == x]
    for _ in range(len_bound):
        out.extend(s for s in frontier if A.tgt(s[-1]) == y)
        frontier = [s + (g,) for s in frontier for g in gens if A.src(g) == A.tgt(s[-1])]
    return out


def strings_overflow(A: FinCategory, x, y, len_bound: int) -> bool:
    return any(len(s) == len_bound + 1 for s in strings(A, x, y, len_bound + 1))


def chains(k: int, n: int) -> list[tuple]:
    """All chains ``T1 ⊇ ... ⊇ Tn`` over positions ``0..k``, indexed by interior depths."""
    interior = range(1, k)
    out = []
    for depth in itertools.product(range(n + 1), repeat=max(k - 1, 0)):
        levels = []
        for i in range(1, n + 1):
            levels.append(tuple([0] + [p for p, e in zip(interior, depth) if e >= i] + ([k] if k else [])))
        out.append(tuple(levels))
    return out


def resolution_arrows(A: FinCategory, x, y, n: int, len_bound: int) -> list[ResolutionArrow]:
    out = []
    for s in strings(A, x, y, len_bound):
        for levels in chains(len(s), n):
            out.append(ResolutionArrow(x, y, s, levels))
    out.sort(key=lambda a: (a.length, sort_key(a.string), a.levels))
    return out


class Resolution(SimplicialCategory):
    """The free resolution truncated at level ``dim_bound`` and string length ``len_bound``."""

    kind = "resolution"

    def __init__(self, A: FinCategory, dim_bound: int, len_bound: int):
        super().__init__(A.objects, dim_bound, name=f"res({A.name})")
        self.category = A
        self.len_bound = len_bound
        self.truncated = A.truncated or any(
            strings_overflow(A, x, y, len_bound) for x in A.objects for y in A.objects)

    def _hom_model(self, x, y):
        A = self.category
        levels = [resolution_arrows(A, x, y, m, self.len_bound) for m in range(self.dim_bound + 1)]
        return levels, (lambda i, a: res_face(A, i, a)), (lambda i, a: res_degeneracy(A, i, a))

    def _compose_model(self, x, y, z, g, f):
        return res_compose(g, f)

    def _identity_model(self, x, m):
        return identity_arrow(x, m)


def build_resolution(A: FinCategory, d: int, len_bound: int) -> Resolution:
    return Resolution(A, d, len_bound)
