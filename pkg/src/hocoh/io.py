"""JSON encodings of the package's values.

Identifiers may be nested tuples; JSON turns them into lists, so decoding
converts lists back to tuples wherever an identifier is expected.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

from .adj_mnd import Adj, Mnd
from .categories import (
    Adjunction,
    FinCategory,
    Functor,
    Monad,
    NatTransformation,
    compose_functors,
    identity_functor,
)
from .enriched import ConstantSimplicialCategory, GroupNerveCategory
from .realization import Realization
from .resolution import Resolution
from .errors import InvalidStructure
from .simplicial import CanonicalSimplex, FiniteSimplicialSet, sort_key


def freeze(x: Any) -> Any:
    """Lists to tuples, recursively, so JSON values can serve as identifiers."""
    if isinstance(x, list):
        return tuple(freeze(v) for v in x)
    return x


def to_jsonable(x: Any) -> Any:
    """Plain JSON data for any value produced by the library."""
    if hasattr(x, "to_json"):
        return to_jsonable(x.to_json())
    if isinstance(x, CanonicalSimplex):
        return {"base": to_jsonable(x.base), "epi": list(x.epi)}
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(x, key=sort_key)]
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: to_jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def dumps(x: Any) -> str:
    return json.dumps(to_jsonable(x), indent=2, ensure_ascii=False, sort_keys=True)


# ---------------------------------------------------------------------------
# Simplicial sets


def sset_to_json(X: FiniteSimplicialSet) -> dict:
    simplices = []
    for m in range(X.dim_bound + 1):
        for x in X.nondegenerate(m):
            entry = {"id": to_jsonable(x), "dim": m}
            if m:
                entry["faces"] = [{"base": to_jsonable(c.base), "epi": list(c.epi)} for c in X.faces_of(x)]
            simplices.append(entry)
    out = {"dim_bound": X.dim_bound, "simplices": simplices, "counts": list(X.counts())}
    if X.name:
        out["name"] = X.name
    if X.meta.get("complete"):
        out["complete"] = True
    if "horn" in X.meta:
        out["horn"] = list(X.meta["horn"])
    return out


def sset_from_json(data: dict) -> FiniteSimplicialSet:
    try:
        d = int(data["dim_bound"])
        levels: list[list] = [[] for _ in range(d + 1)]
        faces = {}
        for entry in data["simplices"]:
            x = freeze(entry["id"])
            m = int(entry["dim"])
            if m > d:
                raise InvalidStructure(f"simplex {x!r} above dim_bound")
            levels[m].append(x)
            if m:
                fs = entry["faces"]
                if len(fs) != m + 1:
                    raise InvalidStructure(f"simplex {x!r} needs {m + 1} faces")
                faces[x] = tuple(CanonicalSimplex(freeze(f["base"]), tuple(f["epi"])) for f in fs)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStructure(f"malformed simplicial set: {exc!r}") from None
    X = FiniteSimplicialSet(d, levels, faces, name=data.get("name"))
    if data.get("complete"):
        X.meta["complete"] = True
    if "horn" in data:
        X.meta["horn"] = tuple(data["horn"])
    return X


# ---------------------------------------------------------------------------
# Categories, functors, monads, adjunctions


def cat_to_json(A: FinCategory) -> dict:
    out = {
        "objects": to_jsonable(list(A.objects)),
        "morphisms": [{"id": to_jsonable(f), "src": to_jsonable(s), "tgt": to_jsonable(t)}
                      for f, (s, t) in A.morphisms.items()],
        "identities": {str(to_jsonable(x)): to_jsonable(i) for x, i in A.identities.items()},
        "comp": [[to_jsonable(g), to_jsonable(f), to_jsonable(h)] for (g, f), h in A.comp.items()],
    }
    if A.name:
        out["name"] = A.name
    if A.truncated:
        out["truncated"] = True
    return out


def cat_from_json(data: dict) -> FinCategory:
    try:
        objects = tuple(freeze(x) for x in data["objects"])
        by_str = {str(to_jsonable(x)): x for x in objects}
        morphisms = {freeze(m["id"]): (freeze(m["src"]), freeze(m["tgt"])) for m in data["morphisms"]}
        identities = {by_str[k]: freeze(v) for k, v in data["identities"].items()}
        comp = {(freeze(g), freeze(f)): freeze(h) for g, f, h in data.get("comp", [])}
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStructure(f"malformed category: {exc!r}") from None
    A = FinCategory(objects, morphisms, identities, comp, name=data.get("name"),
                    truncated=bool(data.get("truncated", False)))
    bad = A.violations()
    if bad:
        raise InvalidStructure("invalid category: " + "; ".join(bad[:5]))
    return A


def functor_to_json(F: Functor) -> dict:
    return {"obj": [[to_jsonable(x), to_jsonable(y)] for x, y in F.obj.items()],
            "mor": [[to_jsonable(f), to_jsonable(g)] for f, g in F.mor.items()]}


def functor_from_json(data: dict, A: FinCategory, B: FinCategory) -> Functor:
    return Functor(A, B, {freeze(x): freeze(y) for x, y in data["obj"]},
                   {freeze(f): freeze(g) for f, g in data["mor"]})


def nat_from_json(data, F: Functor, G: Functor) -> NatTransformation:
    return NatTransformation(F, G, {freeze(x): freeze(m) for x, m in data})


def monad_to_json(M: Monad) -> dict:
    return {"category": cat_to_json(M.category), "T": functor_to_json(M.T),
            "eta": [[to_jsonable(x), to_jsonable(m)] for x, m in M.eta.components.items()],
            "mu": [[to_jsonable(x), to_jsonable(m)] for x, m in M.mu.components.items()]}


def monad_from_json(data: dict) -> Monad:
    try:
        B = cat_from_json(data["category"])
        T = functor_from_json(data["T"], B, B)
        eta = nat_from_json(data["eta"], identity_functor(B), T)
        mu = nat_from_json(data["mu"], compose_functors(T, T), T)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStructure(f"malformed monad: {exc!r}") from None
    return Monad(T, eta, mu)


def adjunction_to_json(J: Adjunction) -> dict:
    return {"B": cat_to_json(J.F.source), "A": cat_to_json(J.F.target),
            "F": functor_to_json(J.F), "U": functor_to_json(J.U),
            "eta": [[to_jsonable(x), to_jsonable(m)] for x, m in J.eta.components.items()],
            "epsilon": [[to_jsonable(x), to_jsonable(m)] for x, m in J.epsilon.components.items()]}


def adjunction_from_json(data: dict) -> Adjunction:
    try:
        B, A = cat_from_json(data["B"]), cat_from_json(data["A"])
        F = functor_from_json(data["F"], B, A)
        U = functor_from_json(data["U"], A, B)
        eta = nat_from_json(data["eta"], identity_functor(B), compose_functors(U, F))
        eps = nat_from_json(data["epsilon"], compose_functors(F, U), identity_functor(A))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidStructure(f"malformed adjunction: {exc!r}") from None
    return Adjunction(F, U, eta, eps)


# ---------------------------------------------------------------------------
# Simplicial categories


def simplicial_category_from_json(data: dict, d: int, len_bound: int, width_bound: int, size_bound: int):
    kind = data.get("kind")
    if kind == "constant":
        return ConstantSimplicialCategory(cat_from_json(data["category"]), d)
    if kind == "group-nerve":
        return GroupNerveCategory(int(data.get("order", 2)), d)
    if kind == "resolution":
        return Resolution(cat_from_json(data["category"]), d, int(data.get("len_bound", len_bound)))
    if kind == "realization":
        return Realization(sset_from_json(data["sset"]), d, int(data.get("width_bound", width_bound)))
    if kind == "adj":
        return Adj(d, int(data.get("size_bound", size_bound)))
    if kind == "mnd":
        return Mnd(d, int(data.get("size_bound", size_bound)))
    raise InvalidStructure(f"unknown simplicial category kind {kind!r}")


def simplicial_category_summary(C, arrows: bool = True) -> dict:
    """Objects, per-hom nondegenerate counts and (optionally) the nondegenerate arrows."""
    homs = []
    for x in C.objects:
        for y in C.objects:
            H = C.hom(x, y)
            entry = {"src": to_jsonable(x), "tgt": to_jsonable(y), "counts": list(H.counts())}
            if arrows:
                entry["arrows"] = [[to_jsonable(a) for a in H.nondegenerate(m)] for m in range(C.dim_bound + 1)]
            homs.append(entry)
    return {"kind": C.kind, "name": C.name, "objects": to_jsonable(list(C.objects)),
            "dim_bound": C.dim_bound, "truncated": bool(C.truncated), "homs": homs}


def load_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
