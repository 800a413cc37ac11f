import json

import pytest

from hocoh import io
from hocoh.adj_mnd import Adj, Mnd
from hocoh.categories import check_adjunction, check_monad, find_category_isomorphism, induced_monad, nerve
from hocoh.corpus import categories, galois_adjunction, simplicial_sets, twisted_group_monad
from hocoh.enriched import ConstantSimplicialCategory, GroupNerveCategory
from hocoh.errors import InvalidStructure
from hocoh.realization import Realization
from hocoh.resolution import Resolution
from hocoh.simplicial import find_isomorphism


def roundtrip(data):
    return json.loads(json.dumps(data))


@pytest.mark.parametrize("name", sorted(simplicial_sets()))
def test_sset_round_trip(name):
    X = simplicial_sets()[name]
    Y = io.sset_from_json(roundtrip(io.sset_to_json(X)))
    assert Y.counts() == X.counts()
    assert find_isomorphism(X, Y) is not None
    assert io.sset_to_json(Y) == io.sset_to_json(X)


def test_nerve_with_tuple_ids_round_trips():
    N = nerve(categories()["square"], 2)
    data = roundtrip(io.sset_to_json(N))
    assert io.sset_to_json(io.sset_from_json(data)) == io.sset_to_json(N)


@pytest.mark.parametrize("name", sorted(categories()))
def test_category_round_trip(name):
    A = categories()[name]
    B = io.cat_from_json(roundtrip(io.cat_to_json(A)))
    assert find_category_isomorphism(A, B) is not None
    assert io.cat_to_json(B) == io.cat_to_json(A)


def test_invalid_category_rejected():
    data = io.cat_to_json(categories()["[2]"])
    # (1,2) after (0,1) must be (0,2); point it at (0,1) instead
    data["comp"] = [[g, f, [0, 1] if (g, f) == ([1, 2], [0, 1]) else h] for g, f, h in data["comp"]]
    with pytest.raises(InvalidStructure):
        io.cat_from_json(data)


def test_malformed_inputs_raise_invalid_structure():
    with pytest.raises(InvalidStructure):
        io.cat_from_json({"objects": [0]})
    with pytest.raises(InvalidStructure):
        io.sset_from_json({"dim_bound": 1, "simplices": [{"id": "e", "dim": 1, "faces": []}]})
    with pytest.raises(InvalidStructure):
        io.simplicial_category_from_json({"kind": "nope"}, 2, 4, 4, 4)


def test_monad_and_adjunction_round_trip():
    for M in (twisted_group_monad(), induced_monad(galois_adjunction())):
        M2 = io.monad_from_json(roundtrip(io.monad_to_json(M)))
        assert check_monad(M2) == []
        assert M2.tables() == M.tables()
    J = io.adjunction_from_json(roundtrip(io.adjunction_to_json(galois_adjunction())))
    assert check_adjunction(J) == []


@pytest.mark.parametrize("data,cls", [
    ({"kind": "constant", "category": io.cat_to_json(categories()["[1]"])}, ConstantSimplicialCategory),
    ({"kind": "group-nerve", "order": 2}, GroupNerveCategory),
    ({"kind": "resolution", "category": io.cat_to_json(categories()["[2]"])}, Resolution),
    ({"kind": "realization", "sset": io.sset_to_json(simplicial_sets()["horn21"])}, Realization),
    ({"kind": "adj", "size_bound": 2}, Adj),
    ({"kind": "mnd", "size_bound": 2}, Mnd),
])
def test_simplicial_category_kinds(data, cls):
    C = io.simplicial_category_from_json(roundtrip(data), 2, 3, 3, 3)
    assert isinstance(C, cls)
    summary = io.simplicial_category_summary(C, arrows=False)
    assert summary["dim_bound"] == 2
    assert len(summary["homs"]) == len(C.objects) ** 2


def test_dumps_is_deterministic():
    X = nerve(categories()["square"], 2)
    assert io.dumps(io.sset_to_json(X)) == io.dumps(io.sset_to_json(X))
