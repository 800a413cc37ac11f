"""Write the bundled corpus as JSON files usable by the command line tool."""

import argparse
import json
from pathlib import Path

from hocoh import io
from hocoh.adj_mnd import F_SQUIGGLE, U_SQUIGGLE, Squiggle
from hocoh.categories import induced_monad, nerve
from hocoh.corpus import categories, galois_adjunction, simplicial_sets, twisted_group_monad


def write(path: Path, data) -> None:
    path.write_text(json.dumps(io.to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    out = Path(p.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    cats = categories()
    for name, A in cats.items():
        write(out / f"cat_{name.strip('[]')}.json", io.cat_to_json(A))
    for name, X in simplicial_sets().items():
        write(out / f"sset_{name}.json", io.sset_to_json(X))
    write(out / "nerve_of_poset.json", io.sset_to_json(nerve(cats["[2]"], 3)))
    write(out / "constant_square.json", {"kind": "constant", "category": io.cat_to_json(cats["square"])})
    write(out / "nerve_bz2.json", {"kind": "group-nerve", "order": 2})
    write(out / "adj.json", {"kind": "adj"})
    write(out / "mnd.json", {"kind": "mnd"})
    J = galois_adjunction()
    write(out / "galois_adjunction.json", io.adjunction_to_json(J))
    write(out / "galois_monad.json", io.monad_to_json(induced_monad(J)))
    write(out / "twisted_monad.json", io.monad_to_json(twisted_group_monad()))
    write(out / "squiggle_f.json", F_SQUIGGLE.to_json())
    write(out / "squiggle_u.json", U_SQUIGGLE.to_json())
    write(out / "squiggle_t.json", Squiggle(1, (0, 1, 0)).to_json())
    print(f"wrote {len(list(out.glob('*.json')))} files to {out}")


if __name__ == "__main__":
    main()
