#!/usr/bin/env python3
"""Regenerate the JSON data files shipped inside the package.

Per fixture: an expectations file plus, at the sample point, the check
algebra, the induced operator, the embedding, and u as an element file.
Also writes the small example inputs referenced by the README.

Run from the repository root after changing the fixture catalog:

    python3 scripts/export_fixture_data.py
"""
from __future__ import annotations

import json
from pathlib import Path

from nonassoc import fixtures as fx
from nonassoc.constructions import construction, derive
from nonassoc.serial import (
    algebra_to_dict,
    element_to_dict,
    embedding_to_dict,
    operator_to_dict,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "nonassoc" / "data"


def dump(obj: dict, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")
    print(f"wrote {path.relative_to(DATA.parent.parent.parent)}")


def main() -> None:
    for name in fx.list_fixtures():
        bundle = fx.load_fixture(name)
        m = fx.materialize(bundle)
        expectations = {
            "fixture": name,
            "rows": [
                {"check": r.check, "expect": "pass" if r.expect else "fail"}
                for r in bundle.rows
            ],
        }
        dump(expectations, DATA / "fixtures" / f"{name}.expectations.json")
        dump(algebra_to_dict(m.algebras["A"]), DATA / "fixtures" / f"{name}.algebra.json")
        dump(algebra_to_dict(m.ambient), DATA / "fixtures" / f"{name}.ambient.json")
        dump(operator_to_dict(m.operator), DATA / "fixtures" / f"{name}.operator.json")
        dump(embedding_to_dict(m.embedding), DATA / "fixtures" / f"{name}.embedding.json")
        dump(element_to_dict(m.u), DATA / "fixtures" / f"{name}.u.json")

    # Small ready-to-run inputs for the command-line examples.
    from nonassoc.algebra import make_algebra

    null2 = make_algebra(2, [])
    dump(algebra_to_dict(null2), DATA / "examples" / "null2.json")

    m3 = fx.materialize(fx.load_fixture("F3"))
    f3plus = derive(m3.algebras["A"], None, construction("jordan_plus"))
    dump(algebra_to_dict(f3plus), DATA / "examples" / "f3plus.json")

    grid = {"points": [["1", "-1", "1", "-1"], ["2", "-4", "1", "-2"], ["0", "0", "0", "0"]]}
    dump(grid, DATA / "examples" / "grid_f9.json")


if __name__ == "__main__":
    main()
