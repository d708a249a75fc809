#!/usr/bin/env python3
"""Regenerate the frozen census fixtures used by the regression tests.

Run from the repository root:

    python3 tools/freeze_fixtures.py

Deletes tests/fixtures/census_counts.json and rebuilds it from fresh
censuses, so every frozen number is tool-produced.
"""

import sys
from pathlib import Path

from bicirc.analysis import apply_fixture
from bicirc.bicircular import BicircularMatroid
from bicirc.double_circuit import enumerate_oracle, enumerate_structural
from bicirc.generators import dodecahedron, petersen


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "census_counts.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    if out.exists():
        out.unlink()
    jobs = [
        (petersen(), enumerate_oracle),
        (petersen(), enumerate_structural),
        (dodecahedron(), enumerate_structural),
    ]
    for graph, enumerate_fn in jobs:
        census = enumerate_fn(
            BicircularMatroid(graph),
            progress=lambda msg: print(f"  {msg}", file=sys.stderr),
        )
        record = apply_fixture(out, census)
        print(f"{record['key']}: {record['status']} (total={census.total})")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
