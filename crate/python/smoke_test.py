#!/usr/bin/env python3
"""Smoke test for the hurwitz_py extension module.

Builds nothing itself: run `cargo build -p hurwitz-py --release` (or debug)
first.  The script locates the compiled cdylib, exposes it under the module
name Python expects, and checks a handful of known values end to end.
"""

import json
import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libhurwitz_py.so",
        REPO / "target" / "debug" / "libhurwitz_py.so",
        REPO / "target" / "release" / "libhurwitz_py.dylib",
        REPO / "target" / "debug" / "libhurwitz_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p hurwitz-py --release")
    stage = Path(tempfile.mkdtemp(prefix="hurwitz_py_"))
    shutil.copy2(built, stage / ("hurwitz_py" + built.suffix))
    sys.path.insert(0, str(stage))
    import hurwitz_py

    return hurwitz_py


def main():
    hz = load_module()

    # Headline Hurwitz numbers, cross-checked between both engines.
    assert hz.hurwitz([4], [2, 2], 1, True, "both") == Fraction(8)
    assert hz.hurwitz([4], [2, 2], 1, False, "both") == Fraction(6)
    assert hz.hurwitz([2], [1, 1], 0, False, "both") == Fraction(1, 2)
    assert hz.structure_delta([4], [2, 2], 1) == Fraction(2)
    assert hz.structure_delta([2], [2], 1) == Fraction(1, 2)
    assert hz.structure_delta([3, 1], [2, 2], 1) == Fraction(0)
    print("ok: hurwitz numbers and structure delta")

    classes = json.loads(hz.graphs_json([4], [2, 2], 1))
    assert len(classes) == 6
    weights = sorted(Fraction(c["multiplicity"]) * c["orderings"] for c in classes)
    assert sum(weights) == Fraction(8)
    assert all(set(c["graph"]) >= {"vertices", "edges", "in_ends", "out_ends", "genus"} for c in classes)
    print("ok: monodromy graph classes")

    assert hz.genus0_f([8, 2], [6, 4]) == Fraction(6)
    assert hz.genus0_f([4, 2], [6]) == Fraction(1)
    assert hz.genus0_walls(2, 2) == [([1], [1]), ([1], [2])]
    assert len(hz.genus0_walls(2, 3)) == 6
    crossing = hz.wall_crossing([1], [1], [8, 2], [6, 4], [6, 4], [8, 2])
    assert crossing == Fraction(0)
    print("ok: genus-0 structure function and walls")

    assert [hz.egf_coefficient("P", n) for n in range(7)] == [1, 1, 1, 2, 5, 16, 61]
    assert [hz.egf_coefficient("C", n) for n in (2, 4, 6, 8, 10)] == [1, 4, 48, 1088, 39680]
    assert hz.min_paths([(1, 2), (3, 4)], [(1, 3), (2, 4)], 4) == (4, 4)
    assert hz.min_paths([(1, 2)], [(3, 4)], 4) == (2, 2)
    assert hz.count_walks([], [], 3, 2) == 3
    print("ok: restricted Cayley graph counts")

    sigma = hz.Permutation("(1 2 3)", 3)
    tau = hz.Permutation("(1 2)", 3)
    assert str(tau.compose(tau)) == "id"
    assert sigma.compose(sigma).cycle_type() == [3]
    assert sigma.inverse() == hz.Permutation("(1 3 2)", 3)
    assert not sigma.is_involution() and tau.is_involution()
    assert sigma.apply(1) == 2
    print("ok: permutations")

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
