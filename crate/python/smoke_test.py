#!/usr/bin/env python3
"""Smoke test for the hypack Python extension module.

Builds are produced by `cargo build -p hypack-python` as libhypack.so; this
script copies the shared object into a temp directory under the importable
name hypack.so, imports it, and checks a handful of frozen reference values.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent

checks = 0


def check(label, ok):
    global checks
    checks += 1
    print(f"pass  {label}" if ok else f"FAIL  {label}")
    if not ok:
        sys.exit(1)


def close(a, b, tol):
    return abs(a - b) <= tol


def locate_extension():
    candidates = [
        REPO / "target" / profile / "libhypack.so"
        for profile in ("debug", "release")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "libhypack.so not found; run `cargo build -p hypack-python` first"
    )


def main():
    so = locate_extension()
    tmp = Path(tempfile.mkdtemp(prefix="hypack-smoke-"))
    shutil.copy(so, tmp / "hypack.so")
    sys.path.insert(0, str(tmp))

    import hypack

    # Lobachevsky function: maximum at π/6, odd, π-periodic.
    L = hypack.lobachevsky
    check(
        "lobachevsky(pi/6) = 0.50747080…",
        close(L(math.pi / 6), 0.50747080320482681, 1e-12),
    )
    check("lobachevsky is odd", close(L(-0.7), -L(0.7), 1e-13))
    check("lobachevsky is pi-periodic", close(L(0.7 + math.pi), L(0.7), 1e-12))

    # Orthoscheme volume of (5, 4, 3) is one 48th of the cell volume.
    vol = hypack.orthoscheme_volume(5.0, 4.0, 3.0)
    check("orthoscheme_volume(5,4,3) = 0.16596371…", close(vol, 0.16596371, 1e-6))

    # Truncated octahedron cell at p = 5 and its congruent packing.
    oct5 = hypack.Cell("octahedron", 5.0)
    check("oct p=5 h", close(oct5.h, 0.69128565, 1e-6))
    check("oct p=5 volume/48", close(oct5.volume / 48.0, 0.16596371, 1e-6))
    check("oct p=5 vertex count", oct5.vertex_count == 6)
    check(
        "oct p=5 congruent density",
        close(oct5.density("congruent", 0.0), 0.76892924, 1e-6),
    )

    # Truncated cube cell at p = 7 and the six-ball packing δ₃.
    cube7 = hypack.build_cell("cube", 7.0)
    check("cube p=7 h", close(cube7.h, 1.03799291, 1e-6))
    check("cube p=7 s is set", cube7.s is not None and close(cube7.s, cube7.h + 0.41108181, 1e-6))
    lo, hi = cube7.x_interval("delta3")
    check("cube p=7 delta3 interval start", lo == 0.0)
    check("cube p=7 delta3 interval end", close(hi, 0.41108181, 1e-6))
    check(
        "cube p=7 delta3 density at end",
        close(cube7.density("delta3", hi), 0.84931352, 1e-6),
    )
    x_star, d_star = cube7.maximize_over_x("delta3")
    check("cube p=7 delta3 argmax at interval end", close(x_star, hi, 1e-9))
    check("cube p=7 delta3 maximum", close(d_star, 0.84931352, 1e-6))

    # Truncation height route agrees with the cell construction.
    check(
        "truncation_height(7,3,4) matches cell h",
        close(hypack.truncation_height(7.0, 3.0, 4.0), cube7.h, 1e-10),
    )

    # Optimum of δ₃ over p under the end policy.
    p_star, delta = hypack.maximize_over_p("cube", "delta3", "end", 6.0, 7.0)
    check("delta3 optimum location", close(p_star, 6.26384, 1e-3))
    check("delta3 optimum value", close(delta, 0.86145, 1e-4))

    # Domain errors become ValueError.
    try:
        hypack.Cell("cube", 6.0)
        check("Cell('cube', 6.0) raises ValueError", False)
    except ValueError as e:
        check("Cell('cube', 6.0) raises ValueError", "admissible range" in str(e))
    try:
        oct5.density("delta3", 0.0)
        check("delta3 on octahedron raises ValueError", False)
    except ValueError:
        check("delta3 on octahedron raises ValueError", True)

    # Full verification manifest.
    reports = hypack.run_verification()
    check("manifest is substantial", len(reports) >= 80)
    check("all manifest checks pass", all(r[4] for r in reports))

    print(f"ok    {checks} checks")


if __name__ == "__main__":
    main()
