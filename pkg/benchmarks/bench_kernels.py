"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]

Each kernel runs on the same inputs under both backends; the results are
checked for equality before the timings are reported.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import timeit
from itertools import combinations

import numpy as np

from fanostab import kernels
from fanostab.hypercore import Hypergraph3, bn, complete


def _cases():
    rng = random.Random(1)
    out = []
    for n in (40, 50):
        E = bn(n).edge_array()
        out.append((f"find_fano bn({n})", "find_fano", (n, E)))
    E = Hypergraph3(30, [t for t in combinations(range(30), 3) if rng.random() < 0.3]).edge_array()
    out.append(("find_fano random(30, 0.3)", "find_fano", (30, E)))
    for n in (16, 24):
        out.append((f"octahedron_pair_total complete({n})", "octahedron_pair_total", (n, complete(n).edge_array())))
    out.append(("octahedron_pair_total bn(30)", "octahedron_pair_total", (30, bn(30).edge_array())))
    pairs = [p for p in combinations(range(120), 2) if rng.random() < 0.4]
    out.append(("c4_count G(120, 0.4)", "c4_count", (120, pairs)))
    M = np.zeros((60, 60), dtype=np.int64)
    for u, v in combinations(range(60), 2):
        M[u, v] = M[v, u] = rng.randint(0, 3)
    vs = list(range(60))
    out.append(("first_heavy_triple 60, bound 99", "first_heavy_triple", (M, vs, 99)))
    out.append(("first_heavy_quadruple 60, bound 99", "first_heavy_quadruple", (M, vs, 99)))
    return out


def run(repeat: int) -> list[dict]:
    backends = kernels.available_backends()
    rows = []
    for label, name, args in _cases():
        row = {"case": label}
        results = {}
        for bname, mod in backends.items():
            fn = getattr(mod, name)
            results[bname] = fn(*args)
            row[bname] = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        if "cython" in row:
            row["speedup"] = row["python"] / max(row["cython"], 1e-9)
        rows.append(row)
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    rows = run(args.repeat)
    if args.json:
        json.dump(rows, sys.stdout, indent=2)
        print()
        return 0
    if "cython" not in kernels.available_backends():
        print("compiled extension not built; timing the fallback only")
    print(f"{'case':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>9s}")
    for r in rows:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'-':>10s}"
        sp = f"{r['speedup']:8.1f}x" if "speedup" in r else f"{'-':>9s}"
        print(f"{r['case']:40s} {r['python']:10.4f} {cy} {sp}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
