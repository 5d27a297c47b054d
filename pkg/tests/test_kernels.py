"""The compiled and pure-Python kernels must agree bit for bit."""
import os
import random
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest

from fanostab import kernels
from fanostab import _pykernels
from fanostab.hypercore import Hypergraph3, bn, complete

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="extension not built")


def _random(n, p, rng):
    return Hypergraph3(n, [t for t in combinations(range(n), 3) if rng.random() < p])


@compiled
def test_backends_agree_on_random_instances():
    c = BACKENDS["cython"]
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(6, 14)
        H = _random(n, rng.choice([0.2, 0.5, 0.8]), rng)
        E = H.edge_array()
        assert c.octahedron_pair_total(n, E) == _pykernels.octahedron_pair_total(n, E)
        assert c.find_fano(n, E) == _pykernels.find_fano(n, E)
        pairs = [p for p in combinations(range(n), 2) if rng.random() < 0.5]
        assert c.c4_count(n, pairs) == _pykernels.c4_count(n, pairs)
        M = np.zeros((n, n), dtype=np.int64)
        for u, v in combinations(range(n), 2):
            M[u, v] = M[v, u] = rng.randint(0, 4)
        vs = list(range(n))
        for bound in (9, 11, 18, 21):
            assert c.first_heavy_triple(M, vs, bound) == _pykernels.first_heavy_triple(M, vs, bound)
            assert c.first_heavy_quadruple(M, vs, bound) == _pykernels.first_heavy_quadruple(M, vs, bound)


@compiled
def test_threads_do_not_change_totals():
    c = BACKENDS["cython"]
    H = complete(20)
    E = H.edge_array()
    assert c.octahedron_pair_total(20, E, 1) == c.octahedron_pair_total(20, E, 4)


@compiled
def test_wide_bitsets():
    c = BACKENDS["cython"]
    H = bn(70)
    E = H.edge_array()
    assert c.find_fano(70, E) is None
    assert c.octahedron_pair_total(70, E) % 3 == 0


def test_pure_python_override():
    env = dict(os.environ, FANOSTAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import fanostab; print(fanostab.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("FSK_THREADS", "3")
    assert kernels.thread_count() == 3
    monkeypatch.setenv("FSK_THREADS", "junk")
    assert kernels.thread_count() >= 1


def test_heavy_quadruple_prune_with_large_multiplicities():
    M = np.zeros((5, 5), dtype=np.int64)
    for u, v in combinations(range(1, 5), 2):
        M[u, v] = M[v, u] = 6
    assert _pykernels.first_heavy_quadruple(M, range(5), 36) == (1, 2, 3, 4)
    assert kernels.first_heavy_quadruple(M, list(range(5)), 36) == (1, 2, 3, 4)
