"""Compiled and pure-Python kernels must agree exactly."""

import random

import pytest

from dyckrpf import _pykernels, kernels
from dyckrpf.natural import R_ACCEPT, R_TABLE

try:
    from dyckrpf import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


def reference_scan(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch not in "()":
            return 1, i
        depth += 1 if ch == "(" else -1
        if depth < 0:
            return 2, i
    return (2, len(s)) if depth else (0, -1)


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def impl(request):
    return request.param


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "cython"


def test_scan_random(impl):
    rng = random.Random(1)
    for _ in range(5000):
        s = "".join(rng.choice("(()x") for _ in range(rng.randrange(12)))
        assert impl.scan(s) == reference_scan(s)


@pytest.mark.parametrize("s,expected", [("", (0, -1)), (")(", (2, 0)), ("((", (2, 2)), ("(a)", (1, 1))])
def test_scan_examples(impl, s, expected):
    assert impl.scan(s) == expected


def test_chunk_spans(impl):
    assert impl.chunk_spans("((())())()") == [(0, 8), (8, 10)]
    assert impl.chunk_spans("") == []


@pytest.mark.parametrize("k", range(8))
def test_dyck_words_match(impl, k):
    assert impl.dyck_words(k) == _pykernels.dyck_words(k)


@pytest.mark.parametrize("k", range(11))
def test_count_matches_filter(impl, k):
    expected = sum(_pykernels.run_dfa(w, R_TABLE, 0) in (0, 1, 2) for w in _pykernels.dyck_words(k))
    assert impl.count_accepted(k, R_TABLE, 0, R_ACCEPT) == expected


def test_run_dfa_bad_symbol(impl):
    assert impl.run_dfa("()x", R_TABLE, 0) == -3


def test_segment_flags(impl):
    import numpy as np

    from dyckrpf.primes import TABLE

    lo, size = 10_000_000, 1 << 16
    base = TABLE.small_primes(4000).astype(np.int64)
    flags = bytes(impl.segment_flags(lo, size, base))
    got = [lo + 2 * j + 1 for j, f in enumerate(flags) if f]
    expected = [n for n in range(lo + 1, lo + size, 2) if all(n % p for p in range(3, int(n**0.5) + 1, 2))]
    assert got == expected
