"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import timeit

import numpy as np

from dyckrpf.natural import R_ACCEPT, R_TABLE, spell_nat
from dyckrpf.primes import TABLE


def cases():
    # a prime near 10^6 puts ~78k empty pairs in front of its chunk
    word = spell_nat(2**4000 * 3**77 * 1000003)
    base = TABLE.small_primes(1 << 12).astype(np.int64)
    return {
        "scan": lambda k: k.scan(word),
        "chunk_spans": lambda k: k.chunk_spans(word),
        "run_dfa": lambda k: k.run_dfa(word, R_TABLE, 0),
        "dyck_words(10)": lambda k: k.dyck_words(10),
        "count_accepted(12)": lambda k: k.count_accepted(12, R_TABLE, 0, R_ACCEPT),
        "segment_flags": lambda k: k.segment_flags(1 << 24, 1 << 22, base),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": importlib.import_module("dyckrpf._pykernels")}
    try:
        backends["cython"] = importlib.import_module("dyckrpf._ckernels")
    except ImportError:
        print("compiled backend not built; timing the pure-Python one only")
    print(f"{'kernel':<20}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for name, fn in cases().items():
        times = {b: min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for b, mod in backends.items()}
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        print(f"{name:<20}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends) + f"{speed:>10}")


if __name__ == "__main__":
    main()
