"""Hot-loop kernels, compiled when available.

The Cython extension ``_ckernels`` is used if it was built; otherwise the
pure-Python twin in ``_pykernels`` is loaded. Setting ``DYCKRPF_PURE=1``
forces the fallback.
"""

import os

if os.environ.get("DYCKRPF_PURE"):
    from dyckrpf import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from dyckrpf import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from dyckrpf import _pykernels as _impl

        BACKEND = "python"

OK, ILLEGAL, UNBALANCED = 0, 1, 2

scan = _impl.scan
chunk_spans = _impl.chunk_spans
run_dfa = _impl.run_dfa
dyck_words = _impl.dyck_words
count_accepted = _impl.count_accepted
segment_flags = _impl.segment_flags

__all__ = [
    "BACKEND",
    "scan",
    "chunk_spans",
    "run_dfa",
    "dyck_words",
    "count_accepted",
    "segment_flags",
]
