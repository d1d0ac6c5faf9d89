"""Recursive prime factorization numeral systems over Dyck words."""

from dyckrpf.dyck import chunks, compress, content, decompress, dim, validate
from dyckrpf.errors import RPFError
from dyckrpf.kernels import BACKEND
from dyckrpf.natural import (
    EvalBudget,
    collapse,
    dfa_accepts_R,
    dinf,
    eval_nat,
    is_minimal,
    spell_nat,
    succ,
)
from dyckrpf.rational import eval_rat, is_quasiminimal, spell_rat

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EvalBudget",
    "RPFError",
    "chunks",
    "collapse",
    "compress",
    "content",
    "decompress",
    "dfa_accepts_R",
    "dim",
    "dinf",
    "eval_nat",
    "eval_rat",
    "is_minimal",
    "is_quasiminimal",
    "spell_nat",
    "spell_rat",
    "succ",
    "validate",
]
