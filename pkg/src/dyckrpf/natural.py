"""Standard minimal RPF natural interpretation.

``spell_nat`` and ``eval_nat`` are the spelling/evaluation pair; ``eval_nat``
is total on Dyck words (non-minimal words are inflations of a minimal one).
Growth is guarded by an ``EvalBudget`` on the bit length of every
intermediate power and product.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from dyckrpf import kernels
from dyckrpf.dyck import EMPTY_PAIR, validate
from dyckrpf.errors import BudgetExceeded, IllegalSymbol, NotMinimal
from dyckrpf.primes import factor_natural, nth_prime

DEFAULT_MAX_BITS = 1_000_000

_TOKENS = re.compile(r"(?:\(\))+|[()]")


@dataclass(frozen=True)
class EvalBudget:
    max_bits: int = DEFAULT_MAX_BITS

    def __post_init__(self):
        if self.max_bits < 64:
            raise ValueError("max_bits must be at least 64")


DEFAULT_BUDGET = EvalBudget()


def short_repr(n):
    """Readable form of a possibly enormous integer or fraction."""
    if isinstance(n, Fraction) and n.denominator != 1:
        return f"{short_repr(n.numerator)}/{short_repr(n.denominator)}"
    n = int(n)
    return str(n) if n.bit_length() <= 64 else f"<{n.bit_length()}-bit integer>"


def checked_power(p, e, budget):
    """``p ** e`` for ``p >= 2``, ``e >= 0`` unless it would exceed the budget."""
    if e == 0:
        return 1
    # p**e has more than e * (bitlen(p) - 1) bits
    if e >= budget.max_bits or e * (p.bit_length() - 1) >= budget.max_bits:
        raise BudgetExceeded(f"{short_repr(p)}^{short_repr(e)} exceeds {budget.max_bits} bits")
    r = p**e
    if r.bit_length() > budget.max_bits:
        raise BudgetExceeded(f"{short_repr(p)}^{short_repr(e)} exceeds {budget.max_bits} bits")
    return r


def fold(w, combine):
    """Bottom-up evaluation over the chunk tree of ``w``.

    ``combine(values, empties)`` receives the values of the chunk contents of
    one sequence and, per chunk, whether the chunk is the empty pair; its
    result becomes the value of that sequence. Results are memoized by
    content text, so repeated subwords are combined once.
    """
    memo = {}
    frames = [([], [])]
    starts = []
    zero = None
    for m in _TOKENS.finditer(w):
        tok = m.group()
        if len(tok) > 1:
            # a run of empty pairs: every content is the empty word
            if zero is None:
                zero = memo[""] = combine([], [])
            k = len(tok) // 2
            frames[-1][0].extend([zero] * k)
            frames[-1][1].extend([True] * k)
        elif tok == "(":
            frames.append(([], []))
            starts.append(m.start())
        else:
            i = m.start()
            values, empties = frames.pop()
            start = starts.pop()
            key = w[start + 1 : i]
            if key in memo:
                v = memo[key]
            else:
                v = memo[key] = combine(values, empties)
            frames[-1][0].append(v)
            frames[-1][1].append(False)
    values, empties = frames[0]
    return combine(values, empties)


def product_combiner(budget, base=nth_prime):
    """Combiner for ``prod base(i) ** value_i``; the empty sequence is 0."""

    def combine(values, _empties):
        if not values:
            return 0
        acc = 1
        for i, e in enumerate(values, 1):
            if e:
                acc *= checked_power(base(i), e, budget)
                if acc.bit_length() > budget.max_bits:
                    raise BudgetExceeded(f"product exceeds {budget.max_bits} bits")
        return acc

    return combine


def eval_nat(w, budget=DEFAULT_BUDGET):
    return fold(validate(w), product_combiner(budget))


def spell_nat(n, factor=factor_natural):
    """Minimal spelling of ``n``; iterative, so deep towers cannot overflow
    the interpreter stack."""
    if n < 0:
        raise ValueError("natural numbers only")
    out = []
    todo = [n]
    while todo:
        item = todo.pop()
        if isinstance(item, str):
            out.append(item)
        elif item == 1:
            out.append(EMPTY_PAIR)
        elif item > 1:
            todo += reversed(chunk_items(factor(item).support))
    return "".join(out)


def chunk_items(support):
    """Spelling work items for a sparse exponent vector, in reading order.

    Zero exponents become literal runs of empty pairs so that long gaps cost
    one string operation instead of one stack item per prime.
    """
    items = []
    pos = 1
    for j, a in support:
        if j > pos:
            items.append(EMPTY_PAIR * (j - pos))
        items += ["(", a, ")"]
        pos = j + 1
    return items


# -- minimal language -------------------------------------------------------


def is_minimal(w):
    """Pattern test; ``w`` is assumed to be a Dyck word."""
    return ")())" not in w and not w.endswith(")()")


R_TABLE = bytes(
    [
        0, 1,  # q0
        2, 1,  # q1
        0, 3,  # q2
        2, 4,  # q3
        4, 4,  # q4 (sink)
    ]
)
R_ACCEPT = 0b00111


def dfa_accepts_R(s):
    state = kernels.run_dfa(s, R_TABLE, 0)
    if state < 0:
        raise IllegalSymbol(-state - 1, s[-state - 1])
    return bool((R_ACCEPT >> state) & 1)


def require_minimal(w):
    validate(w)
    if not is_minimal(w):
        raise NotMinimal(f"{w!r} is not a minimal word")
    return w


# -- inflation ---------------------------------------------------------------


def _trailing_run(empties):
    """Length of the trailing run of empty pairs that has a chunk before it."""
    t = 0
    for e in reversed(empties):
        if not e:
            break
        t += 1
    return min(t, len(empties) - 1) if empties else 0


def dinf(w):
    """Inflationary degree, computed from chunk structure alone."""
    validate(w)
    best = 0
    frames = [[]]
    starts = []
    for i, ch in enumerate(w):
        if ch == "(":
            frames.append([])
            starts.append(i)
        else:
            best = max(best, _trailing_run(frames.pop()))
            frames[-1].append(i == starts.pop() + 1)
    return max(best, _trailing_run(frames[0]))


def collapse(w):
    """The minimal word with the same natural value as ``w``."""
    validate(w)
    frames = [[]]
    for ch in w:
        if ch == "(":
            frames.append([])
        else:
            kids = frames.pop()
            kids = kids[: len(kids) - _trailing_run([k == EMPTY_PAIR for k in kids])]
            frames[-1].append("(" + "".join(kids) + ")")
    kids = frames[0]
    kids = kids[: len(kids) - _trailing_run([k == EMPTY_PAIR for k in kids])]
    return "".join(kids)


def succ(w, budget=DEFAULT_BUDGET):
    """Successor by the numeric route ``spell(eval(w) + 1)``."""
    require_minimal(w)
    return spell_nat(eval_nat(w, budget) + 1)
