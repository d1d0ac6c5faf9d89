"""Linear-time prime factorization of Dyck naturals.

A single left-to-right pass over the chunks of a minimal word: the chunk at
position ``k`` stands for ``p_k`` raised to its content, and the base word for
``p_k`` is ``k - 1`` empty pairs followed by ``(())``. Output grammar::

    expression := factor*
    factor     := "[" base "^" exponent "]"

The compressed variant reads run tokens (hex counts of empty pairs) and
advances the base counter by the run length without expanding it.
"""

import re

from dyckrpf.dyck import EMPTY_PAIR, decompress, tokenize
from dyckrpf.errors import NotDyck, NotMinimal
from dyckrpf.natural import DEFAULT_BUDGET, R_ACCEPT, R_TABLE, checked_power, eval_nat, require_minimal

TWO = "(())"


def _plain_base(k):
    return EMPTY_PAIR * k + TWO


def _compressed_base(k):
    return format(k, "X") + TWO if k >= 2 else EMPTY_PAIR * k + TWO


def _render(tokens):
    return "".join(format(t, "X") if isinstance(t, int) else t for t in tokens)


def factor_pass(tokens, base, content):
    """Run the factorization over ``tokens`` ("(", ")" or int run lengths).

    Returns ``(expression, touched)`` where ``touched`` counts the tokens
    read, which is always ``len(tokens)``.
    """
    out = []
    depth = 0
    left = 0
    skip = True
    k = 0
    touched = 0
    for i, t in enumerate(tokens):
        touched += 1
        if t == "(":
            depth += 1
            if depth > 1:
                skip = False
        elif t == ")":
            depth -= 1
            if depth == 0:
                if not skip:
                    out.append(f"[{base(k)}^{content(left + 1, i)}]")
                    skip = True
                left = i + 1
                k += 1
        elif depth == 0:
            k += t
            left = i + 1
        else:
            skip = False
    return "".join(out), touched


def factorize_dyck(w):
    require_minimal(w)
    return factor_pass(w, _plain_base, lambda a, b: w[a:b])[0]


def _tokens_minimal(tokens):
    depth = 0
    state = 0
    for t in tokens:
        if isinstance(t, int):
            # two empty pairs already reach the fixed point of "()" on this DFA
            for _ in range(min(t, 2)):
                state = R_TABLE[2 * R_TABLE[2 * state] + 1]
            continue
        depth += 1 if t == "(" else -1
        if depth < 0:
            raise NotDyck(-1)
        state = R_TABLE[2 * state + (t == ")")]
    if depth:
        raise NotDyck(-1)
    return bool((R_ACCEPT >> state) & 1)


def factorize_compressed(cw):
    tokens = tokenize(cw)
    if not _tokens_minimal(tokens):
        raise NotMinimal(f"{cw!r} does not denote a minimal word")
    return factor_pass(tokens, _compressed_base, lambda a, b: _render(tokens[a:b]))[0]


_FACTOR = re.compile(r"\[([^\^\]]*)\^([^\]]*)\]")


def parse_factors(expr, compressed=False):
    """``[(base, exponent), ...]`` as plain words."""
    pos = 0
    out = []
    for m in _FACTOR.finditer(expr):
        if m.start() != pos:
            raise ValueError(f"malformed factorization near position {pos}")
        pos = m.end()
        b, e = m.groups()
        out.append((decompress(b), decompress(e)) if compressed else (b, e))
    if pos != len(expr):
        raise ValueError(f"malformed factorization near position {pos}")
    return out


def evaluate_factors(expr, compressed=False, budget=DEFAULT_BUDGET):
    """Product of ``eval(base) ** eval(exponent)`` over the factors; 1 if none."""
    acc = 1
    for b, e in parse_factors(expr, compressed):
        acc *= checked_power(eval_nat(b, budget), eval_nat(e, budget), budget)
    return acc
