"""Pure-Python kernels. Same contract as the compiled ``_ckernels`` module."""

OK, ILLEGAL, UNBALANCED = 0, 1, 2


def scan(s):
    """Return ``(status, position)`` for a single left-to-right balance scan."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return UNBALANCED, i
        else:
            return ILLEGAL, i
    if depth:
        return UNBALANCED, len(s)
    return OK, -1


def chunk_spans(s):
    spans = []
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                spans.append((start, i + 1))
    return spans


def run_dfa(s, table, state):
    """Final state after feeding ``s``; ``-(i + 1)`` for a bad symbol at ``i``."""
    for i, ch in enumerate(s):
        if ch == "(":
            state = table[2 * state]
        elif ch == ")":
            state = table[2 * state + 1]
        else:
            return -(i + 1)
    return state


def dyck_words(semilength):
    n = 2 * semilength
    out = []
    buf = [""] * n

    def rec(pos, opens, closes):
        if pos == n:
            out.append("".join(buf))
            return
        if opens < semilength:
            buf[pos] = "("
            rec(pos + 1, opens + 1, closes)
        if closes < opens:
            buf[pos] = ")"
            rec(pos + 1, opens, closes + 1)

    rec(0, 0, 0)
    return out


def count_accepted(semilength, table, start, accept_mask):
    n = 2 * semilength

    def rec(pos, opens, closes, state):
        if pos == n:
            return (accept_mask >> state) & 1
        total = 0
        if opens < semilength:
            total += rec(pos + 1, opens + 1, closes, table[2 * state])
        if closes < opens:
            total += rec(pos + 1, opens, closes + 1, table[2 * state + 1])
        return total

    return rec(0, 0, 0, start)


def segment_flags(lo, size, base):
    import numpy as np

    half = size // 2
    flags = np.ones(half, dtype=np.uint8)
    hi = lo + size
    for p in base.tolist():
        if p == 2:
            continue
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        if start % 2 == 0:
            start += p
        flags[(start - lo - 1) // 2 :: p] = 0
    return flags.tobytes()
