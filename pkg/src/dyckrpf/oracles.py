"""Deliberately naive reference implementations for certifying the main
code paths in tests. Nothing here imports from the rest of the package.
"""

from itertools import product


def _primes(count):
    found = []
    n = 2
    while len(found) < count:
        if all(n % p for p in found):
            found.append(n)
        n += 1
    return found


def _split(w):
    """Contents of the outermost pairs, by depth counting."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(w):
        depth += 1 if ch == "(" else -1
        if depth == 0:
            parts.append(w[start + 1 : i])
            start = i + 1
    return parts


def brute_eval(w):
    """Direct recursive transcription of the natural evaluation."""
    if w == "":
        return 0
    parts = _split(w)
    primes = _primes(len(parts))
    result = 1
    for p, d in zip(primes, parts):
        result *= p ** brute_eval(d)
    return result


def _balanced(s):
    depth = 0
    for ch in s:
        depth += 1 if ch == "(" else -1
        if depth < 0:
            return False
    return depth == 0


def brute_dinf(w):
    """Largest run of empty pairs whose deletion keeps the value."""
    target = brute_eval(w)
    best = 0
    for n in range(1, len(w) // 2 + 1):
        run = "()" * n
        for i in range(len(w) - 2 * n + 1):
            if w[i : i + 2 * n] == run:
                rest = w[:i] + w[i + 2 * n :]
                if _balanced(rest) and brute_eval(rest) == target:
                    best = n
    return best


def brute_minimal_enum(semilength):
    """All balanced strings of the given semilength without ``)())`` and not
    ending in ``)()``."""
    out = set()
    for chars in product("()", repeat=2 * semilength):
        s = "".join(chars)
        if _balanced(s) and ")())" not in s and not s.endswith(")()"):
            out.add(s)
    return out
