"""Dyck words: validation, chunk decomposition and the run-length codec.

Words are plain ``str`` values over ``(`` and ``)``; ``validate`` is the gate
that turns arbitrary text into a checked word.
"""

import re

from dyckrpf import kernels
from dyckrpf.errors import BadHexToken, IllegalSymbol, NotDyck, ResultNotDyck

EMPTY_PAIR = "()"

_BINARY = str.maketrans("10", "()")
_TO_BINARY = str.maketrans("()", "10")


def validate(s):
    """Return ``s`` unchanged if it is a Dyck word.

    Raises ``IllegalSymbol`` for characters other than parentheses and
    ``NotDyck`` at the first prefix with more ``)`` than ``(`` (or at
    ``len(s)`` when the word is merely unclosed).
    """
    status, pos = kernels.scan(s)
    if status == kernels.ILLEGAL:
        raise IllegalSymbol(pos, s[pos])
    if status == kernels.UNBALANCED:
        raise NotDyck(pos)
    return s


def is_dyck(s):
    return kernels.scan(s)[0] == kernels.OK


def from_binary(s):
    """Translate the 1/0 alias alphabet (``1`` is ``(``) to parentheses."""
    bad = re.search(r"[^10]", s)
    if bad:
        raise IllegalSymbol(bad.start(), bad.group())
    return s.translate(_BINARY)


def to_binary(w):
    return w.translate(_TO_BINARY)


def dim(w):
    return len(kernels.chunk_spans(w))


def chunks(w):
    return [w[a:b] for a, b in kernels.chunk_spans(w)]


def content(chunk):
    return chunk[1:-1]


def contents(w):
    """Contents of the chunks of ``w``, in order."""
    return [w[a + 1 : b - 1] for a, b in kernels.chunk_spans(w)]


def mirror(w):
    """Literal mirror image: reversed, with each parenthesis flipped."""
    return w[::-1].translate(str.maketrans("()", ")("))


# -- run-length codec -------------------------------------------------------

RUN_THRESHOLD = 2

_TOKEN = re.compile(r"[()]|[0-9A-F]+|.", re.S)


def compress(w):
    """Replace each maximal run of two or more leaf pairs ``()`` with its
    count in uppercase hex. Characters other than ``(`` and ``)`` are copied
    through and break runs, so bracketed factorization output compresses
    the same way as a bare word."""
    out = []
    i, n = 0, len(w)
    while i < n:
        run = 0
        while i + 1 < n and w[i] == "(" and w[i + 1] == ")":
            run += 1
            i += 2
        if run >= RUN_THRESHOLD:
            out.append(format(run, "X"))
        elif run == 1:
            out.append(EMPTY_PAIR)
        if i < n and run == 0:
            out.append(w[i])
            i += 1
    return "".join(out)


def tokenize(cw):
    """Split a compressed word into ``"("``, ``")"`` and integer run tokens."""
    tokens = []
    for m in _TOKEN.finditer(cw):
        t = m.group()
        if t in "()":
            tokens.append(t)
            continue
        if not re.fullmatch(r"[0-9A-F]+", t):
            raise BadHexToken(f"unexpected character {t!r} at position {m.start()}")
        if t[0] == "0":
            raise BadHexToken(f"hex run {t!r} at position {m.start()} has a leading zero")
        k = int(t, 16)
        if k < RUN_THRESHOLD:
            raise BadHexToken(f"hex run {t!r} at position {m.start()} is below the run threshold")
        tokens.append(k)
    return tokens


def expand(tokens):
    return "".join(EMPTY_PAIR * t if isinstance(t, int) else t for t in tokens)


def decompress(cw):
    w = expand(tokenize(cw))
    if not is_dyck(w):
        raise ResultNotDyck(f"{cw!r} does not expand to a Dyck word")
    return w
