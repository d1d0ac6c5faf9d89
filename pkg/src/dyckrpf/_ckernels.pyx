# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same contract as ``_pykernels``."""

DEF MAX_LEN = 128

cdef int OK = 0, ILLEGAL = 1, UNBALANCED = 2


def scan(str s):
    cdef Py_ssize_t i = 0, depth = 0
    cdef Py_UCS4 ch
    for ch in s:
        if ch == u"(":
            depth += 1
        elif ch == u")":
            depth -= 1
            if depth < 0:
                return UNBALANCED, i
        else:
            return ILLEGAL, i
        i += 1
    if depth:
        return UNBALANCED, len(s)
    return OK, -1


def chunk_spans(str s):
    cdef Py_ssize_t i = 0, depth = 0, start = 0
    cdef Py_UCS4 ch
    cdef list spans = []
    for ch in s:
        if ch == u"(":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                spans.append((start, i + 1))
        i += 1
    return spans


def run_dfa(str s, const unsigned char[:] table, int state):
    cdef Py_ssize_t i = 0
    cdef Py_UCS4 ch
    for ch in s:
        if ch == u"(":
            state = table[2 * state]
        elif ch == u")":
            state = table[2 * state + 1]
        else:
            return -(i + 1)
        i += 1
    return state


cdef void _words(char *buf, int pos, int n, int semi, int opens, int closes, list out):
    if pos == n:
        out.append(buf[:n].decode("ascii"))
        return
    if opens < semi:
        buf[pos] = b"("
        _words(buf, pos + 1, n, semi, opens + 1, closes, out)
    if closes < opens:
        buf[pos] = b")"
        _words(buf, pos + 1, n, semi, opens, closes + 1, out)


def dyck_words(int semilength):
    cdef char buf[MAX_LEN]
    cdef list out = []
    if 2 * semilength > MAX_LEN:
        raise ValueError("semilength too large for the compiled kernel")
    _words(buf, 0, 2 * semilength, semilength, 0, 0, out)
    return out


cdef long long _count(const unsigned char[:] table, int pos, int n, int semi,
                      int opens, int closes, int state, unsigned long long mask) nogil:
    cdef long long total = 0
    if pos == n:
        return (mask >> state) & 1
    if opens < semi:
        total += _count(table, pos + 1, n, semi, opens + 1, closes, table[2 * state], mask)
    if closes < opens:
        total += _count(table, pos + 1, n, semi, opens, closes + 1, table[2 * state + 1], mask)
    return total


def count_accepted(int semilength, const unsigned char[:] table, int start, unsigned long long accept_mask):
    cdef long long total
    with nogil:
        total = _count(table, 0, 2 * semilength, semilength, 0, 0, start, accept_mask)
    return total


def segment_flags(long long lo, long long size, const long long[:] base):
    """Primality flags for the odd numbers ``lo + 2j + 1`` in ``[lo, lo + size)``.

    ``lo`` and ``size`` are even; ``base`` holds every prime up to the square
    root of ``lo + size``, ascending.
    """
    cdef Py_ssize_t half = size // 2, i
    cdef long long p, start, j, hi = lo + size
    flags = bytearray(b"\x01") * half
    cdef unsigned char[:] f = flags
    with nogil:
        for i in range(base.shape[0]):
            p = base[i]
            if p == 2:
                continue
            if p * p >= hi:
                break
            start = ((lo + p - 1) // p) * p
            if start < p * p:
                start = p * p
            if start % 2 == 0:
                start += p
            j = (start - lo - 1) // 2
            while j < half:
                f[j] = 0
                j += p
    return flags
