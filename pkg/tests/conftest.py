import functools

import pytest

from dyckrpf import _pykernels


@functools.lru_cache(maxsize=None)
def words(semilength):
    """All Dyck words of a semilength, from the pure-Python enumerator."""
    return tuple(_pykernels.dyck_words(semilength))


def words_upto(semilength):
    for k in range(semilength + 1):
        yield from words(k)


@pytest.fixture
def all_words():
    return words_upto
