import json
from functools import lru_cache

import pytest

from dyckrpf import grammar
from dyckrpf.analysis import (
    A082582,
    Report,
    check_stripe_patterns,
    count_minimal,
    count_report,
    dfa_check,
    grammar_check,
    is_prime_word,
    is_squarefree_semiprime,
    is_squarefree_semiprime_word,
    minimal_words,
    stripe,
    stripes_report,
    tower,
)
from dyckrpf.dyck import to_binary
from dyckrpf.errors import BudgetExceeded, CapExceeded
from dyckrpf.natural import R_ACCEPT, R_TABLE, EvalBudget, eval_nat, is_minimal, spell_nat
from dyckrpf.primes import is_prime, nth_prime

from conftest import words, words_upto

KNOWN_STRIPES = {
    2: (2,),
    3: (3, 4),
    4: (5, 6, 8, 9, 16),
    5: (7, 10, 12, 15, 18, 25, 27, 32, 64, 81, 256, 512, 65536),
}


def dp_counts(max_m):
    """Count minimal words by dynamic programming over (height, automaton
    state); shares nothing with the enumerators."""
    counts = []
    for m in range(max_m + 1):
        layer = {(0, 0): 1}
        for step in range(2 * m):
            nxt = {}
            for (h, q), c in layer.items():
                for sym, dh in ((0, 1), (1, -1)):
                    h2 = h + dh
                    if 0 <= h2 <= 2 * m - step - 1:
                        key = (h2, R_TABLE[2 * q + sym])
                        nxt[key] = nxt.get(key, 0) + c
            layer = nxt
        counts.append(sum(c for (h, q), c in layer.items() if h == 0 and R_ACCEPT >> q & 1))
    return counts


@lru_cache(maxsize=None)
def generated(n):
    """Strings of length ``n`` derivable from S, built bottom-up from the
    productions S -> S S | () S | ( S ) | (())."""
    out = set()
    if n == 4:
        out.add("(())")
    if n >= 4:
        out |= {"()" + s for s in generated(n - 2)}
        out |= {"(" + s + ")" for s in generated(n - 2)}
        for a in range(4, n - 3, 2):
            out |= {x + y for x in generated(a) for y in generated(n - a)}
    return frozenset(out)


def grammar_language(k):
    base = {"", "()"}
    return {w for w in base if len(w) == 2 * k} | set(generated(2 * k))


class TestCounts:
    def test_prefix(self):
        assert tuple(count_minimal(m) for m in range(14)) == A082582

    def test_examples(self):
        assert count_minimal(3) == 2 and count_minimal(0) == 1

    def test_dp_oracle(self):
        dp = dp_counts(16)
        assert tuple(dp[:14]) == A082582
        assert [count_minimal(m) for m in range(15)] == dp[:15]

    def test_cap(self):
        with pytest.raises(CapExceeded):
            count_minimal(17)
        assert count_minimal(3, cap=3) == 2

    def test_report(self):
        r = count_report(5)
        assert r.passed
        d = json.loads(r.to_json())
        assert set(d) == {"check", "parameters", "pass", "counterexamples", "data"}
        assert "semilength" in r.to_text()


class TestStripes:
    @pytest.mark.parametrize("k", sorted(KNOWN_STRIPES))
    def test_known_members(self, k):
        assert stripe(k).members == KNOWN_STRIPES[k]

    def test_count_consistency(self):
        for k in range(6):
            assert len(stripe(k).members) == count_minimal(k)

    def test_two_sided(self):
        by_len = {}
        for n in range(max(KNOWN_STRIPES[5]) + 1):
            by_len.setdefault(len(spell_nat(n)) // 2, []).append(n)
        for k in range(6):
            assert stripe(k).members == tuple(by_len[k])

    def test_towers(self):
        assert [tower(i) for i in range(1, 5)] == [2, 4, 16, 65536]

    def test_patterns(self):
        r = check_stripe_patterns(5)
        assert r.passed and not r.counterexamples
        assert [row["last"] for row in r.data["rows"]] == ["2", "4", "16", "65536"]

    def test_stripe_6(self):
        r = check_stripe_patterns(6)
        assert r.passed
        assert len(stripe(6).members) == 35

    def test_budget(self):
        # the largest member of stripe 6 is 2^65536, just over 65536 bits
        assert check_stripe_patterns(6, EvalBudget(10**5)).passed
        with pytest.raises(BudgetExceeded):
            stripe(7, EvalBudget(10**5))

    def test_members_report(self):
        r = stripes_report(4)
        assert r.data["members"] == ["5", "6", "8", "9", "16"]
        assert "members: 5 6 8 9 16" in r.to_text()


class TestGrammar:
    def test_cyk_against_generation(self):
        for k in range(9):
            accepted = {w for w in words(k) if grammar.accepts(w)}
            assert accepted == grammar_language(k), k

    def test_generation_matches_pattern(self):
        for k in range(9):
            assert grammar_language(k) == {w for w in words(k) if is_minimal(w)}

    @pytest.mark.parametrize("w,ok", [("(())()", False), ("()", True), ("", True), ("()()", False)])
    def test_examples(self, w, ok):
        assert grammar.accepts(w) is ok

    def test_check_small(self):
        r = grammar_check(5, spell_limit=100)
        assert r.passed and r.counterexamples == []

    def test_cap(self):
        with pytest.raises(CapExceeded):
            grammar_check(11)


class TestRegularSubsets:
    @pytest.mark.parametrize("w,ok", [("(())", True), ("()(())", True), ("((()))", False), ("", False)])
    def test_prime_examples(self, w, ok):
        assert is_prime_word(w) is ok

    def test_prime_matches_regex(self):
        import re

        rx = re.compile(r"(10)*1100")
        for w in words_upto(9):
            assert is_prime_word(w) == bool(rx.fullmatch(to_binary(w)))

    def test_prime_sound(self):
        for w in words_upto(8):
            if is_prime_word(w):
                assert is_minimal(w) and is_prime(eval_nat(w))

    def test_prime_complete(self):
        for i in range(1, 1001):
            assert is_prime_word(spell_nat(nth_prime(i)))
        for w in words_upto(8):
            if is_minimal(w):
                try:
                    v = eval_nat(w, EvalBudget(4096))
                except BudgetExceeded:
                    continue
                assert is_prime_word(w) == (v > 1 and is_prime(v))

    def test_semiprime(self):
        for w in words_upto(8):
            if is_squarefree_semiprime_word(w):
                assert is_squarefree_semiprime(eval_nat(w))
        for n in range(2, 3000):
            assert is_squarefree_semiprime_word(spell_nat(n)) == is_squarefree_semiprime(n)

    def test_dfa_check(self):
        r = dfa_check(semilength_cap=7, prime_cap=6, n_primes=100)
        assert r.passed


def test_report_failure_text():
    r = Report("x", {"a": 1}, False, ["bad thing"])
    assert r.to_text().splitlines() == ["x: FAIL  (a=1)", "counterexample: bad thing"]
    assert json.loads(r.to_json())["pass"] is False


def test_minimal_words_sorted_by_filter():
    assert set(minimal_words(4)) == {w for w in words(4) if is_minimal(w)}
