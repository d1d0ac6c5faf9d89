import pytest

from dyckrpf import oracles
from dyckrpf.errors import BudgetExceeded, IllegalSymbol, NotDyck, NotMinimal
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
from dyckrpf.primes import nth_prime

from conftest import words, words_upto

# Standard spellings of 0..19
TABLE_1 = [
    "", "()", "(())", "()(())", "((()))", "()()(())", "(())(())", "()()()(())",
    "(()(()))", "()((()))", "(())()(())", "()()()()(())", "((()))(())",
    "()()()()()(())", "(())()()(())", "()(())(())", "(((())))",
    "()()()()()()(())", "(())((()))", "()()()()()()()(())",
]

SMALL = EvalBudget(4096)


class TestSpell:
    def test_table(self):
        assert [spell_nat(n) for n in range(20)] == TABLE_1

    def test_520(self):
        assert spell_nat(520) == "(()(()))()(())()()(())"

    def test_2646(self):
        assert spell_nat(2646) == "(())(()(()))()((()))"

    def test_prime_shape(self):
        for k in range(1, 101):
            assert spell_nat(nth_prime(k)) == "()" * (k - 1) + "(())"

    def test_outputs_minimal(self):
        for n in range(3000):
            w = spell_nat(n)
            assert is_minimal(w) and dfa_accepts_R(w)

    def test_deep_tower_no_recursion_limit(self):
        w = spell_nat(2**65536)
        assert w == "(((((())))))"


class TestEval:
    def test_27(self):
        assert eval_nat("()(()(()))") == 27

    def test_big(self):
        assert eval_nat("()(()(((()))))") == 443426488243037769948249630619149892803

    def test_inflation(self):
        assert eval_nat("()()") == 1

    def test_empty(self):
        assert eval_nat("") == 0

    def test_table_inverse(self):
        assert [eval_nat(w) for w in TABLE_1] == list(range(20))

    def test_agrees_with_brute(self):
        for w in words_upto(7):
            try:
                v = eval_nat(w, SMALL)
            except BudgetExceeded:
                continue
            assert v == oracles.brute_eval(w)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            eval_nat("(" * 7 + ")" * 7, EvalBudget(100))
        assert eval_nat("(" * 6 + ")" * 6) == 2**65536

    def test_budget_minimum(self):
        with pytest.raises(ValueError):
            EvalBudget(10)

    def test_rejects_non_dyck(self):
        with pytest.raises(NotDyck):
            eval_nat("(()")

    def test_totality(self):
        n = 0
        for w in words_upto(12):
            try:
                eval_nat(w, SMALL)
            except BudgetExceeded:
                pass
            n += 1
        assert n == sum(len(words(k)) for k in range(13))


class TestMinimal:
    @pytest.mark.parametrize(
        "w,expected", [("(())()", False), ("", True), ("()", True), ("()(())", True)]
    )
    def test_pattern(self, w, expected):
        assert is_minimal(w) is expected

    @pytest.mark.parametrize("w,expected", [(")())", False), ("(()())", False), ("", True), ("(())()", False)])
    def test_dfa(self, w, expected):
        assert dfa_accepts_R(w) is expected

    def test_dfa_sink_on_pattern_anywhere(self):
        for prefix in ["", "(", ")", "()", "((", "))", ")(", "()("]:
            assert not dfa_accepts_R(prefix + ")())" + "((")

    def test_dfa_matches_pattern_on_all_strings(self):
        from itertools import product

        for n in range(13):
            for chars in product("()", repeat=n):
                s = "".join(chars)
                assert dfa_accepts_R(s) == (")())" not in s and not s.endswith(")()"))

    def test_dfa_illegal(self):
        with pytest.raises(IllegalSymbol):
            dfa_accepts_R("(x)")

    def test_minimal_equals_codomain(self):
        # every minimal word up to semilength 8 is the spelling of its value
        for w in words_upto(8):
            if is_minimal(w):
                try:
                    assert spell_nat(eval_nat(w, SMALL)) == w
                except BudgetExceeded:
                    pass


class TestInflation:
    def test_dinf_example(self):
        assert dinf("(()()()())()") == 3

    def test_dinf_empty_pairs(self):
        assert dinf("()()") == 1
        assert oracles.brute_dinf("()()") == 1

    def test_dinf_zero_on_minimal(self):
        for w in words_upto(8):
            if is_minimal(w):
                assert dinf(w) == 0

    def test_dinf_against_brute(self):
        for w in words_upto(6):
            assert dinf(w) == oracles.brute_dinf(w), w

    def test_collapse_example(self):
        w = "(()()(())()())()()()"
        assert collapse(w) == "(()()(()))"
        assert eval_nat(w) == eval_nat("(()()(()))") == 32

    def test_collapse_identity(self):
        assert collapse("()(())") == "()(())"
        assert collapse("") == "" and collapse("()()()") == "()"

    def test_collapse_brute_search(self):
        minimal = [m for k in range(6) for m in oracles.brute_minimal_enum(k)]
        by_value = {oracles.brute_eval(m): m for m in minimal}
        assert by_value[oracles.brute_eval("()()(())()")] == "()()(())"
        for w in words_upto(5):
            v = oracles.brute_eval(w)
            if v in by_value:
                assert collapse(w) == by_value[v]

    def test_collapse_exhaustive(self):
        for w in words_upto(8):
            c = collapse(w)
            assert is_minimal(c)
            try:
                v = eval_nat(w, SMALL)
            except BudgetExceeded:
                with pytest.raises(BudgetExceeded):
                    eval_nat(c, SMALL)
                continue
            assert eval_nat(c, SMALL) == v


class TestSucc:
    @pytest.mark.parametrize(
        "w,expected", [("", "()"), ("(())", "()(())"), ("()((()))", "(())()(())")]
    )
    def test_examples(self, w, expected):
        assert succ(w) == expected

    def test_table_chain(self):
        assert [succ(w) for w in TABLE_1[:-1]] == TABLE_1[1:]

    def test_not_minimal(self):
        with pytest.raises(NotMinimal):
            succ("(())()")
