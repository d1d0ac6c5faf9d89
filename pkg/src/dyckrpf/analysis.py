"""Enumeration and conjecture checks over the minimal language."""

import json
import re
from dataclasses import dataclass, field

from dyckrpf import grammar, kernels
from dyckrpf.dyck import to_binary
from dyckrpf.errors import BudgetExceeded, CapExceeded
from dyckrpf.natural import (
    DEFAULT_BUDGET,
    R_ACCEPT,
    R_TABLE,
    dfa_accepts_R,
    eval_nat,
    is_minimal,
    spell_nat,
)
from dyckrpf.primes import factor_natural, nth_prime

COUNT_CAP = 16
STRIPE_CAP = 6
GRAMMAR_CAP = 10

# OEIS A082582, offset so that entry m is the count at semilength m
A082582 = (1, 1, 1, 2, 5, 13, 35, 97, 275, 794, 2327, 6905, 20705, 62642)


@dataclass
class Report:
    check: str
    parameters: dict
    passed: bool
    counterexamples: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "check": self.check,
            "parameters": self.parameters,
            "pass": self.passed,
            "counterexamples": [str(c) for c in self.counterexamples],
            "data": self.data,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), default=str)

    def to_text(self):
        head = f"{self.check}: {'PASS' if self.passed else 'FAIL'}"
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        lines = [f"{head}  ({params})" if params else head]
        rows = self.data.get("rows")
        if rows:
            cols = list(rows[0])
            cells = [[str(r[c]) for c in cols] for r in rows]
            widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
            lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
            lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
        if "members" in self.data:
            lines.append("members: " + " ".join(self.data["members"]))
        for c in self.counterexamples:
            lines.append(f"counterexample: {c}")
        return "\n".join(lines)


# -- enumeration -------------------------------------------------------------


def dyck_words(semilength):
    return kernels.dyck_words(semilength)


def minimal_words(semilength):
    return [w for w in kernels.dyck_words(semilength) if is_minimal(w)]


def count_minimal(semilength, cap=COUNT_CAP):
    """Exhaustively enumerate Dyck words of the given semilength and count
    those accepted by the minimal-language automaton."""
    if semilength > cap:
        raise CapExceeded(f"semilength {semilength} exceeds the enumeration cap {cap}")
    return kernels.count_accepted(semilength, R_TABLE, 0, R_ACCEPT)


def count_report(max_semilength, cap=COUNT_CAP):
    rows = []
    bad = []
    for m in range(max_semilength + 1):
        got = count_minimal(m, cap)
        expected = A082582[m] if m < len(A082582) else None
        rows.append({"semilength": m, "count": got, "A082582": "" if expected is None else expected})
        if expected is not None and got != expected:
            bad.append(f"semilength {m}: {got} != {expected}")
    return Report("counts", {"max": max_semilength}, not bad, bad, {"rows": rows})


# -- stripes ------------------------------------------------------------------


@dataclass(frozen=True)
class Stripe:
    semilength: int
    members: tuple


def stripe(k, budget=DEFAULT_BUDGET):
    members = []
    for w in minimal_words(k):
        try:
            members.append(eval_nat(w, budget))
        except BudgetExceeded as e:
            raise BudgetExceeded(f"stripe {k}: {w} exceeds the budget ({e})") from None
    return Stripe(k, tuple(sorted(members)))


def tower(height):
    """2 raised to itself ``height`` times (2, 4, 16, 65536, ...)."""
    v = 1
    for _ in range(height):
        v = 2**v
    return v


def _abbrev(n):
    return str(n) if n.bit_length() <= 64 else f"<{n.bit_length()}-bit>"


def check_stripe_patterns(k_max, budget=DEFAULT_BUDGET):
    """For each nontrivial stripe of semilength ``i + 1 <= k_max``: does it
    start with ``p_i`` and end with the tower of ``i`` twos?"""
    rows = []
    bad = []
    for k in range(2, k_max + 1):
        s = stripe(k, budget)
        i = k - 1
        first_ok = s.members[0] == nth_prime(i)
        last_ok = s.members[-1] == tower(i)
        rows.append(
            {
                "semilength": k,
                "size": len(s.members),
                "first": _abbrev(s.members[0]),
                "first_is_p_i": first_ok,
                "last": _abbrev(s.members[-1]),
                "last_is_tower": last_ok,
            }
        )
        if not first_ok:
            bad.append(f"stripe {k}: first member {s.members[0]} != p_{i}")
        if not last_ok:
            bad.append(f"stripe {k}: last member is not the tower of {i} twos")
    return Report("stripe-patterns", {"max": k_max}, not bad, bad, {"rows": rows})


def stripes_report(k, budget=DEFAULT_BUDGET):
    s = stripe(k, budget)
    return Report(
        "stripes",
        {"k": k},
        True,
        data={"semilength": k, "size": len(s.members), "members": [str(m) for m in s.members]},
    )


# -- grammar -----------------------------------------------------------------


def grammar_check(semilength_cap, spell_limit=1000, cap=GRAMMAR_CAP):
    if semilength_cap > cap:
        raise CapExceeded(f"semilength {semilength_cap} exceeds the grammar cap {cap}")
    bad = []
    for n in range(spell_limit):
        w = spell_nat(n)
        if not grammar.accepts(w):
            bad.append(f"spelling of {n} rejected: {w or 'EPSILON'}")
    checked = 0
    for k in range(semilength_cap + 1):
        for w in kernels.dyck_words(k):
            checked += 1
            g, p = grammar.accepts(w), is_minimal(w)
            if g != p:
                bad.append(f"{w or 'EPSILON'}: grammar={g} pattern={p}")
    return Report(
        "grammar",
        {"cap": semilength_cap, "spell_limit": spell_limit},
        not bad,
        bad,
        {"dyck_words_checked": checked, "spellings_checked": spell_limit},
    )


# -- regular subsets -----------------------------------------------------------

PRIME_TABLE = bytes(
    [
        1, 5,  # q0
        2, 0,  # q1
        5, 3,  # q2
        5, 4,  # q3
        5, 5,  # q4
        5, 5,  # q5 (sink)
    ]
)
PRIME_ACCEPT = 1 << 4

PRIME_REGEX = re.compile(r"(10)*1100")
SEMIPRIME_REGEX = re.compile(r"(10)*1100(10)*1100")


def is_prime_word(w):
    return kernels.run_dfa(w, PRIME_TABLE, 0) == 4


def is_squarefree_semiprime_word(w):
    return SEMIPRIME_REGEX.fullmatch(to_binary(w)) is not None


def _value_is_prime(w, budget):
    """Whether ``eval_nat(w)`` is prime, for any Dyck word.

    A prime value is ``p_i`` with ``i <= dim(w) <= len(w) / 2``, so the value
    is compared against that short list; a budget overrun means the value is
    far larger than any candidate.
    """
    try:
        v = eval_nat(w, budget)
    except BudgetExceeded:
        return False
    return any(v == nth_prime(i) for i in range(1, len(w) // 2 + 1))


def dfa_check(semilength_cap=9, prime_cap=8, n_primes=1000, budget=DEFAULT_BUDGET):
    bad = []
    checked = 0
    for k in range(semilength_cap + 1):
        for w in kernels.dyck_words(k):
            checked += 1
            if dfa_accepts_R(w) != is_minimal(w):
                bad.append(f"R automaton disagrees on {w or 'EPSILON'}")
    accepted = 0
    for k in range(prime_cap + 1):
        for w in kernels.dyck_words(k):
            acc = is_prime_word(w)
            accepted += acc
            if acc and not is_minimal(w):
                bad.append(f"prime automaton accepts non-minimal {w}")
            elif is_minimal(w) and acc != _value_is_prime(w, budget):
                bad.append(f"prime automaton is wrong on {w or 'EPSILON'}")
    for i in range(1, n_primes + 1):
        if not is_prime_word(spell_nat(nth_prime(i))):
            bad.append(f"prime automaton rejects the spelling of p_{i}")
    return Report(
        "dfa",
        {"cap": semilength_cap, "prime_cap": prime_cap, "primes": n_primes},
        not bad,
        bad,
        {"dyck_words_checked": checked, "prime_words_accepted": accepted},
    )


def is_squarefree_semiprime(n):
    exps = factor_natural(n).exponents
    return sorted(exps).count(1) == 2 and set(exps) <= {0, 1}
