"""Standard minimal RPF rational interpretation.

Rationals are ``fractions.Fraction`` values, which are always reduced with a
positive denominator.
"""

import re
from fractions import Fraction

from dyckrpf.dyck import EMPTY_PAIR, validate
from dyckrpf.errors import BudgetExceeded, DomainError, NonIntegerExponent
from dyckrpf.natural import DEFAULT_BUDGET, checked_power, chunk_items, fold, short_repr
from dyckrpf.primes import factor_rational, nth_prime

_RATIONAL = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_rational(text):
    """Parse ``"num/den"`` or an integer; decimals are rejected."""
    m = _RATIONAL.fullmatch(text.strip())
    if not m:
        raise DomainError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise DomainError("zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q, show_den=False):
    q = Fraction(q)
    if q.denominator == 1 and not show_den:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def spell_rat(q):
    q = Fraction(q)
    out = []
    todo = [q]
    while todo:
        item = todo.pop()
        if isinstance(item, str):
            out.append(item)
        elif item == 0:
            continue
        elif item == 1:
            out.append(EMPTY_PAIR)
        elif item < 0:
            todo += [EMPTY_PAIR, -item]
        else:
            todo += reversed(
                [Fraction(x) if not isinstance(x, str) else x for x in chunk_items(factor_rational(item).support)]
            )
    return "".join(out)


def _rational_combiner(budget):
    def combine(values, empties):
        if not values:
            return Fraction(0)
        t = 0
        for e in reversed(empties):
            if not e:
                break
            t += 1
        t = min(t, len(values) - 1)
        num = den = 1
        for i, e in enumerate(values[: len(values) - t], 1):
            if not e:
                continue
            if e.denominator != 1:
                raise NonIntegerExponent(f"exponent {short_repr(e)} of p_{i} is not an integer")
            e = e.numerator
            if e > 0:
                num *= checked_power(nth_prime(i), e, budget)
            elif e < 0:
                den *= checked_power(nth_prime(i), -e, budget)
            if max(num.bit_length(), den.bit_length()) > budget.max_bits:
                raise BudgetExceeded(f"product exceeds {budget.max_bits} bits")
        return Fraction((-1) ** t * num, den)

    return combine


def eval_rat(w, budget=DEFAULT_BUDGET):
    return fold(validate(w), _rational_combiner(budget))


def is_quasiminimal(w):
    """Pattern test; ``w`` is assumed to be a Dyck word."""
    return ")()())" not in w and not w.endswith(")()()")
