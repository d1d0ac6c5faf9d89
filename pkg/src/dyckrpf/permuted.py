"""Prime-permuted minimal natural interpretations."""

from dataclasses import dataclass
from pathlib import Path

from dyckrpf.dyck import mirror, validate
from dyckrpf.errors import DomainError, NoFiniteExpansion
from dyckrpf.natural import (
    DEFAULT_BUDGET,
    fold,
    product_combiner,
    require_minimal,
    spell_nat,
)
from dyckrpf.primes import FactorizationVector, factor_natural, nth_prime


@dataclass(frozen=True)
class PrimePermutation:
    """Finite-support permutation of prime indices.

    ``mapping[i - 1] = j`` means sigma(p_i) = p_j; indices past the end of
    ``mapping`` are fixed.
    """

    mapping: tuple = ()

    def __post_init__(self):
        m = tuple(int(j) for j in self.mapping)
        if sorted(m) != list(range(1, len(m) + 1)):
            raise DomainError(f"{m} is not a permutation of 1..{len(m)}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def swap_pairs(cls, k):
        """Swap p_1<->p_2, p_3<->p_4, ... over the first ``2 * k`` indices."""
        return cls(tuple(j for i in range(1, 2 * k, 2) for j in (i + 1, i)))

    @classmethod
    def reversed_prefix(cls, k):
        """Reverse the first ``k`` indices: sigma(p_i) = p_{k+1-i}."""
        return cls(tuple(range(k, 0, -1)))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError:
            raise DomainError(f"bad permutation line: {text!r}") from None

    @classmethod
    def load(cls, path):
        lines = Path(path).read_text().splitlines()
        return cls.parse(lines[0] if lines else "")

    def __call__(self, i):
        """Image index of prime index ``i``."""
        return self.mapping[i - 1] if i <= len(self.mapping) else i

    def inverse(self):
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping, 1):
            inv[j - 1] = i
        return PrimePermutation(tuple(inv))

    def prime(self, i):
        """sigma(p_i) as a number."""
        return nth_prime(self(i))


def _permuted_factor(sigma):
    inv = sigma.inverse()

    def factor(n):
        support = factor_natural(n).support
        if not support:
            return FactorizationVector()
        # exponent of sigma(p_i) is the standard exponent at index sigma(i)
        by_pos = {inv(j): a for j, a in support}
        m = max(by_pos)
        if m > max(len(sigma.mapping), support[-1][0]):
            raise NoFiniteExpansion(f"{n} has no finite expansion over the permuted base")
        return FactorizationVector(tuple(sorted(by_pos.items())))

    return factor


def spell_nat_perm(n, sigma):
    return spell_nat(n, factor=_permuted_factor(sigma))


def eval_nat_perm(w, sigma, budget=DEFAULT_BUDGET):
    return fold(validate(w), product_combiner(budget, base=sigma.prime))


def convert_spelling(w, sigma, tau, budget=DEFAULT_BUDGET):
    # every sigma-minimal language has the same words as the standard one
    require_minimal(w)
    return spell_nat_perm(eval_nat_perm(w, sigma, budget), tau)


def convert_evaluation(n, sigma, tau, budget=DEFAULT_BUDGET):
    return eval_nat_perm(spell_nat_perm(n, sigma), tau, budget)


def spell_nat_reverse(n):
    """Spelling from the descending (reverse) padded factorization: chunks for
    p_k down to p_1 at every level. Literally the mirror image of the
    standard spelling."""
    out = []
    todo = [n]
    while todo:
        item = todo.pop()
        if isinstance(item, str):
            out.append(item)
        elif item == 1:
            out.append("()")
        elif item > 1:
            for a in factor_natural(item):
                todo += [")", a, "("]
    return "".join(out)
