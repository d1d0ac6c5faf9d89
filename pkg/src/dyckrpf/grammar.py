"""Chart recognizer for the conjectured grammar of the minimal language.

Productions::

    N -> ε | () | S
    S -> S S | () S | ( S ) | ( ( ) )

Recognition uses CYK over the Chomsky normal form below, with each chart
row held as an integer bitset so a cell costs one AND per binary rule.
The grammar is ambiguous; only membership is decided.
"""

# CNF: L -> "(", R -> ")", P -> L R, X -> S R, Y -> P R,
#      S -> S S | P S | L X | L Y
TERMINALS = {"(": "L", ")": "R"}
BINARY = (
    ("P", "L", "R"),
    ("X", "S", "R"),
    ("Y", "P", "R"),
    ("S", "S", "S"),
    ("S", "P", "S"),
    ("S", "L", "X"),
    ("S", "L", "Y"),
)
NONTERMINALS = ("L", "R", "P", "X", "Y", "S")


def derives(w):
    """Nonterminals deriving the whole of ``w`` (``w`` nonempty)."""
    n = len(w)
    ends = {a: [0] * (n + 1) for a in NONTERMINALS}  # bit j: A => w[i:j]
    starts = {a: [0] * (n + 1) for a in NONTERMINALS}  # bit i: A => w[i:j]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n + 1):
            found = []
            if j == i + 1:
                found.append(TERMINALS[w[i]])
            for head, left, right in BINARY:
                if ends[left][i] & starts[right][j]:
                    found.append(head)
            for a in found:
                ends[a][i] |= 1 << j
                starts[a][j] |= 1 << i
    return {a for a in NONTERMINALS if ends[a][0] >> n & 1}


def accepts(w):
    """Membership in the language of ``N``."""
    if w == "":
        return True
    if any(ch not in TERMINALS for ch in w):
        return False
    got = derives(w)
    return "S" in got or w == "()"
