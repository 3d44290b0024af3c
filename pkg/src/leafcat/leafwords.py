"""Leaf words (discrete derivatives of leaf functions) and realization.

A leaf word is a tuple over the integers plus the sentinel OMEGA, which
marks differences involving an absent value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catseq import leaf_function_caterpillar
from .subtrees import NEG_INF, LeafFunction
from .words import check_binary, is_prefix_normal, pn_violation, prefix_ones, rc


class _Omega:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "w"


OMEGA = _Omega()

LeafWord = tuple


def delta_leaf_word(lf: LeafFunction) -> LeafWord:
    """Letter i is L(i+3) - L(i+2) for i = 1..n-3; OMEGA when either value
    is absent.  The universal difference prefix 0,2,0 carries no information
    and is not part of the word."""
    if lf.n < 3:
        raise ValueError(f"leaf word undefined for n={lf.n} < 3")
    letters = []
    for i in range(1, lf.n - 2):
        a, b = lf.values[i + 2], lf.values[i + 3]
        if a is NEG_INF or b is NEG_INF:
            letters.append(OMEGA)
        else:
            letters.append(b - a)
    return tuple(letters)


def leaf_function_from_word(w: str) -> LeafFunction:
    """The tree-shaped leaf function whose leaf word is the binary word w."""
    check_binary(w)
    pre = prefix_ones(w)
    values = (0, 0, 2) + tuple(2 + pre[i] for i in range(len(w) + 1))
    return LeafFunction(len(w) + 3, values)


TREE_COMPATIBLE = "tree-compatible"
NON_TREE = "non-tree"
INVALID = "invalid"


def classify_leaf_word(lw: LeafWord) -> str:
    """tree-compatible: alphabet within {0,1}; non-tree: some letter in
    {-1,-2,...} or OMEGA, with OMEGA letters forming a suffix; invalid
    otherwise (letters > 1, or OMEGA before a plain letter)."""
    seen_omega = False
    non_tree = False
    for letter in lw:
        if letter is OMEGA:
            seen_omega = True
            non_tree = True
        elif seen_omega:
            return INVALID
        elif not isinstance(letter, int) or letter > 1:
            return INVALID
        elif letter < 0:
            non_tree = True
    return NON_TREE if non_tree else TREE_COMPATIBLE


@dataclass(frozen=True)
class Rejection:
    """Machine-readable reason a leaf function is not caterpillar-realizable."""

    reason: str  # bad-size | bad-prefix | bad-alphabet | not-prefix-normal
    witness: tuple[str, str] | None = None

    def message(self) -> str:
        if self.witness is not None:
            p, f = self.witness
            return f"{self.reason}: prefix {p} has fewer 1s than factor {f}"
        return self.reason


def realize_caterpillar(lf: LeafFunction):
    """The caterpillar sequence realizing lf, or a Rejection naming the first
    failed condition."""
    if lf.n < 3:
        return Rejection("bad-size")
    if lf.values[:4] != (0, 0, 2, 2):
        return Rejection("bad-prefix")
    lw = delta_leaf_word(lf)
    if classify_leaf_word(lw) != TREE_COMPATIBLE:
        return Rejection("bad-alphabet")
    w = "".join(str(letter) for letter in lw)
    if not is_prefix_normal(w):
        return Rejection("not-prefix-normal", pn_violation(w))
    return rc(w)


def leaf_equivalent(w1: str, w2: str) -> bool:
    """True iff the caterpillars read from w1 and w2 have equal leaf functions."""
    lf1 = leaf_function_caterpillar(rc(w1))
    lf2 = leaf_function_caterpillar(rc(w2))
    return lf1 == lf2


# ---------------------------------------------------------------------------
# Text format


def format_leaf_word(lw: LeafWord) -> str:
    """Comma-separated letters with OMEGA as 'w'; binary words compact."""
    if all(letter in (0, 1) for letter in lw):
        return "".join(str(letter) for letter in lw)
    return ",".join("w" if letter is OMEGA else str(letter) for letter in lw)


def parse_leaf_word(text: str) -> LeafWord:
    if text == "":
        return ()
    if all(c in "01" for c in text):
        return tuple(int(c) for c in text)
    letters = []
    for part in text.split(","):
        part = part.strip()
        if part == "w":
            letters.append(OMEGA)
        else:
            try:
                letters.append(int(part))
            except ValueError as exc:
                raise ValueError(f"bad leaf-word letter {part!r}") from exc
    return tuple(letters)
