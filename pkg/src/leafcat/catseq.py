"""Caterpillar sequences: order, truncations, graft and the fast leaf function.

A caterpillar sequence (s_1,...,s_k) is a tuple of non-negative ints with
s_1, s_k >= 1 (and s_1 >= 2 when k = 1).  It encodes the caterpillar with
spine v_1..v_k carrying s_i pendant leaves on v_i.
"""

from __future__ import annotations

from itertools import product

from .subtrees import LeafFunction

CatSeq = tuple  # tuple[int, ...]


def check_sequence(s) -> None:
    if not isinstance(s, tuple) or len(s) == 0:
        raise ValueError(f"not a caterpillar sequence: {s!r}")
    if any(not isinstance(x, int) or x < 0 for x in s):
        raise ValueError(f"entries must be non-negative integers: {s!r}")
    if s[0] < 1 or s[-1] < 1:
        raise ValueError(f"first and last entries must be >= 1: {s!r}")
    if len(s) == 1 and s[0] < 2:
        raise ValueError(f"a length-1 sequence needs s_1 >= 2: {s!r}")


def size(s: CatSeq) -> int:
    """Number of vertices of the caterpillar: k + sum(s)."""
    check_sequence(s)
    return len(s) + sum(s)


def leaves(s: CatSeq) -> int:
    check_sequence(s)
    return sum(s)


def reversal(s: CatSeq) -> CatSeq:
    check_sequence(s)
    return s[::-1]


def spine_degrees(s: CatSeq) -> tuple[int, ...]:
    """Degrees of the spine vertices in the caterpillar of s."""
    check_sequence(s)
    if len(s) == 1:
        return (s[0],)
    return (s[0] + 1,) + tuple(x + 2 for x in s[1:-1]) + (s[-1] + 1,)


def is_subsequence(small: CatSeq, big: CatSeq) -> bool:
    """Shifted pointwise domination of spine degree sequences (the order <=)."""
    ds = spine_degrees(small)
    db = spine_degrees(big)
    if len(ds) > len(db):
        return False
    for shift in range(len(db) - len(ds) + 1):
        if all(ds[j] <= db[j + shift] for j in range(len(ds))):
            return True
    return False


def graft(s1: CatSeq, s2: CatSeq) -> CatSeq:
    """Merge overlapping at one spine vertex; associative with identity (2)."""
    check_sequence(s1)
    check_sequence(s2)
    return s1[:-1] + (s1[-1] + s2[0] - 2,) + s2[1:]


def _check_trunc_index(s: CatSeq, i: int) -> None:
    n = size(s)
    if not 3 <= i <= n:
        raise ValueError(f"truncation size {i} outside 3..{n}")


def left_recursive(s: CatSeq, i: int) -> CatSeq:
    """Reference recursion for the left truncation: peel from the right end."""
    _check_trunc_index(s, i)
    while size(s) > i:
        if s[-1] >= 2:
            s = s[:-1] + (s[-1] - 1,)
        else:
            s = s[:-2] + (s[-2] + 1,)
    return s


def right_recursive(s: CatSeq, i: int) -> CatSeq:
    return left_recursive(reversal(s), i)[::-1]


def alpha_beta_left(s: CatSeq, i: int) -> tuple[int, int]:
    """The unique (a, alpha) with left(s, i) = (s_1,...,s_a, alpha), where
    0 <= a <= k-1, 1 <= alpha <= s_{a+1}+1 and i = sum_{m<=a}(s_m+1) + alpha + 1.
    """
    _check_trunc_index(s, i)
    prefix = 0
    for a in range(len(s)):
        alpha = i - prefix - 1
        if 1 <= alpha <= s[a] + 1:
            return a, alpha
        prefix += s[a] + 1
    raise AssertionError(f"no (a, alpha) for {s} at i={i}")  # unreachable


def alpha_beta_right(s: CatSeq, i: int) -> tuple[int, int]:
    """The unique (b, beta) with right(s, i) = (beta, s_b,...,s_k), b 1-based."""
    a, alpha = alpha_beta_left(reversal(s), i)
    return len(s) - a + 1, alpha


def left(s: CatSeq, i: int) -> CatSeq:
    """Left caterpillar subsequence of size i, by closed form."""
    a, alpha = alpha_beta_left(s, i)
    return s[:a] + (alpha,)


def right(s: CatSeq, i: int) -> CatSeq:
    """Right caterpillar subsequence of size i."""
    b, beta = alpha_beta_right(s, i)
    return (beta,) + s[b - 1:]


def decompose(s: CatSeq, i: int) -> tuple[CatSeq, CatSeq]:
    """Split s as graft(left(s, i), right(s, size(s)+3-i))."""
    return left(s, i), right(s, size(s) + 3 - i)


def word_of(s: CatSeq) -> str:
    """The unique binary word w with rc(w) = s."""
    check_sequence(s)
    if len(s) == 1:
        return "1" * (s[0] - 2)
    parts = ["1" * (s[0] - 1)] + ["1" * x for x in s[1:-1]] + ["1" * (s[-1] - 1)]
    return "0".join(parts)


def leaf_function_caterpillar(s: CatSeq) -> LeafFunction:
    """Leaf function of the caterpillar of s: L(i) = F1(word_of(s), i-3) + 2."""
    from .words import f1_profile

    n = size(s)
    prof = f1_profile(word_of(s))
    values = (0, 0, 2) + tuple(f + 2 for f in prof)
    return LeafFunction(n, values)


# ---------------------------------------------------------------------------
# Poset machinery

HASSE_MAX_SIZE = 12


def all_sequences(max_size: int) -> list[CatSeq]:
    """All caterpillar sequences of size <= max_size, smallest sizes first.

    Sequences of size m are exactly the rc images of binary words of
    length m-3, so we enumerate words.
    """
    from .words import rc

    out = []
    for length in range(max(0, max_size - 2)):
        for bits in product("01", repeat=length):
            out.append(rc("".join(bits)))
    return out


def hasse_covers(max_size: int) -> set[tuple[CatSeq, CatSeq]]:
    """Cover relations (lower, upper) of the order restricted to size <= max_size.

    The order is size-monotone, so restricting to a size bound does not
    create spurious covers.
    """
    if max_size > HASSE_MAX_SIZE:
        raise ValueError(f"max_size {max_size} exceeds bound {HASSE_MAX_SIZE}")
    seqs = all_sequences(max_size)
    m = len(seqs)
    below = [0] * m  # below[j]: bitmask of strict predecessors of seqs[j]
    above = [0] * m
    for i, x in enumerate(seqs):
        for j, y in enumerate(seqs):
            if i != j and is_subsequence(x, y):
                below[j] |= 1 << i
                above[i] |= 1 << j
    covers = set()
    for j in range(m):
        mask = below[j]
        while mask:
            low = mask & -mask
            mask ^= low
            i = low.bit_length() - 1
            # cover iff no z with x < z < y
            if not (below[j] & above[i]):
                covers.add((seqs[i], seqs[j]))
    return covers


def hasse_dot(max_size: int) -> str:
    """DOT digraph of the Hasse diagram, edges lower -> upper."""
    covers = sorted(hasse_covers(max_size))
    lines = ["digraph hasse {"]
    names = sorted({s for pair in covers for s in pair} | set(all_sequences(max_size)))
    for s in names:
        lines.append(f'  "{format_sequence(s)}";')
    for lo, hi in covers:
        lines.append(f'  "{format_sequence(lo)}" -> "{format_sequence(hi)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonical_sequence(s: CatSeq) -> CatSeq:
    """Orientation-independent form: lexicographic min of s and its reversal.

    Used only where caterpillar graphs (not sequences) are compared.
    """
    check_sequence(s)
    return min(s, s[::-1])


# ---------------------------------------------------------------------------
# Text format


def parse_sequence(text: str) -> CatSeq:
    try:
        s = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad caterpillar sequence: {text!r}") from exc
    check_sequence(s)
    return s


def format_sequence(s: CatSeq) -> str:
    return ",".join(str(x) for x in s)
