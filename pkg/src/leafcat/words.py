"""Binary words: maximal-ones profiles, prefix normality and the reading map.

Words are plain Python strings over '0'/'1'; the empty word is "".
"""

from __future__ import annotations

from typing import Iterator

ENUM_MAX_LEN = 22


def check_binary(w: str) -> None:
    if any(c not in "01" for c in w):
        raise ValueError(f"not a binary word: {w!r}")


def prefix_ones(w: str) -> tuple[int, ...]:
    """Cumulative ones counts: entry i is |pref_i(w)|_1."""
    check_binary(w)
    out = [0]
    for c in w:
        out.append(out[-1] + (c == "1"))
    return tuple(out)


def f1(w: str, i: int) -> int:
    """Maximal number of 1s in a factor of length i."""
    check_binary(w)
    if not 0 <= i <= len(w):
        raise ValueError(f"window length {i} outside 0..{len(w)}")
    if i == 0:
        return 0
    count = w[:i].count("1")
    best = count
    for j in range(i, len(w)):
        count += (w[j] == "1") - (w[j - i] == "1")
        if count > best:
            best = count
    return best


def f1_profile(w: str) -> tuple[int, ...]:
    """(F1(w, 0), ..., F1(w, |w|))."""
    return tuple(f1(w, i) for i in range(len(w) + 1))


def is_prefix_normal(w: str) -> bool:
    """True iff every prefix has at least as many 1s as any equal-length factor."""
    pre = prefix_ones(w)
    return all(pre[i] == f1(w, i) for i in range(len(w) + 1))


def pn_violation(w: str):
    """Minimal-length witness (prefix, factor) with |factor|_1 > |prefix|_1,
    or None if w is prefix normal.  The factor is the first occurrence at the
    minimal violating length.
    """
    pre = prefix_ones(w)
    for length in range(1, len(w) + 1):
        limit = pre[length]
        count = limit  # the first window is the prefix itself
        for j in range(length, len(w)):
            count += (w[j] == "1") - (w[j - length] == "1")
            if count > limit:
                return w[:length], w[j - length + 1 : j + 1]
    return None


def is_k_prefix_normal(w: str, k: int) -> bool:
    """True iff every factor exceeds its equal-length prefix by at most k ones.

    The empty prefix (length 0) is included; it is vacuously satisfied.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    pre = prefix_ones(w)
    return all(f1(w, i) - pre[i] <= k for i in range(len(w) + 1))


def pnf(w: str) -> str:
    """Prefix normal form: the unique prefix normal word with the same profile."""
    prof = f1_profile(w)
    return "".join("01"[prof[i] - prof[i - 1]] for i in range(1, len(w) + 1))


def equivalent(w1: str, w2: str) -> bool:
    """Same length and same maximal-ones profile."""
    return len(w1) == len(w2) and f1_profile(w1) == f1_profile(w2)


def rc(w: str) -> tuple[int, ...]:
    """Reading caterpillar sequence: '0' starts a new spine vertex,
    '1' adds a leaf to the current one.  rc("") = (2)."""
    check_binary(w)
    seq = [2]
    for c in w:
        if c == "0":
            seq[-1] -= 1
            seq.append(1)
        else:
            seq[-1] += 1
    return tuple(seq)


def _extension_ok(w: str) -> bool:
    """Prefix normality check for w = u + a where u is already prefix normal.

    New factors are exactly the suffixes of w, so it suffices to compare each
    suffix ones-count against the equal-length prefix.
    """
    pre = prefix_ones(w)
    count = 0
    for i in range(1, len(w) + 1):
        count += w[len(w) - i] == "1"
        if count > pre[i]:
            return False
    return True


def enumerate_pnw(n: int) -> Iterator[str]:
    """All prefix normal words of length n, in lexicographic order.

    Prefix normal words are closed under taking prefixes, so the search tree
    is pruned at the first non-normal prefix.
    """
    if not 0 <= n <= ENUM_MAX_LEN:
        raise ValueError(f"n={n} outside supported range 0..{ENUM_MAX_LEN}")

    def grow(w: str) -> Iterator[str]:
        if len(w) == n:
            yield w
            return
        for a in "01":
            cand = w + a
            if _extension_ok(cand):
                yield from grow(cand)

    yield from grow("")
