"""Lorenz words: finite aperiodic cyclic words over the alphabet {L, R}.

Indices are 1-based and wrap modulo the word length, so ``letter_at(w, i)``
reads the doubly infinite periodic sequence generated by ``w``.
The alphabet order is ``L < R``, which coincides with ASCII order, so plain
string comparison gives the lexicographic order used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

__all__ = [
    "LorenzWord",
    "parse_word",
    "single_shift",
    "letter_at",
    "canonical",
    "cyclically_equivalent",
    "inverse_word",
    "is_reciprocal",
    "minimal_period",
    "least_rotation_index",
    "lorenz_words",
]

_SWAP = str.maketrans("LR", "RL")


def minimal_period(s: str) -> int:
    """Smallest p such that ``s`` is a power of its length-p prefix."""
    n = len(s)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1] if n else 0
    return p if n % p == 0 else n


def least_rotation_index(s: str) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    t = s + s
    n = len(t)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        i = f[j - k - 1]
        while i != -1 and t[j] != t[k + i + 1]:
            if t[j] < t[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and t[j] != t[k + i + 1]:
            if t[j] < t[k + i + 1]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


@dataclass(frozen=True)
class LorenzWord:
    """A validated Lorenz word. Construction rejects anything invalid."""

    letters: str

    def __post_init__(self) -> None:
        s = self.letters
        if not isinstance(s, str):
            raise InputError(f"word must be a string, got {type(s).__name__}")
        bad = set(s) - {"L", "R"}
        if bad:
            raise InputError(f"invalid letter(s) {''.join(sorted(bad))!r} in word {s!r}")
        if len(s) < 2:
            raise InputError(f"word {s!r} has length < 2")
        p = minimal_period(s)
        if p < len(s):
            raise InputError(f"word {s!r} is periodic: {s[:p]!r} repeated {len(s) // p} times")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def __getitem__(self, i: int) -> str:
        return letter_at(self, i)


def parse_word(text: str) -> LorenzWord:
    return LorenzWord(text)


def single_shift(w: LorenzWord) -> LorenzWord:
    """Move the first letter to the end."""
    s = w.letters
    return LorenzWord(s[1:] + s[0])


def letter_at(w: LorenzWord, i: int) -> str:
    s = w.letters
    return s[(i - 1) % len(s)]


def canonical(w: LorenzWord) -> LorenzWord:
    s = w.letters
    k = least_rotation_index(s)
    return LorenzWord(s[k:] + s[:k]) if k else w


def cyclically_equivalent(w1: LorenzWord, w2: LorenzWord) -> bool:
    return len(w1) == len(w2) and canonical(w1) == canonical(w2)


def inverse_word(w: LorenzWord) -> LorenzWord:
    """Reverse the word and swap L with R; this is the word of the inverse matrix."""
    return LorenzWord(w.letters[::-1].translate(_SWAP))


def is_reciprocal(w: LorenzWord) -> bool:
    return cyclically_equivalent(inverse_word(w), w)


def lorenz_words(max_len: int, min_len: int = 2) -> list[LorenzWord]:
    """All canonical Lorenz words with ``min_len <= len <= max_len``.

    One representative per cyclic class, ordered by length then alphabetically.
    """
    out = []
    for m in range(max(min_len, 2), max_len + 1):
        for code in range(1 << m):
            s = format(code, f"0{m}b").translate(str.maketrans("01", "LR"))
            if minimal_period(s) == m and least_rotation_index(s) == 0:
                out.append(LorenzWord(s))
    return out
