"""Linking numbers of modular (equivalently Lorenz) knots.

For words A = a_1..a_m and B = b_1..b_n, minus the linking number counts
triples (i, j, x) with a_i = L, b_j = R, the next x letters agreeing, and
then a_{i+x+1} = R, b_{j+x+1} = L.  Put differently: occurrences, modulo the
periods, of a word W' with L W' R in the sequence of A and R W' L in the
sequence of B.  Here x is the length of W'.

``oracle_link`` gets the same number from the template picture instead:
strands are placed on the branch line at the binary fractions spelled by
their itineraries (L = 0, R = 1) and crossings are read off by comparing
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .errors import EquivalentWordsError, NotReciprocalError
from .words import LorenzWord, cyclically_equivalent, inverse_word, is_reciprocal

__all__ = [
    "RsTriple",
    "rs_triples",
    "linking_number",
    "oracle_link",
    "rs_self",
    "symmetrized_link",
    "check_reciprocal_identity",
    "branch_position",
]


class RsTriple(NamedTuple):
    i: int
    j: int
    x: int


def rs_triples(wa: LorenzWord, wb: LorenzWord) -> set[RsTriple]:
    """All RS-intersection triples of ``wa`` and ``wb``.

    Pairs (i, j) whose itineraries never separate are skipped; that only
    happens when the words are cyclic shifts of each other.
    """
    a, b = wa.letters, wb.letters
    m, n = len(a), len(b)
    bound = lcm(m, n)
    out = set()
    for i in range(m):
        if a[i] != "L":
            continue
        for j in range(n):
            if b[j] != "R":
                continue
            for k in range(1, bound + 1):
                ca, cb = a[(i + k) % m], b[(j + k) % n]
                if ca != cb:
                    if ca == "R":
                        out.add(RsTriple(i + 1, j + 1, k - 1))
                    break
    return out


def _require_inequivalent(wa: LorenzWord, wb: LorenzWord) -> None:
    if cyclically_equivalent(wa, wb):
        raise EquivalentWordsError(f"{wa} and {wb} are cyclic shifts of each other")


def linking_number(wa: LorenzWord, wb: LorenzWord) -> int:
    _require_inequivalent(wa, wb)
    return -len(rs_triples(wa, wb))


def branch_position(w: LorenzWord, i: int) -> Fraction:
    """Point of the branch line [0, 1] whose doubling-map itinerary starts at letter i of w.

    The itinerary is periodic, so the binary expansion 0.(bits)* sums to
    bits / (2**m - 1).
    """
    m = len(w)
    k = (i - 1) % m
    rotated = w.letters[k:] + w.letters[:k]
    return Fraction(int(rotated.translate(str.maketrans("LR", "01")), 2), 2**m - 1)


def oracle_link(wa: LorenzWord, wb: LorenzWord) -> int:
    """Linking number from the crossings of strands on the Lorenz template.

    A strand of ``wa`` on the left lobe and one of ``wb`` on the right lobe
    cross (with sign -1) exactly when the ``wb`` strand returns to the branch
    below the ``wa`` strand.
    """
    _require_inequivalent(wa, wb)
    m, n = len(wa), len(wb)
    xs = [branch_position(wa, i + 1) for i in range(m)]
    ys = [branch_position(wb, j + 1) for j in range(n)]
    count = 0
    for i in range(m):
        if wa.letters[i] != "L":
            continue
        for j in range(n):
            if wb.letters[j] == "R" and ys[(j + 1) % n] < xs[(i + 1) % m]:
                count += 1
    return -count


def rs_self(w: LorenzWord) -> int:
    """RS-intersection count of a word with itself."""
    return len(rs_triples(w, w))


def symmetrized_link(wa: LorenzWord, wb: LorenzWord) -> int:
    """link(k_A + k_{A^-1}, k_B + k_{B^-1}) as a sum of four linking numbers."""
    ia, ib = inverse_word(wa), inverse_word(wb)
    _require_inequivalent(wa, wb)
    _require_inequivalent(wa, ib)
    return (
        linking_number(wa, wb)
        + linking_number(wa, ib)
        + linking_number(ia, wb)
        + linking_number(ia, ib)
    )


def check_reciprocal_identity(wa: LorenzWord, wb: LorenzWord) -> bool:
    """Whether 4 link(A, B) equals the symmetrized link; needs A or B reciprocal."""
    if not (is_reciprocal(wa) or is_reciprocal(wb)):
        raise NotReciprocalError(f"neither {wa} nor {wb} is reciprocal")
    return 4 * linking_number(wa, wb) == symmetrized_link(wa, wb)
