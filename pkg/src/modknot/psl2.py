"""Elements of PSL(2, Z) and their relation to Lorenz words.

A word is turned into a matrix by substituting

    L = [[1, 1], [0, 1]],   R = [[1, 0], [1, 1]]

and multiplying left to right.  Going back, a hyperbolic matrix is sent to
its fixed-point quadratic form, whose river word recovers the conjugacy class.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import TYPE_CHECKING

from .errors import InputError, InternalConsistencyError, NotHyperbolicError
from .words import LorenzWord, canonical

if TYPE_CHECKING:
    from .qform import QuadForm

__all__ = [
    "Psl2Matrix",
    "IDENTITY",
    "L_MATRIX",
    "R_MATRIX",
    "parse_matrix",
    "mat_of_word",
    "is_hyperbolic",
    "form_of_matrix",
    "word_of_matrix",
    "conjugate_in_psl",
    "matrix_inverse",
]


@dataclass(frozen=True)
class Psl2Matrix:
    """Integer matrix [[a, b], [c, d]] with determinant 1, taken up to sign.

    The stored representative has positive trace; at trace zero the first
    nonzero entry among (a, b, c) is positive.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = self.a, self.b, self.c, self.d
        if a * d - b * c != 1:
            raise InputError(f"determinant of [[{a},{b}],[{c},{d}]] is {a * d - b * c}, not 1")
        t = a + d
        lead = t if t else next(v for v in (a, b, c) if v)
        if lead < 0:
            for name, v in zip("abcd", (a, b, c, d)):
                object.__setattr__(self, name, -v)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: Psl2Matrix) -> Psl2Matrix:
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Psl2Matrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __pow__(self, k: int) -> Psl2Matrix:
        if k < 0:
            return matrix_inverse(self) ** -k
        result, base = IDENTITY, self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"


IDENTITY = Psl2Matrix(1, 0, 0, 1)
L_MATRIX = Psl2Matrix(1, 1, 0, 1)
R_MATRIX = Psl2Matrix(1, 0, 1, 1)

_INT = r"\s*([+-]?\d+)\s*"
_MATRIX_RE = re.compile(f"^{_INT},{_INT};{_INT},{_INT}$")


def parse_matrix(text: str) -> Psl2Matrix:
    """Parse ``"a,b;c,d"``; whitespace around entries is ignored."""
    m = _MATRIX_RE.match(text)
    if not m:
        raise InputError(f"cannot parse matrix {text!r}; expected 'a,b;c,d'")
    return Psl2Matrix(*(int(g) for g in m.groups()))


def mat_of_word(w: LorenzWord) -> Psl2Matrix:
    a, b, c, d = 1, 0, 0, 1
    for ch in w.letters:
        if ch == "L":
            b, d = a + b, c + d
        else:
            a, c = a + b, c + d
    return Psl2Matrix(a, b, c, d)


def is_hyperbolic(m: Psl2Matrix) -> bool:
    return abs(m.trace) > 2


def _require_hyperbolic(m: Psl2Matrix) -> None:
    if not is_hyperbolic(m):
        raise NotHyperbolicError(f"matrix {m} has trace {m.trace}; |trace| must exceed 2")


def form_of_matrix(m: Psl2Matrix) -> QuadForm:
    """Primitive form vanishing at the fixed points of ``m``: [c, d-a, -b]/g."""
    from .qform import QuadForm

    _require_hyperbolic(m)
    a, b, c, d = m.a, m.b, m.c, m.d
    g = gcd(c, d - a, b)
    return QuadForm(c // g, (d - a) // g, -b // g)


def word_of_matrix(m: Psl2Matrix) -> tuple[LorenzWord, int]:
    """Canonical Lorenz word W and power k with ``m`` conjugate to mat(W)**k.

    ``m`` is primitive exactly when k == 1.
    """
    from .qform import river_word

    _require_hyperbolic(m)
    w = canonical(river_word(form_of_matrix(m)))
    base = mat_of_word(w)
    target = abs(m.trace)
    p, k = base, 1
    while p.trace < target:
        p, k = p @ base, k + 1
    if p.trace != target:
        raise InternalConsistencyError(
            f"trace {target} of {m} is not a power trace of mat({w}) (reached {p.trace} at k={k})"
        )
    return w, k


def conjugate_in_psl(m1: Psl2Matrix, m2: Psl2Matrix) -> bool:
    return word_of_matrix(m1) == word_of_matrix(m2)


def matrix_inverse(m: Psl2Matrix) -> Psl2Matrix:
    return Psl2Matrix(m.d, -m.b, -m.c, m.a)
