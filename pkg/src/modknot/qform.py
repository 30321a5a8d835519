"""Indefinite binary quadratic forms, their continued fractions and rivers.

Everything here is exact.  Quadratic surds are carried as ``(P + sqrt(D)) / Q``
with integers P, Q and the invariant ``Q | D - P**2``; floors come from
``math.isqrt``.

The right action of PSL(2, Z) on forms is substitution,
``(q . M)(x, y) = q(alpha x + beta y, gamma x + delta y)``.  Under it the two
topograph moves from a river edge are ``q . L = [a, b + 2a, a + b + c]`` and
``q . R = [a + b + c, b + 2c, c]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

from .errors import DegenerateFormError, InputError
from .psl2 import IDENTITY, Psl2Matrix, mat_of_word
from .words import LorenzWord

__all__ = [
    "QuadForm",
    "CfExpansion",
    "parse_form",
    "discriminant",
    "cf_expand",
    "river_word",
    "river_walk_word",
    "apply_matrix",
    "reduce_to_river_form",
    "automorph",
    "is_river_form",
]


@dataclass(frozen=True)
class QuadForm:
    """The form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b, self.c) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}, {self.c}]"


@dataclass(frozen=True)
class CfExpansion:
    """Eventually periodic continued fraction ``[preperiod; (period)*]``.

    ``period`` always has even length.  ``period_start_parity`` is the parity of
    the index of the first periodic partial quotient (index 0 is a_0).
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]
    period_start_parity: int

    def terms(self, n: int) -> list[int]:
        """The first ``n`` partial quotients."""
        out = list(self.preperiod[:n])
        while len(out) < n:
            out.extend(self.period[: n - len(out)])
        return out

    def __str__(self) -> str:
        pre = ", ".join(map(str, self.preperiod))
        per = ", ".join(map(str, self.period))
        return f"[{pre}; ({per})]" if pre else f"[({per})]"


def parse_form(text: str) -> QuadForm:
    parts = text.split(",")
    try:
        a, b, c = (int(p) for p in parts)
    except ValueError:
        raise InputError(f"cannot parse form {text!r}; expected 'a,b,c'") from None
    return QuadForm(a, b, c)


def discriminant(q: QuadForm) -> int:
    return q.discriminant


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _require_indefinite(q: QuadForm, primitive: bool = False) -> int:
    disc = q.discriminant
    if disc <= 0:
        raise DegenerateFormError(f"form {q} is definite or degenerate (discriminant {disc})")
    if _is_square(disc):
        raise DegenerateFormError(f"form {q} has square discriminant {disc}")
    if primitive and not q.is_primitive:
        raise DegenerateFormError(f"form {q} is not primitive")
    return disc


def cf_expand(q: QuadForm) -> CfExpansion:
    """Continued fraction of the first root (-b + sqrt(D)) / (2a) of ``q``.

    The preperiod is as short as possible; the period is the minimal period,
    doubled when that is odd.
    """
    disc = _require_indefinite(q)
    if q.a == 0:
        raise DegenerateFormError(f"form {q} has a = 0")
    s = isqrt(disc)
    p, qq = -q.b, 2 * q.a
    seen: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    while (p, qq) not in seen:
        seen[(p, qq)] = len(terms)
        # floor((p + sqrt(D)) / qq) for irrational sqrt(D)
        t = (p + s) // qq if qq > 0 else (p + s + 1) // qq
        terms.append(t)
        p = t * qq - p
        qq = (disc - p * p) // qq
    start = seen[(p, qq)]
    period = tuple(terms[start:])
    if len(period) % 2:
        period = period * 2
    return CfExpansion(tuple(terms[:start]), period, start % 2)


def river_word(q: QuadForm) -> LorenzWord:
    """A river word of ``q`` read off the continued fraction of its first root.

    Partial quotient a_k contributes a run of a_k copies of L (k even) or
    R (k odd).  The result is one rotation of the river word; canonicalize
    to compare classes.
    """
    _require_indefinite(q, primitive=True)
    cf = cf_expand(q)
    parity = cf.period_start_parity
    letters = "".join(
        ("R" if (parity + t) % 2 else "L") * n for t, n in enumerate(cf.period)
    )
    return LorenzWord(letters)


def apply_matrix(q: QuadForm, m: Psl2Matrix) -> QuadForm:
    """The form ``(x, y) -> q(alpha x + beta y, gamma x + delta y)``."""
    a, b, c = q.a, q.b, q.c
    al, be, ga, de = m.a, m.b, m.c, m.d
    return QuadForm(
        a * al * al + b * al * ga + c * ga * ga,
        2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
        a * be * be + b * be * de + c * de * de,
    )


def is_river_form(q: QuadForm) -> bool:
    """True for a positive river form, a > 0 > c."""
    return q.a > 0 > q.c


def _rho(q: QuadForm, disc: int, s: int) -> tuple[QuadForm, Psl2Matrix]:
    # q . [[0, -1], [1, t]] = [c, 2ct - b, ...] with the middle coefficient normalized
    a, b, c = q.a, q.b, q.c
    r = abs(c)
    if r * r > disc:
        nb = (-b) % (2 * r)
        if nb > r:
            nb -= 2 * r
    else:
        nb = s - (s + b) % (2 * r)
    t = (nb + b) // (2 * c)
    m = Psl2Matrix(0, -1, 1, t)
    return QuadForm(c, nb, (nb * nb - disc) // (4 * c)), m


def reduce_to_river_form(q: QuadForm) -> tuple[QuadForm, Psl2Matrix]:
    """Find M with ``apply_matrix(q, M)`` a positive river form.

    Gauss reduction steps are applied until the outer coefficients have
    opposite signs, then a quarter turn fixes the orientation if needed.
    """
    disc = _require_indefinite(q)
    s = isqrt(disc)
    m = IDENTITY
    while q.a * q.c > 0:
        q, step = _rho(q, disc, s)
        m = m @ step
    if q.a < 0:
        quarter = Psl2Matrix(0, -1, 1, 0)
        q, m = apply_matrix(q, quarter), m @ quarter
    return q, m


def _river_step(q: QuadForm) -> tuple[str, QuadForm]:
    a, b, c = q.a, q.b, q.c
    v = a + b + c
    if v > 0:
        return "R", QuadForm(v, b + 2 * c, c)
    return "L", QuadForm(a, b + 2 * a, v)


def river_walk_word(q: QuadForm) -> LorenzWord:
    """Walk the river from the positive river form ``q`` until it recurs."""
    _require_indefinite(q, primitive=True)
    if not is_river_form(q):
        raise DegenerateFormError(f"form {q} is not a positive river form (need a > 0 > c)")
    letters = []
    cur = q
    while True:
        ch, cur = _river_step(cur)
        letters.append(ch)
        if cur == q:
            return LorenzWord("".join(letters))


def automorph(q: QuadForm) -> Psl2Matrix:
    """Generator of the stabilizer of the positive river form ``q``."""
    return mat_of_word(river_walk_word(q))
