"""Kennedy's alphabetization formula and a harness comparing all methods.

Rotations of both words are listed, alphabetized (L < R, a proper prefix
sorts before its extensions) separately and jointly, and the linking number
is read off as a quarter of C(sigma_1) + C(sigma_2) - C(sigma_3), where C is
the total displacement of a permutation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .errors import DomainError, EquivalentWordsError, InternalConsistencyError
from .linking import RsTriple, linking_number, oracle_link, rs_triples, symmetrized_link
from .words import LorenzWord, canonical, cyclically_equivalent, inverse_word, single_shift

__all__ = [
    "Permutation",
    "KennedyResult",
    "LinkReport",
    "shift_list",
    "alphabetize",
    "crossing_count",
    "kennedy_counts",
    "kennedy_link",
    "compare_methods",
]

Permutation = tuple[int, ...]


def shift_list(w: LorenzWord) -> list[LorenzWord]:
    out = [w]
    for _ in range(len(w) - 1):
        out.append(single_shift(out[-1]))
    return out


def alphabetize(words: Sequence[LorenzWord]) -> Permutation:
    """1-based alphabetical rank of each word, in input order."""
    texts = [w.letters for w in words]
    if len(set(texts)) != len(texts):
        raise EquivalentWordsError("cannot alphabetize a list with repeated words")
    order = sorted(range(len(texts)), key=texts.__getitem__)
    ranks = [0] * len(texts)
    for rank, idx in enumerate(order, 1):
        ranks[idx] = rank
    return tuple(ranks)


def crossing_count(p: Permutation) -> int:
    return sum(abs(v - i) for i, v in enumerate(p, 1))


@dataclass(frozen=True)
class KennedyResult:
    c1: int
    c2: int
    c3: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.c1 + self.c2 - self.c3, 4)

    def to_dict(self) -> dict[str, int]:
        v = self.value
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3,
                "value_num": v.numerator, "value_den": v.denominator}


def kennedy_counts(wa: LorenzWord, wb: LorenzWord) -> KennedyResult:
    """The three crossing counts entering Kennedy's formula."""
    if cyclically_equivalent(wa, wb):
        raise EquivalentWordsError(f"{wa} and {wb} are cyclic shifts of each other")
    la, lb = shift_list(wa), shift_list(wb)
    return KennedyResult(
        crossing_count(alphabetize(la)),
        crossing_count(alphabetize(lb)),
        crossing_count(alphabetize(la + lb)),
    )


def kennedy_link(wa: LorenzWord, wb: LorenzWord) -> Fraction:
    return kennedy_counts(wa, wb).value


@dataclass
class LinkReport:
    """Results of every requested method for one pair of words.

    Methods that were not run are left as ``None``.
    """

    word_a: LorenzWord
    word_b: LorenzWord
    triples: list[RsTriple] | None = None
    rs_link: int | None = None
    oracle_link: int | None = None
    kennedy: KennedyResult | None = None
    symmetrized: int | None = None
    agreement: dict[str, bool] = field(default_factory=dict)

    @property
    def kennedy_value(self) -> Fraction | None:
        return None if self.kennedy is None else self.kennedy.value

    def to_dict(self) -> dict[str, Any]:
        return {
            "word_a": self.word_a.letters,
            "word_b": self.word_b.letters,
            "canonical_a": canonical(self.word_a).letters,
            "canonical_b": canonical(self.word_b).letters,
            "triples": None if self.triples is None
            else [{"i": t.i, "j": t.j, "x": t.x} for t in self.triples],
            "rs_link": self.rs_link,
            "oracle_link": self.oracle_link,
            "kennedy": None if self.kennedy is None else self.kennedy.to_dict(),
            "symmetrized": self.symmetrized,
        }

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)


METHODS = ("rs", "oracle", "kennedy")


def compare_methods(
    wa: LorenzWord, wb: LorenzWord, methods: Sequence[str] = METHODS
) -> LinkReport:
    """Evaluate the requested methods on one pair and record whether they agree.

    rs and oracle are proved equal, so a mismatch between them raises
    ``InternalConsistencyError``.  Kennedy's value is only compared and
    recorded in ``report.agreement["kennedy"]``.
    """
    if cyclically_equivalent(wa, wb):
        raise EquivalentWordsError(f"{wa} and {wb} are cyclic shifts of each other")
    report = LinkReport(wa, wb)
    if "rs" in methods:
        report.triples = sorted(rs_triples(wa, wb))
        report.rs_link = -len(report.triples)
    if "oracle" in methods:
        report.oracle_link = oracle_link(wa, wb)
    if "kennedy" in methods:
        report.kennedy = kennedy_counts(wa, wb)
    try:
        report.symmetrized = symmetrized_link(wa, wb)
    except DomainError:
        # wa is conjugate to the inverse of wb
        report.symmetrized = None

    reference = report.rs_link if report.rs_link is not None else report.oracle_link
    if report.rs_link is not None and report.oracle_link is not None:
        if report.rs_link != report.oracle_link:
            raise InternalConsistencyError(
                f"rs ({report.rs_link}) and oracle ({report.oracle_link}) disagree on ({wa}, {wb})"
            )
        report.agreement["oracle"] = True
    if report.kennedy is not None:
        if reference is None:
            reference = linking_number(wa, wb)
        report.agreement["kennedy"] = report.kennedy.value == reference
    return report
