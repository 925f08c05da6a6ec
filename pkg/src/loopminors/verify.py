"""Cross-route equality drivers: each checked identity computed two or three ways.

Theorem-style checks (three-route polynomial equality, the factorial
identity, the Pieri and path/Toeplitz equalities) are hard assertions:
a failing case is a regression.  The finite-field point-count comparison is
a conjecture, so its mismatches are reported, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from typing import Iterator

from .errors import DomainError
from .loop import word_to_loop
from .networks import lindstrom_minor
from .partitions import (
    Partition,
    check_partition,
    format_partition,
    partitions_up_to,
    size,
    subpartitions,
)
from .phi import phi_polynomial
from .shapemod import build_module, conjecture1_prediction, count_flags_fq
from .tableaux import check_word, enumerate_by_parity, enumerate_chess, expand_word
from .toeplitz import minor, pieri_determinant


@dataclass
class VerificationReport:
    check: str
    case: dict[str, object]
    values: dict[str, object]
    ok: bool = field(default=False)

    def to_json(self) -> dict:
        status = "ok" if self.ok else ("mismatch" if self.check == "conjecture1" else "fail")
        return {
            "check": self.check,
            "case": self.case,
            "values": {k: str(v) for k, v in self.values.items()},
            "status": status,
        }


def _case(lam=None, mu=None, i=None, word=None, d=None, q=None, j=None) -> dict:
    case: dict[str, object] = {}
    if lam is not None:
        case["lambda"] = format_partition(lam)
    if mu is not None:
        case["mu"] = format_partition(mu)
    if i is not None:
        case["parity"] = i
    if word is not None:
        case["word"] = ",".join(str(b) for b in word)
    if d is not None:
        case["d"] = ",".join(str(b) for b in d)
    if q is not None:
        case["q"] = q
    if j is not None:
        case["content"] = ",".join(str(v) for v in j)
    return case


def verify_theorem2(lam: Partition, i: int, word) -> VerificationReport:
    """Tableau route, path route, and Toeplitz route of the same polynomial."""
    lam = check_partition(lam)
    word = check_word(word)
    via_phi = phi_polynomial(lam, i, word)
    via_paths = lindstrom_minor(word, (), lam, i)
    via_minor = minor(word_to_loop(word), (), lam, i)
    ok = via_phi == via_paths == via_minor
    return VerificationReport(
        check="theorem2",
        case=_case(lam=lam, i=i, word=word),
        values={
            "phi": via_phi.text(),
            "lindstrom": via_paths.text(),
            "toeplitz": via_minor.text(),
        },
        ok=ok,
    )


def verify_prop1(lam: Partition, i: int, word, j) -> VerificationReport:
    """Tableau count against factorial times chess count, content by content."""
    lam = check_partition(lam)
    word = check_word(word)
    j = tuple(int(v) for v in j)
    if sum(j) != size(lam):
        raise DomainError(f"content {j} does not sum to |lam| = {size(lam)}")
    d = expand_word(word, j)
    tab_count = len(enumerate_by_parity(lam, i, d))
    istar = (i + word[0] + 1) % 2
    chess_count = len(enumerate_chess(lam, istar, len(word)).get(j, []))
    fact = 1
    for v in j:
        fact *= factorial(v)
    return VerificationReport(
        check="prop1",
        case=_case(lam=lam, i=i, word=word, j=j),
        values={
            "tab_count": tab_count,
            "factorial_times_chess": fact * chess_count,
        },
        ok=tab_count == fact * chess_count,
    )


def verify_conjecture1(lam: Partition, i: int, d, q: int) -> VerificationReport:
    """Brute-force point count against the ground-state prediction (report only)."""
    lam = check_partition(lam)
    d = tuple(int(b) for b in d)
    module = build_module(lam, (), i)
    predicted = conjecture1_prediction(lam, i, d, q)
    counted = count_flags_fq(module, d, q)
    return VerificationReport(
        check="conjecture1",
        case=_case(lam=lam, i=i, d=d, q=q),
        values={"prediction": predicted, "brute_force": counted},
        ok=predicted == counted,
    )


def verify_pieri(lam: Partition, i: int, word) -> VerificationReport:
    """Pieri determinant against the direct minor, on a word element."""
    lam = check_partition(lam)
    word = check_word(word)
    g = word_to_loop(word)
    via_pieri = pieri_determinant(g, lam, i)
    via_minor = minor(g, (), lam, i)
    return VerificationReport(
        check="pieri",
        case=_case(lam=lam, i=i, word=word),
        values={"pieri": via_pieri.text(), "minor": via_minor.text()},
        ok=via_pieri == via_minor,
    )


def verify_lindstrom(word, mu: Partition, lam: Partition, i: int) -> VerificationReport:
    """Path-family sum against the Toeplitz minor, including nonempty mu."""
    mu = check_partition(mu)
    lam = check_partition(lam)
    word = check_word(word)
    via_paths = lindstrom_minor(word, mu, lam, i)
    via_minor = minor(word_to_loop(word), mu, lam, i)
    return VerificationReport(
        check="lindstrom",
        case=_case(lam=lam, mu=mu, i=i, word=word),
        values={"lindstrom": via_paths.text(), "toeplitz": via_minor.text()},
        ok=via_paths == via_minor,
    )


# -- sweep drivers ---------------------------------------------------------


def alternating_words(length: int) -> list[tuple[int, ...]]:
    """Both alternating words of a given positive length."""
    if length < 1:
        raise DomainError("word length must be at least 1")
    return [tuple((start + t) % 2 for t in range(length)) for start in (0, 1)]


def all_words_up_to(max_word: int) -> list[tuple[int, ...]]:
    out = []
    for length in range(1, max_word + 1):
        out.extend(alternating_words(length))
    return out


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer tuples of a given length summing to total."""
    for cuts in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for cut in cuts:
            comp.append(cut - prev - 1)
            prev = cut
        comp.append(total + parts - 2 - prev)
        yield tuple(comp)


def sweep_theorem2(max_size: int, max_word: int) -> Iterator[VerificationReport]:
    for lam in partitions_up_to(max_size):
        for i in (0, 1):
            for word in all_words_up_to(max_word):
                yield verify_theorem2(lam, i, word)


def sweep_prop1(max_size: int, max_word: int) -> Iterator[VerificationReport]:
    for lam in partitions_up_to(max_size):
        for i in (0, 1):
            for word in all_words_up_to(max_word):
                for j in compositions(size(lam), len(word)):
                    yield verify_prop1(lam, i, word, j)


def sweep_pieri(max_size: int, max_word: int) -> Iterator[VerificationReport]:
    for lam in partitions_up_to(max_size):
        for i in (0, 1):
            for word in all_words_up_to(max_word):
                yield verify_pieri(lam, i, word)


def sweep_lindstrom(max_size: int, max_word: int) -> Iterator[VerificationReport]:
    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            for i in (0, 1):
                for word in all_words_up_to(max_word):
                    yield verify_lindstrom(word, mu, lam, i)


def realizable_parities(lam: Partition, i: int) -> list[tuple[int, ...]]:
    """Distinct i-parity strings of the standard tableaux of shape lam."""
    from .tableaux import enumerate_standard, parity_string

    return sorted({parity_string(T, i) for T in enumerate_standard(lam)})


def sweep_conjecture1(max_size: int, qs=(2, 3)) -> Iterator[VerificationReport]:
    for lam in partitions_up_to(max_size):
        for i in (0, 1):
            for d in realizable_parities(lam, i):
                for q in qs:
                    yield verify_conjecture1(lam, i, d, q)


def summarize(reports) -> dict:
    cases = 0
    failures = 0
    for report in reports:
        cases += 1
        if not report.ok:
            failures += 1
    return {"cases": cases, "failures": failures}
