"""Chip-diagram networks, non-crossing path families, and their minor sums.

A chip of parity b has sources and sinks at every integer level; level l
connects straight across (weight 1) and, when l has parity b, also
diagonally up to l + 1 (weight a).  Concatenating chips along an
alternating word gives the planar network whose weight-matrix minors count
non-crossing path families.

A path through k chips is stored as its level sequence after each chip
(length k + 1); a family stores one such sequence per path.  Two monotone
paths share a vertex or an edge exactly when their level sequences touch,
so non-crossing reduces to strict interleaving at every junction column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .multipoly import MultiPoly
from .partitions import Partition, check_partition, contains, index_set, max_index
from .tableaux import BitString, ChessTableau, check_word

ChipWord = BitString


def chip_weight_entry(bit: int, source: int, sink: int) -> MultiPoly:
    """Weight-matrix entry of a single chip, as a polynomial in its parameter."""
    if bit not in (0, 1):
        raise DomainError(f"chip parity must be 0 or 1, got {bit}")
    if sink == source:
        return MultiPoly.one(1)
    if sink == source + 1 and source % 2 == bit:
        return MultiPoly.variable(1, 0)
    return MultiPoly.zero(1)


@dataclass(frozen=True)
class PathFamily:
    """Pairwise non-crossing paths through a concatenated chip diagram."""

    word: ChipWord
    levels: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        word = check_word(self.word)
        object.__setattr__(self, "word", word)
        levels = tuple(tuple(int(l) for l in path) for path in self.levels)
        object.__setattr__(self, "levels", levels)
        k = len(word)
        for path in levels:
            if len(path) != k + 1:
                raise DomainError(f"path {path} does not traverse {k} chips")
            for c in range(1, k + 1):
                step = path[c] - path[c - 1]
                if step not in (0, 1):
                    raise DomainError(f"path {path} takes an illegal step at chip {c}")
                if step == 1 and path[c - 1] % 2 != word[c - 1]:
                    raise DomainError(
                        f"path {path} ascends chip {c} from level {path[c - 1]}, "
                        "which that chip does not allow"
                    )
        for upper, lower in zip(levels, levels[1:]):
            if any(a <= b for a, b in zip(upper, lower)):
                raise DomainError(
                    "paths must be listed top to bottom and stay strictly apart"
                )

    @property
    def sources(self) -> tuple[int, ...]:
        return tuple(path[0] for path in self.levels)

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(path[-1] for path in self.levels)

    def ascent_chips(self, n: int) -> tuple[int, ...]:
        """1-origin chip indices where the n-th path ascends."""
        path = self.levels[n]
        return tuple(c for c in range(1, len(path)) if path[c] == path[c - 1] + 1)

    def to_json(self) -> list[list[int]]:
        return [list(path) for path in self.levels]


def _paths_between(word: ChipWord, source: int, sink: int) -> list[tuple[int, ...]]:
    """All admissible level sequences from source to sink, lexicographically."""
    k = len(word)
    found: list[tuple[int, ...]] = []

    def walk(prefix: list[int]) -> None:
        c = len(prefix) - 1
        level = prefix[-1]
        if sink - level > k - c:
            return
        if level > sink:
            return
        if c == k:
            if level == sink:
                found.append(tuple(prefix))
            return
        walk(prefix + [level])
        if level % 2 == word[c]:
            walk(prefix + [level + 1])

    walk([source])
    return found


def enumerate_families(word, mu: Partition, lam: Partition, i: int) -> list[PathFamily]:
    """All non-crossing families joining the mu-sources to the lam-sinks.

    Path n runs from mu[n] + i - n to lam[n] + i - n for n in
    0..maxIndex(lam); the list is empty when no family exists.
    """
    word = check_word(word)
    mu = check_partition(mu)
    lam = check_partition(lam)
    if not contains(mu, lam):
        raise DomainError(f"{mu} is not contained in {lam}")
    n_max = max_index(lam)
    sources = index_set(mu, i, n_max)
    sinks = index_set(lam, i, n_max)
    per_path = [_paths_between(word, u, v) for u, v in zip(sources, sinks)]
    families: list[PathFamily] = []

    def extend(n: int, chosen: list[tuple[int, ...]]) -> None:
        if n == len(per_path):
            families.append(PathFamily(word=word, levels=tuple(chosen)))
            return
        for path in per_path[n]:
            if chosen and any(a <= b for a, b in zip(chosen[-1], path)):
                continue
            extend(n + 1, chosen + [path])

    extend(0, [])
    families.sort(key=lambda fam: fam.levels)
    return families


def family_weight(family: PathFamily) -> MultiPoly:
    """Monomial a^j with j_t the number of ascents inside chip t."""
    k = len(family.word)
    counts = [0] * k
    for n in range(len(family.levels)):
        for chip in family.ascent_chips(n):
            counts[chip - 1] += 1
    return MultiPoly.monomial(k, tuple(counts))


def lindstrom_minor(word, mu: Partition, lam: Partition, i: int) -> MultiPoly:
    """Sum of family weights; the path-side value of the Toeplitz minor."""
    word = check_word(word)
    k = len(word)
    total = MultiPoly.zero(k)
    for family in enumerate_families(word, mu, lam, i):
        total = total + family_weight(family)
    return total


def path_to_tableau(family: PathFamily) -> ChessTableau:
    """Record each path's ascent chips as a tableau row.

    Only defined for families whose sources are i, i-1, ..., i-N with i in
    {0, 1} (the empty-mu case); the result is a chess tableau of parity
    (i + word[0] + 1) mod 2 whose content counts ascents per chip.
    """
    sources = family.sources
    if not sources:
        raise DomainError("cannot read a tableau off an empty family")
    i = sources[0]
    if i not in (0, 1) or any(sources[n] != i - n for n in range(len(sources))):
        raise DomainError("tableau bijection requires empty-mu sources i, i-1, ...")
    k = len(family.word)
    istar = (i + family.word[0] + 1) % 2
    rows = []
    counts = [0] * k
    for n in range(len(family.levels)):
        ascents = family.ascent_chips(n)
        for chip in ascents:
            counts[chip - 1] += 1
        if ascents:
            rows.append(ascents)
        elif any(
            family.ascent_chips(m) for m in range(n + 1, len(family.levels))
        ):
            raise DomainError("ascent counts do not form a partition shape")
    return ChessTableau(rows=tuple(rows), parity=istar, content=tuple(counts))


def render_family(family: PathFamily) -> str:
    """ASCII picture: levels top-down, sources left, sinks right.

    Vertices on a path print as '*', others as 'o'; horizontal edges as
    dashes and diagonal ascents as '/'.
    """
    k = len(family.word)
    top = max(max(path) for path in family.levels)
    bottom = min(min(path) for path in family.levels)
    occupied = {(c, path[c]) for path in family.levels for c in range(k + 1)}
    horizontal = {
        (c, path[c])
        for path in family.levels
        for c in range(1, k + 1)
        if path[c] == path[c - 1]
    }
    diagonal = {
        (c, path[c - 1])
        for path in family.levels
        for c in range(1, k + 1)
        if path[c] == path[c - 1] + 1
    }
    width = 5 + 4 * k + 1
    lines = []
    for level in range(top, bottom - 1, -1):
        row = list(f"{level:>4} ".ljust(width))
        for c in range(k + 1):
            row[5 + 4 * c] = "*" if (c, level) in occupied else "o"
        for c in range(1, k + 1):
            if (c, level) in horizontal:
                row[5 + 4 * c - 3] = row[5 + 4 * c - 2] = row[5 + 4 * c - 1] = "-"
        lines.append("".join(row).rstrip())
        if level > bottom:
            gap = list(" " * width)
            for c in range(1, k + 1):
                if (c, level - 1) in diagonal:
                    gap[5 + 4 * c - 2] = "/"
            gap_text = "".join(gap).rstrip()
            if gap_text:
                lines.append(gap_text)
    return "\n".join(lines)
