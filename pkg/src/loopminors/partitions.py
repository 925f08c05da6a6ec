"""Partitions, skew containment, and the integer index windows behind minors.

A partition is stored as a tuple of its positive parts in weakly decreasing
order, indexed from 0 (so ``lam[0]`` is the longest row).  Reading an index
beyond the stored length yields 0.  The empty tuple is the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidWindowError

Partition = tuple[int, ...]


def check_partition(parts) -> Partition:
    """Normalize an iterable of parts into a valid partition tuple.

    Trailing zero parts are stripped; a negative part or an increase between
    consecutive parts raises :class:`DomainError`.
    """
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise DomainError(f"negative part {p} in partition")
        if prev is not None and p > prev:
            raise DomainError(f"parts not weakly decreasing: {p} after {prev}")
        prev = p
        out.append(p)
    while out and out[-1] == 0:
        out.pop()
    if 0 in out:
        raise DomainError("zero part before a positive part")
    return tuple(out)


def part(lam: Partition, n: int) -> int:
    """The n-th part of ``lam``, reading 0 beyond the stored length."""
    return lam[n] if 0 <= n < len(lam) else 0


def size(lam: Partition) -> int:
    return sum(lam)


def max_index(lam: Partition) -> int:
    """Largest n with ``lam[n] > 0``; 0 for the empty partition by convention."""
    return len(lam) - 1 if lam else 0


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff ``inner[t] <= outer[t]`` for every index t."""
    return all(part(inner, t) <= part(outer, t) for t in range(len(inner)))


def index_set(lam: Partition, i: int, n_max: int) -> list[int]:
    """The window ``[lam[n] + i - n for n in 0..n_max]`` in canonical order.

    The values are strictly decreasing in n (the parts weakly decrease while
    n strictly increases), hence pairwise distinct; the n = 0 element comes
    first.  Minor computations rely on this fixed ordering for a
    deterministic determinant sign.

    Raises :class:`InvalidWindowError` if the window would truncate ``lam``.
    """
    if n_max < max_index(lam):
        raise InvalidWindowError(
            f"window n_max={n_max} smaller than max index {max_index(lam)} of {lam}"
        )
    values = [part(lam, n) + i - n for n in range(n_max + 1)]
    assert all(a > b for a, b in zip(values, values[1:])), "index window not strictly decreasing"
    return values


def staircase(m: int) -> Partition:
    """The staircase partition (m, m-1, ..., 1); empty for m = 0."""
    if m < 0:
        raise DomainError(f"staircase index must be nonnegative, got {m}")
    return tuple(range(m, 0, -1))


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise DomainError("cannot partition a negative integer")

    def rec(remaining: int, cap: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        out = []
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                out.append((first,) + rest)
        return out

    return rec(n, n)


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of 0..n, smaller sizes first."""
    out: list[Partition] = []
    for m in range(n + 1):
        out.extend(partitions_of(m))
    return out


def subpartitions(lam: Partition) -> list[Partition]:
    """All partitions contained in ``lam``, in descending lexicographic order."""

    def rec(row: int, cap: int) -> list[tuple[int, ...]]:
        if row == len(lam):
            return [()]
        out = []
        for p in range(min(cap, lam[row]), -1, -1):
            for rest in rec(row + 1, p):
                out.append((p,) + rest)
        return out

    seen = []
    for mu in rec(0, lam[0] if lam else 0):
        seen.append(check_partition(mu))
    # the recursion can emit duplicates after zero-stripping
    unique = sorted(set(seen), reverse=True)
    return unique


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions; the boxes of ``outer`` not in ``inner``."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", check_partition(self.outer))
        object.__setattr__(self, "inner", check_partition(self.inner))
        if not contains(self.inner, self.outer):
            raise DomainError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def boxes(self) -> list[tuple[int, int]]:
        """Row-major (row, column) coordinates of the skew boxes."""
        return [
            (s, t)
            for s in range(len(self.outer))
            for t in range(part(self.inner, s), self.outer[s])
        ]
