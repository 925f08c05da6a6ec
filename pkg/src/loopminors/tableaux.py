"""Standard and chess tableaux, parity strings, expansion words, ground states.

Conventions frozen throughout the package: box coordinates (s, t) are
0-origin (top row and leftmost column are row and column zero), labels are
1-origin.  The parity of the box (s, t) at tableau parity i is
``(s + t + i) % 2``.  Rows of a tableau increase strictly left to right;
columns of a standard tableau increase strictly top to bottom, while a
semi-standard filling only needs weak column increase.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .partitions import Partition, check_partition, part, size

BitString = tuple[int, ...]


def is_alternating(bits) -> bool:
    """True iff consecutive entries always differ (vacuously for length <= 1)."""
    bits = tuple(bits)
    return all(a != b for a, b in zip(bits, bits[1:]))


def check_word(bits) -> BitString:
    word = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in word):
        raise DomainError(f"word entries must be bits, got {word}")
    if not is_alternating(word):
        raise DomainError(f"word {word} is not alternating")
    return word


def indicator(q) -> tuple[int, ...]:
    """Positions (1-origin) of the nonzero entries of q."""
    return tuple(t + 1 for t, value in enumerate(q) if value)


def box_parity(s: int, t: int, i: int) -> int:
    """Parity of s + t + i for the box in row s, column t."""
    if s < 0 or t < 0:
        raise DomainError(f"box coordinates must be nonnegative, got ({s}, {t})")
    return (s + t + i) % 2


def _rows_standard(rows) -> bool:
    """Strict increase along rows and down columns."""
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if len(lower) > len(upper):
            return False
        if any(upper[t] >= lower[t] for t in range(len(lower))):
            return False
    return True


class StandardTableau:
    """A filling of a partition shape with distinct, strictly increasing labels.

    Labels may be any distinct positive integers (content a bit string); a
    plain standard tableau of shape lam uses 1..|lam| exactly once.
    """

    __slots__ = ("rows", "shape", "_positions")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        shape = check_partition(len(row) for row in rows)
        if len(shape) != len(rows):
            raise DomainError("empty rows are not allowed in a tableau")
        if not _rows_standard(rows):
            raise DomainError(f"filling {rows} is not standard")
        positions: dict[int, tuple[int, int]] = {}
        for s, row in enumerate(rows):
            for t, label in enumerate(row):
                if label < 1:
                    raise DomainError(f"labels must be positive, got {label}")
                if label in positions:
                    raise DomainError(f"label {label} repeated")
                positions[label] = (s, t)
        self.rows = rows
        self.shape = shape
        self._positions = positions

    @property
    def n(self) -> int:
        return size(self.shape)

    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self._positions))

    def position(self, label: int) -> tuple[int, int]:
        try:
            return self._positions[label]
        except KeyError:
            raise DomainError(f"label {label} not in tableau") from None

    def row_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def swap(self, a: int, b: int) -> "StandardTableau | None":
        """Exchange labels a and b; None if the result is not standard."""
        sa, ta = self.position(a)
        sb, tb = self.position(b)
        grid = [list(row) for row in self.rows]
        grid[sa][ta], grid[sb][tb] = b, a
        if not _rows_standard(grid):
            return None
        return StandardTableau(grid)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({self.to_lists()})"


@dataclass(frozen=True)
class ChessTableau:
    """A semi-standard filling whose box parities match the label parities.

    The parity condition forces strict increase along rows and columns both,
    which is asserted on construction.
    """

    rows: tuple[tuple[int, ...], ...]
    parity: int
    content: tuple[int, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = check_partition(len(row) for row in rows)
        if len(shape) != len(rows):
            raise DomainError("empty rows are not allowed in a tableau")
        k = len(self.content)
        counts = [0] * k
        for s, row in enumerate(rows):
            for t, label in enumerate(row):
                if not 1 <= label <= k:
                    raise DomainError(f"label {label} outside 1..{k}")
                if label % 2 != box_parity(s, t, self.parity):
                    raise DomainError(
                        f"label {label} at box ({s},{t}) violates the parity condition"
                    )
                counts[label - 1] += 1
        if tuple(counts) != tuple(self.content):
            raise DomainError(f"content mismatch: counted {tuple(counts)}")
        assert _rows_standard(rows), "parity condition must force strictness"

    @property
    def shape(self) -> Partition:
        return check_partition(len(row) for row in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def enumerate_standard(lam: Partition) -> list[StandardTableau]:
    """All standard tableaux of shape lam with content (1, ..., 1).

    Returned in lexicographic order of the row-reading word, so callers and
    golden files see a stable enumeration.
    """
    lam = check_partition(lam)
    n = size(lam)
    if n == 0:
        return [StandardTableau(())]
    filled = [0] * len(lam)
    rows: list[list[int]] = [[] for _ in lam]
    found: list[StandardTableau] = []

    def place(label: int) -> None:
        if label > n:
            found.append(StandardTableau([tuple(r) for r in rows]))
            return
        for s in range(len(lam)):
            if filled[s] < lam[s] and (s == 0 or filled[s - 1] > filled[s]):
                rows[s].append(label)
                filled[s] += 1
                place(label + 1)
                filled[s] -= 1
                rows[s].pop()

    place(1)
    found.sort(key=lambda T: T.row_word())
    return found


def parity_string(tableau: StandardTableau, i: int) -> BitString:
    """Bit string d with d_t the i-parity of the box labeled t.

    Requires content (1, ..., 1): every label 1..n present exactly once.
    """
    n = tableau.n
    if tableau.labels() != tuple(range(1, n + 1)):
        raise DomainError("parity string requires content (1,...,1)")
    out = []
    for label in range(1, n + 1):
        s, t = tableau.position(label)
        out.append(box_parity(s, t, i))
    return tuple(out)


def enumerate_by_parity(lam: Partition, i: int, d) -> list[StandardTableau]:
    """Standard tableaux of shape lam whose i-parity string equals d."""
    lam = check_partition(lam)
    d = tuple(int(b) for b in d)
    if len(d) != size(lam):
        raise DomainError(f"parity string length {len(d)} != |lam| = {size(lam)}")
    return [T for T in enumerate_standard(lam) if parity_string(T, i) == d]


def enumerate_chess(
    lam: Partition, i: int, k: int
) -> dict[tuple[int, ...], list[ChessTableau]]:
    """All chess tableaux of shape lam and parity i with labels in 1..k.

    Grouped by content vector (length k); keys come out sorted.  The label
    bound k is explicit because the full family is infinite as k grows.
    """
    lam = check_partition(lam)
    if k < 0:
        raise DomainError(f"label bound must be nonnegative, got {k}")
    boxes = [(s, t) for s in range(len(lam)) for t in range(lam[s])]
    if not boxes:
        empty = ChessTableau(rows=(), parity=i, content=(0,) * k)
        return {(0,) * k: [empty]}
    grid = [[0] * lam[s] for s in range(len(lam))]
    grouped: dict[tuple[int, ...], list[ChessTableau]] = {}

    def fill(idx: int) -> None:
        if idx == len(boxes):
            rows = tuple(tuple(row) for row in grid)
            content = [0] * k
            for row in rows:
                for label in row:
                    content[label - 1] += 1
            tab = ChessTableau(rows=rows, parity=i, content=tuple(content))
            grouped.setdefault(tab.content, []).append(tab)
            return
        s, t = boxes[idx]
        lo = 1
        if t > 0:
            lo = grid[s][t - 1] + 1
        if s > 0:
            lo = max(lo, grid[s - 1][t])
        want = box_parity(s, t, i)
        for label in range(lo, k + 1):
            if label % 2 == want:
                grid[s][t] = label
                fill(idx + 1)
                grid[s][t] = 0

    fill(0)
    return {j: grouped[j] for j in sorted(grouped)}


def sigma(j, t: int) -> int:
    """Smallest s (1-origin) with j_1 + ... + j_s >= t."""
    j = tuple(int(v) for v in j)
    total = sum(j)
    if not 1 <= t <= total:
        raise DomainError(f"position {t} outside 1..{total}")
    running = 0
    for s, block in enumerate(j, start=1):
        running += block
        if running >= t:
            return s
    raise AssertionError("unreachable: cumulative sum covers the range")


def expand_word(word, j) -> BitString:
    """The bit string of length sum(j) whose t-th bit is word[sigma(t)].

    ``word`` must be alternating and the content j nonnegative with
    len(j) == len(word).
    """
    word = check_word(word)
    j = tuple(int(v) for v in j)
    if len(j) != len(word):
        raise DomainError(f"content length {len(j)} != word length {len(word)}")
    if any(v < 0 for v in j):
        raise DomainError(f"content must be nonnegative, got {j}")
    n = sum(j)
    return tuple(word[sigma(j, t) - 1] for t in range(1, n + 1))


def ground_state(tableau: StandardTableau, i: int) -> int:
    """Number of grounded d-transposition pairs of a standard tableau.

    A pair {s, t} with s < t counts when d_s = d_t (d the i-parity string),
    exchanging the labels s and t leaves the tableau standard, the row of s
    is above the row of t, and the column of t is left of the column of s.
    """
    d = parity_string(tableau, i)
    n = tableau.n
    count = 0
    for s in range(1, n + 1):
        for t in range(s + 1, n + 1):
            if d[s - 1] != d[t - 1]:
                continue
            if tableau.swap(s, t) is None:
                continue
            row_s, col_s = tableau.position(s)
            row_t, col_t = tableau.position(t)
            if row_s < row_t and col_t < col_s:
                count += 1
    return count


# -- flags of partitions --------------------------------------------------
#
# The q-step flag <-> tableau correspondence is a definitional device; these
# helpers exist so tests can exercise the round trip.


def tableau_to_flag(tableau: StandardTableau, n: int | None = None) -> list[Partition]:
    """The flag (lam^(0), ..., lam^(n)) recording when each box appears.

    lam^(t) holds the boxes with labels <= t; steps with no label are
    repeats.  ``n`` defaults to the largest label.
    """
    labels = tableau.labels()
    top = max(labels) if labels else 0
    if n is None:
        n = top
    if n < top:
        raise DomainError(f"flag length {n} smaller than largest label {top}")
    flag = []
    for t in range(n + 1):
        parts = [sum(1 for v in row if v <= t) for row in tableau.rows]
        flag.append(check_partition(parts))
    return flag


def flag_to_tableau(flag) -> StandardTableau:
    """Rebuild the tableau: the box added at step t gets label t."""
    flag = [check_partition(lam) for lam in flag]
    if not flag or flag[0] != ():
        raise DomainError("flag must start at the empty partition")
    final = flag[-1]
    grid = [[0] * p for p in final]
    for t in range(1, len(flag)):
        prev, cur = flag[t - 1], flag[t]
        added = [
            (s, part(prev, s))
            for s in range(len(cur))
            if part(cur, s) == part(prev, s) + 1
        ]
        if size(cur) == size(prev):
            if cur != prev:
                raise DomainError(f"step {t} changes shape without adding a box")
            continue
        if size(cur) != size(prev) + 1 or len(added) != 1:
            raise DomainError(f"step {t} does not add exactly one corner box")
        s, col = added[0]
        grid[s][col] = t
    return StandardTableau(grid)
