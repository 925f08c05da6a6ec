"""Skew-shape modules over the doubled two-vertex quiver, and flag counting.

A skew shape lam/mu and a parity i determine a nilpotent module with one
basis vector per skew box.  The four arrows act by moving boxes left along
rows or up along columns, gated by the box parity (s + t + i) mod 2:

    alpha:  (s, t) -> (s, t-1)   when the box parity is even
    beta:   (s, t) -> (s, t-1)   when the box parity is odd
    alpha*: (s, t) -> (s-1, t)   when the box parity is odd
    beta*:  (s, t) -> (s-1, t)   when the box parity is even

and zero whenever the target box is missing.  A basis vector sits at vertex
(s + t + i) mod 2, which is the unique grading making alpha and beta* act
0 -> 1 and beta and alpha* act 1 -> 0.  The relations
alpha* alpha = beta beta* and beta* beta = alpha alpha* are verified on
every basis vector at construction time.

With this orientation delta = alpha + beta walks left along rows, so its
Jordan type is the row-length partition lam for every shape module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gf
from .errors import DomainError, ResourceLimitError
from .partitions import Partition, check_partition, contains, format_partition, part, size
from .tableaux import enumerate_by_parity, ground_state

Box = tuple[int, int]

ARROW_NAMES = ("alpha", "beta", "alpha*", "beta*")


@dataclass(frozen=True)
class ShapeModule:
    outer: Partition
    inner: Partition
    parity: int
    boxes: tuple[Box, ...]
    actions: dict[str, dict[Box, Box]]

    @property
    def dim(self) -> int:
        return len(self.boxes)

    def vertex(self, box: Box) -> int:
        s, t = box
        return (s + t + self.parity) % 2

    def apply(self, arrow: str, box: Box) -> Box | None:
        if arrow not in ARROW_NAMES:
            raise DomainError(f"unknown arrow {arrow!r}")
        return self.actions[arrow].get(box)

    def to_json(self) -> dict:
        arrows = []
        for name in ARROW_NAMES:
            for src, dst in sorted(self.actions[name].items()):
                arrows.append([list(src), name, list(dst)])
        arrows.sort(key=lambda item: (item[0], item[1]))
        return {
            "outer": format_partition(self.outer),
            "inner": format_partition(self.inner),
            "parity": self.parity,
            "dim": self.dim,
            "arrows": arrows,
        }


def build_module(lam: Partition, mu: Partition, i: int) -> ShapeModule:
    """Construct the skew-shape module for mu inside lam at parity i."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if not contains(mu, lam):
        raise DomainError(f"{mu} is not contained in {lam}")
    boxes = tuple(
        (s, t) for s in range(len(lam)) for t in range(part(mu, s), lam[s])
    )
    box_set = set(boxes)
    actions: dict[str, dict[Box, Box]] = {name: {} for name in ARROW_NAMES}
    for s, t in boxes:
        even = (s + t + i) % 2 == 0
        left = (s, t - 1)
        up = (s - 1, t)
        if left in box_set:
            actions["alpha" if even else "beta"][(s, t)] = left
        if up in box_set:
            actions["beta*" if even else "alpha*"][(s, t)] = up
    module = ShapeModule(outer=lam, inner=mu, parity=i % 2, boxes=boxes, actions=actions)
    _check_relations(module)
    return module


def _compose(module: ShapeModule, first: str, second: str, box: Box) -> Box | None:
    mid = module.apply(first, box)
    return None if mid is None else module.apply(second, mid)


def _check_relations(module: ShapeModule) -> None:
    for box in module.boxes:
        lhs = _compose(module, "alpha", "alpha*", box)
        rhs = _compose(module, "beta*", "beta", box)
        if lhs != rhs:
            raise AssertionError(f"alpha* alpha != beta beta* at {box}")
        lhs = _compose(module, "beta", "beta*", box)
        rhs = _compose(module, "alpha*", "alpha", box)
        if lhs != rhs:
            raise AssertionError(f"beta* beta != alpha alpha* at {box}")


def _rank_fractions(mat: list[list[Fraction]]) -> int:
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if a else 0
    rank = 0
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(rows):
            if i != rank and a[i][c]:
                factor = a[i][c]
                a[i] = [v - factor * w for v, w in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def delta_partition_type(module: ShapeModule) -> Partition:
    """Jordan type of delta = alpha + beta, via ranks of its powers."""
    n = module.dim
    if n == 0:
        return ()
    index = {box: idx for idx, box in enumerate(module.boxes)}
    delta = [[Fraction(0)] * n for _ in range(n)]
    for name in ("alpha", "beta"):
        for src, dst in module.actions[name].items():
            delta[index[dst]][index[src]] += 1
    ranks = [n]
    power = [row[:] for row in delta]
    for _ in range(n):
        ranks.append(_rank_fractions(power))
        if ranks[-1] == 0:
            break
        power = [
            [sum((power[i][k] * delta[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
    if ranks[-1] != 0:
        raise AssertionError("delta is not nilpotent on a shape module")
    blocks_ge = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    jordan: list[int] = []
    for j, count in enumerate(blocks_ge, start=1):
        # count = number of Jordan blocks of size >= j
        while len(jordan) < count:
            jordan.append(0)
        for idx in range(count):
            jordan[idx] = j
    return check_partition(sorted(jordan, reverse=True))


def _gf_matrices(module: ShapeModule, field: gf.GF):
    n = module.dim
    index = {box: idx for idx, box in enumerate(module.boxes)}
    arrows = []
    for name in ARROW_NAMES:
        mat = gf.zero_matrix(n, n)
        for src, dst in module.actions[name].items():
            mat[index[dst]][index[src]] = 1
        arrows.append(mat)
    idempotents = [gf.zero_matrix(n, n), gf.zero_matrix(n, n)]
    for box, idx in index.items():
        idempotents[module.vertex(box)][idx][idx] = 1
    return arrows, idempotents


def _in_span(field: gf.GF, f: list[int], v: list[int]) -> bool:
    pivot = next(i for i, value in enumerate(f) if value)
    scale = field.mul(v[pivot], field.inv(f[pivot]))
    return all(value == field.mul(scale, base) for value, base in zip(v, f))


def _count_series(field, arrows, idempotents, d: tuple[int, ...]) -> int:
    dim = len(d)
    if dim == 0:
        return 1
    eps = d[-1]
    functional_basis = gf.left_kernel_basis(field, idempotents[1 - eps])
    if not functional_basis:
        return 0
    total = 0
    for coeffs in gf.projective_vectors(field, len(functional_basis)):
        f = [0] * dim
        for c, base in zip(coeffs, functional_basis):
            if c:
                f = [field.add(x, field.mul(c, b)) for x, b in zip(f, base)]
        if not any(f):
            continue
        if not all(_in_span(field, f, gf.row_vec_mul(field, f, X)) for X in arrows):
            continue
        kernel = gf.kernel_basis(field, [f])
        basis = [[vec[i] for vec in kernel] for i in range(dim)]
        sub_arrows = [
            gf.solve_columns(field, basis, gf.mat_mul(field, X, basis)) for X in arrows
        ]
        sub_idem = [
            gf.solve_columns(field, basis, gf.mat_mul(field, E, basis))
            for E in idempotents
        ]
        total += _count_series(field, sub_arrows, sub_idem, d[:-1])
    return total


def count_flags_fq(module: ShapeModule, d, q: int) -> int:
    """Exact number of composition series over F_q with quotients S_{d_t}.

    Enumerates, top down, every stable hyperplane whose quotient is the
    required simple; guarded to dim <= 7 and q <= 5 because the recursion is
    exhaustive by design.
    """
    d = tuple(int(b) for b in d)
    if len(d) != module.dim:
        raise DomainError(f"series length {len(d)} != module dimension {module.dim}")
    if module.dim > 7:
        raise ResourceLimitError(
            f"brute-force counting is guarded to dimension <= 7 (got {module.dim})"
        )
    if q > 5:
        raise ResourceLimitError(f"brute-force counting is guarded to q <= 5 (got {q})")
    field = gf.GF(q)
    arrows, idempotents = _gf_matrices(module, field)
    return _count_series(field, arrows, idempotents, d)


def conjecture1_prediction(lam: Partition, i: int, d, q: int) -> int:
    """Sum of q^(ground state) over the tableaux with i-parity string d."""
    lam = check_partition(lam)
    d = tuple(int(b) for b in d)
    if len(d) != size(lam):
        raise DomainError(f"parity string length {len(d)} != |lam| = {size(lam)}")
    return sum(q ** ground_state(T, i) for T in enumerate_by_parity(lam, i, d))
