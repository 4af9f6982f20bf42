"""
The three incidence matrices controlling the counts of normal sequences,
and the exact big-integer counting pipeline built on them.

  M(n)      n! x n!, 0/1, indexed by the canonical enumeration of
            square-free braids; entry 1 when the row braid may precede the
            column braid in a normal sequence.
  Mprime(n) 2^(n-1) square, indexed by subsets of {1, ..., n-1} in binary
            order; entry (I, J) counts braids with left descents exactly I
            and right descents containing J.
  Mbar(n)   p(n) square, indexed by partitions of n in first-occurrence
            order; rows of Mprime summed over subsets sharing a partition,
            columns taken at the canonical subset of the column partition.

b(n, d) counts the positive n-braids of degree at most d; b(n, d, x) those
whose d-th normal factor equals the square-free braid x.  All three
matrices compute these numbers through row-vector iteration; the reduced
matrix is the default path, the larger ones exist for cross-validation.
Arithmetic is exact arbitrary-precision integer throughout.
"""
from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from . import descents, permutations
from .descents import PartitionN
from .permutations import Perm

DEFAULT_FACTORIAL_CAP = 8
DEFAULT_SUBSET_CAP = 12


@dataclasses.dataclass(frozen=True)
class CountMatrix:
    """A square matrix of exact non-negative integers with typed labels."""

    kind: str  # "M" | "Mprime" | "Mbar"
    n: int
    labels: tuple
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.rows) == len(self.labels)
        assert all(len(row) == len(self.labels) for row in self.rows)

    @property
    def size(self) -> int:
        return len(self.labels)

    def label_index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown {self.kind} label {label!r}") from None

    def entry(self, row_label, col_label) -> int:
        return self.rows[self.label_index(row_label)][self.label_index(col_label)]

    def transpose(self) -> "CountMatrix":
        return CountMatrix(
            kind=self.kind,
            n=self.n,
            labels=self.labels,
            rows=tuple(zip(*self.rows)),
        )

    def label_strings(self) -> tuple[str, ...]:
        if self.kind == "M":
            return tuple(permutations.format_permutation(x) for x in self.labels)
        if self.kind == "Mprime":
            return tuple(permutations.format_descent_set(s) for s in self.labels)
        return tuple(descents.format_parts(p) for p in self.labels)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "labels": list(self.label_strings()),
            "rows": [[str(e) for e in row] for row in self.rows],
        }

    def to_csv_rows(self) -> list[list[str]]:
        header = ["label"] + list(self.label_strings())
        out = [header]
        for label, row in zip(self.label_strings(), self.rows):
            out.append([label] + [str(e) for e in row])
        return out


def build_M(n: int, cap: int = DEFAULT_FACTORIAL_CAP) -> CountMatrix:
    """
    The full n! x n! 0/1 normality matrix over the canonical enumeration.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the factorial-size cap {cap}")
    enum = permutations.simple_enumeration(n)
    dr = [descents.mask_of(permutations.d_right(x)) for x in enum]
    dl = [descents.mask_of(permutations.d_left(x)) for x in enum]
    rows = tuple(
        tuple(1 if dl_y & ~dr_x == 0 else 0 for dl_y in dl) for dr_x in dr
    )
    return CountMatrix(kind="M", n=n, labels=enum, rows=rows)


@dataclasses.dataclass(frozen=True)
class MStructureReport:
    """Pass/fail record for the three structural laws of M(n)."""

    n: int
    boundary_ok: bool        # first column and last row all ones, first row and last column almost all zeros
    stacked_blocks_ok: bool  # first (n-1)! columns are n stacked copies of M(n-1)
    class_collapse_ok: bool  # equal right-descent rows coincide, equal left-descent columns coincide

    @property
    def all_ok(self) -> bool:
        return self.boundary_ok and self.stacked_blocks_ok and self.class_collapse_ok


def structural_check_M(n: int, cap: int = DEFAULT_FACTORIAL_CAP) -> MStructureReport:
    m = build_M(n, cap=cap)
    size = m.size
    rows = m.rows

    boundary = (
        all(rows[i][0] == 1 for i in range(size))
        and all(rows[size - 1][j] == 1 for j in range(size))
        and all(rows[0][j] == 0 for j in range(1, size))
        and all(rows[i][size - 1] == 0 for i in range(size - 1))
    )

    if n == 1:
        stacked = True
    else:
        prev = build_M(n - 1, cap=cap)
        block = math.factorial(n - 1)
        stacked = all(
            rows[copy * block + i][j] == prev.rows[i][j]
            for copy in range(n)
            for i in range(block)
            for j in range(block)
        )

    enum = m.labels
    dr = [permutations.d_right(x) for x in enum]
    dl = [permutations.d_left(x) for x in enum]
    by_dr: dict[frozenset, int] = {}
    by_dl: dict[frozenset, int] = {}
    collapse = True
    for k in range(size):
        ref = by_dr.setdefault(dr[k], k)
        if rows[ref] != rows[k]:
            collapse = False
    cols = tuple(zip(*rows))
    for k in range(size):
        ref = by_dl.setdefault(dl[k], k)
        if cols[ref] != cols[k]:
            collapse = False

    return MStructureReport(
        n=n,
        boundary_ok=boundary,
        stacked_blocks_ok=stacked,
        class_collapse_ok=collapse,
    )


def _ahat_by_masks(comps: list[tuple[int, ...]], i_mask: int, j_mask: int) -> int:
    rows = tuple(sorted(comps[i_mask], reverse=True))
    cols = tuple(sorted(comps[j_mask], reverse=True))
    return descents._count_by_sorted_margins(rows, cols)


def _a_column(n: int, comps: list[tuple[int, ...]], j_mask: int) -> list[int]:
    """
    Exact-left counts a(n, I, J) for all subset masks I at the fixed
    column J: start from the contained-descents counts and apply the
    signed superset transform.
    """
    size = 1 << (n - 1)
    arr = [_ahat_by_masks(comps, i_mask, j_mask) for i_mask in range(size)]
    for b in range(n - 1):
        bit = 1 << b
        for i_mask in range(size):
            if not i_mask & bit:
                arr[i_mask] -= arr[i_mask | bit]
    return arr


def _compositions_by_mask(n: int) -> list[tuple[int, ...]]:
    return [
        descents.composition_of(descents.set_of_mask(mask), n)
        for mask in range(1 << (n - 1))
    ]


def build_Mprime(n: int, cap: int = DEFAULT_SUBSET_CAP) -> CountMatrix:
    """
    The 2^(n-1) square matrix of exact-left / contained-right descent
    counts over subsets in binary order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the subset-size cap {cap}")
    comps = _compositions_by_mask(n)
    size = 1 << (n - 1)
    columns = [_a_column(n, comps, j_mask) for j_mask in range(size)]
    rows = tuple(tuple(columns[j][i] for j in range(size)) for i in range(size))
    labels = tuple(descents.subsets_in_binary_order(n))
    return CountMatrix(kind="Mprime", n=n, labels=labels, rows=rows)


def build_Mbar(n: int, cap: int = DEFAULT_SUBSET_CAP, method: str = "counts") -> CountMatrix:
    """
    The p(n) square partition-level matrix.  The default path computes the
    entries from the margin-count formulas; method="sweep" tallies all n!
    permutations instead and is kept as an independent cross-check.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the subset-size cap {cap}")
    labels = descents.partitions_in_order(n)
    index = {lam: i for i, lam in enumerate(labels)}
    size = 1 << (n - 1)

    if method == "counts":
        comps = _compositions_by_mask(n)
        class_of = [index[tuple(sorted(comps[mask], reverse=True))] for mask in range(size)]
        rows_acc = [[0] * len(labels) for _ in labels]
        for mu_idx, mu in enumerate(labels):
            j_mask = descents.mask_of(descents.set_of_composition(mu))
            col = _a_column(n, comps, j_mask)
            for i_mask in range(size):
                rows_acc[class_of[i_mask]][mu_idx] += col[i_mask]
    elif method == "sweep":
        census = descents.left_right_descent_census(n)
        class_of = [
            index[descents.partition_of(descents.set_of_mask(mask), n)]
            for mask in range(size)
        ]
        mu_masks = [descents.mask_of(descents.set_of_composition(mu)) for mu in labels]
        rows_acc = [[0] * len(labels) for _ in labels]
        for (left, right), count in census.items():
            lam_idx = class_of[left]
            for mu_idx, mu_mask in enumerate(mu_masks):
                if mu_mask & ~right == 0:
                    rows_acc[lam_idx][mu_idx] += count
    else:
        raise ValueError(f"unknown build method {method!r}")

    rows = tuple(tuple(r) for r in rows_acc)
    return CountMatrix(kind="Mbar", n=n, labels=labels, rows=rows)


def vec_times_matrix(v: Sequence[int], m: CountMatrix) -> tuple[int, ...]:
    """Row vector times matrix, exact integers."""
    if len(v) != m.size:
        raise ValueError(f"vector length {len(v)} does not match matrix size {m.size}")
    cols = range(m.size)
    return tuple(sum(v[i] * m.rows[i][j] for i in range(m.size)) for j in cols)


def _iterate_ones(m: CountMatrix, steps: int) -> tuple[int, ...]:
    v: tuple[int, ...] = (1,) * m.size
    for _ in range(steps):
        v = vec_times_matrix(v, m)
    return v


def b_of_partition(n: int, d: int, lam: PartitionN, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """
    The count of degree-at-most-d positive n-braids whose d-th normal
    factor has left-descent partition lam.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    m = build_Mbar(n, cap=cap)
    idx = m.label_index(tuple(lam))
    return _iterate_ones(m, d - 1)[idx]


def b_of_simple(
    n: int,
    d: int,
    x: Perm,
    via: str = "Mbar",
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    cap: int = DEFAULT_SUBSET_CAP,
) -> int:
    """
    The count of degree-at-most-d positive n-braids whose d-th normal
    factor is exactly x, computed through the matrix chosen by ``via``:
    "Mbar" (default), "M22" and "M23" (row- and corner-vector forms over
    the full matrix), or "Mprime".  All four must agree.
    """
    if len(x) != n:
        raise ValueError(f"permutation {x} does not live on {n} strands")
    if d < 1:
        raise ValueError("d must be at least 1")
    if via == "Mbar":
        lam = descents.partition_of(permutations.d_left(x), n)
        return b_of_partition(n, d, lam, cap=cap)
    if via == "Mprime":
        m = build_Mprime(n, cap=cap)
        idx = m.label_index(permutations.d_left(x))
        return _iterate_ones(m, d - 1)[idx]
    if via in ("M22", "M23"):
        m = build_M(n, cap=factorial_cap)
        idx = permutations.enumeration_index(x)
        if via == "M22":
            return _iterate_ones(m, d - 1)[idx]
        v = [0] * m.size
        v[m.size - 1] = 1
        w: tuple[int, ...] = tuple(v)
        for _ in range(d):
            w = vec_times_matrix(w, m)
        return w[idx]
    raise ValueError(f"unknown path {via!r}")


def b_total(n: int, d: int, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """
    The number of positive n-braids of degree at most d (d = 0 gives 1,
    counting only the trivial braid).
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return 1
    return b_of_partition(n, d + 1, (1,) * n, cap=cap)


def b_delta(n: int, d: int, r: int, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """
    The count with d-th factor the half twist on the first n-r strands.
    """
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    return b_of_partition(n, d, descents.delta_partition(n, r), cap=cap)


def computed_table(nmax: int, dmax: int, cap: int = DEFAULT_SUBSET_CAP) -> dict[tuple[int, int], tuple[int, ...]]:
    """
    Grid of b(n, d, half twist on rho strands) values: keys (n, rho) with
    1 <= rho < n, values indexed by d = 1..dmax.  rho = 1 is the trivial
    braid column.
    """
    out: dict[tuple[int, int], tuple[int, ...]] = {}
    for n in range(2, nmax + 1):
        for rho in range(1, n):
            out[(n, rho)] = tuple(
                b_delta(n, d, n - rho, cap=cap) for d in range(1, dmax + 1)
            )
    return out
