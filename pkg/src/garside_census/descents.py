"""
Compositions and partitions attached to descent sets, and the exact
counting of square-free braids with prescribed descent behaviour.

For a subset I of {1, ..., n-1}, its composition is the gap sequence of
the complement of I inside {1, ..., n}: equivalently, the sizes of the
maximal runs of consecutive elements of I, each augmented by one.  Its
partition is the non-increasing rearrangement of the composition.

The two counting numbers implemented here are, for subsets I and J:

  a_hat(n, I, J)  the number of square-free braids x with d_left(x) >= I
                  and d_right(x) >= J;
  a(n, I, J)      the same with d_left(x) == I exactly.

a_hat is computed as the number of non-negative integer matrices with row
margins the composition of I and column margins the composition of J; a
follows by inclusion-exclusion over supersets of I.  Both admit
independent brute-force oracles (count_functions below and the direct
sweep over all n! permutations in tests).
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

Composition = tuple[int, ...]
PartitionN = tuple[int, ...]


def _check_subset(members: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(members)
    if not all(1 <= i <= n - 1 for i in s):
        raise ValueError(f"descent set {sorted(s)} not inside 1..{n - 1}")
    return s


def composition_of(members: Iterable[int], n: int) -> Composition:
    """
    Gap sequence of the complement of the subset inside {1, ..., n}.

    >>> composition_of({1, 2, 4, 5, 6, 9}, 10)
    (3, 4, 1, 2)
    >>> composition_of(set(), 3)
    (1, 1, 1)
    """
    s = _check_subset(members, n)
    complement = [p for p in range(1, n + 1) if p not in s]
    prev = 0
    parts = []
    for p in complement:
        parts.append(p - prev)
        prev = p
    return tuple(parts)


def partition_of(members: Iterable[int], n: int) -> PartitionN:
    """Non-increasing rearrangement of composition_of(members, n)."""
    return tuple(sorted(composition_of(members, n), reverse=True))


def set_of_composition(parts: Sequence[int]) -> frozenset[int]:
    """
    The unique subset whose composition is the given sequence (read in
    order, so a partition is interpreted as a composition).

    >>> sorted(set_of_composition((2, 1)))
    [1]
    """
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"{parts!r} is not a composition (positive parts required)")
    n = sum(parts)
    sums = set(itertools.accumulate(parts))
    return frozenset(i for i in range(1, n) if i not in sums)


def subsets_in_binary_order(n: int) -> list[frozenset[int]]:
    """Subsets of {1, ..., n-1} ordered by their binary value, bit i-1 for element i."""
    return [
        frozenset(i + 1 for i in range(n - 1) if value >> i & 1)
        for value in range(1 << (n - 1))
    ]


@functools.lru_cache(maxsize=None)
def partitions_in_order(n: int) -> tuple[PartitionN, ...]:
    """
    The partitions of n, ordered by first occurrence as the partition of a
    subset, subsets taken in binary counting order.

    >>> partitions_in_order(3)
    ((1, 1, 1), (2, 1), (3,))
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    seen: dict[PartitionN, None] = {}
    for subset in subsets_in_binary_order(n):
        seen.setdefault(partition_of(subset, n), None)
    return tuple(seen)


def delta_partition(n: int, r: int) -> PartitionN:
    """
    The left-descent partition of the half twist on the first n-r strands,
    embedded into n strands: (n-r, 1, ..., 1) with r ones, degenerating to
    all ones when n-r <= 1.
    """
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    head = [n - r] if n - r >= 1 else []
    return tuple(sorted(head + [1] * r, reverse=True))


def compositions(n: int) -> list[Composition]:
    """All 2^(n-1) sequences of positive integers summing to n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out: list[Composition] = []

    def extend(prefix: tuple[int, ...], rest: int) -> None:
        if rest == 0:
            out.append(prefix)
            return
        for p in range(1, rest + 1):
            extend(prefix + (p,), rest - p)

    extend((), n)
    return out


def contingency_count(rows: Sequence[int], cols: Sequence[int]) -> int:
    """
    The number of non-negative integer matrices with the given row and
    column sums, by dynamic programming over columns with the multiset of
    remaining row sums as state.

    >>> contingency_count((2, 1), (2, 1))
    2
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if sum(rows) != sum(cols):
        raise ValueError(f"margin sums differ: {sum(rows)} vs {sum(cols)}")
    return _fill_columns(tuple(sorted(rows)), cols)


@functools.lru_cache(maxsize=None)
def _fill_columns(rows_sorted: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not cols:
        return 1
    q = cols[0]
    rest = cols[1:]
    total = 0
    k = len(rows_sorted)

    def distribute(idx: int, remaining: int, current: list[int]) -> None:
        nonlocal total
        if idx == k - 1:
            if remaining <= rows_sorted[idx]:
                current.append(rows_sorted[idx] - remaining)
                total += _fill_columns(tuple(sorted(current)), rest)
                current.pop()
            return
        for d in range(min(remaining, rows_sorted[idx]) + 1):
            current.append(rows_sorted[idx] - d)
            distribute(idx + 1, remaining - d, current)
            current.pop()

    if k == 0:
        return 1 if q == 0 else 0
    distribute(0, q, [])
    return total


@functools.lru_cache(maxsize=None)
def _count_by_sorted_margins(rows_desc: tuple[int, ...], cols_desc: tuple[int, ...]) -> int:
    return contingency_count(rows_desc, cols_desc)


def a_hat(n: int, I: Iterable[int], J: Iterable[int]) -> int:
    """
    Number of square-free n-braids whose left-descent set contains I and
    whose right-descent set contains J.

    >>> a_hat(3, {1}, {1})
    2
    """
    return contingency_count(composition_of(I, n), composition_of(J, n))


def a(n: int, I: Iterable[int], J: Iterable[int]) -> int:
    """
    Number of square-free n-braids whose left-descent set equals I exactly
    and whose right-descent set contains J, by inclusion-exclusion over the
    supersets of I.
    """
    I = _check_subset(I, n)
    cols = tuple(sorted(composition_of(J, n), reverse=True))
    free = sorted(set(range(1, n)) - I)
    total = 0
    for size in range(len(free) + 1):
        sign = -1 if size % 2 else 1
        for extra in itertools.combinations(free, size):
            rows = tuple(sorted(composition_of(I | set(extra), n), reverse=True))
            total += sign * _count_by_sorted_margins(rows, cols)
    return total


def _multiset_sequences(fibre_sizes: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All arrangements of the multiset {j with multiplicity fibre_sizes[j-1]}."""
    n = sum(fibre_sizes)
    counts = list(fibre_sizes)
    seq: list[int] = []

    def extend() -> Iterable[tuple[int, ...]]:
        if len(seq) == n:
            yield tuple(seq)
            return
        for j, c in enumerate(counts):
            if c:
                counts[j] -= 1
                seq.append(j + 1)
                yield from extend()
                seq.pop()
                counts[j] += 1

    yield from extend()


def count_functions(n: int, I: Iterable[int], J: Iterable[int], exact: bool) -> int:
    """
    Brute-force oracle for a / a_hat: count functions f from {1, ..., n}
    onto blocks 1..len(composition_of(J, n)) with prescribed fibre sizes,
    subject to the descent pattern of I (exact: i in I iff f(i) >= f(i+1);
    relaxed: implication only).
    """
    I = _check_subset(I, n)
    fibres = composition_of(J, n)
    total = 0
    for f in _multiset_sequences(fibres):
        ok = True
        for i in range(1, n):
            weak = f[i - 1] >= f[i]
            if i in I:
                if not weak:
                    ok = False
                    break
            elif exact and weak:
                ok = False
                break
        if ok:
            total += 1
    return total


def left_right_descent_census(n: int) -> dict[tuple[int, int], int]:
    """
    Sweep all n! permutations and tally (left-descent mask, right-descent
    mask) pairs; bit i-1 encodes element i.  Independent of the counting
    formulas above, so it serves as their cross-check.
    """
    counts: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        inv = [0] * n
        for pos, v in enumerate(perm):
            inv[v - 1] = pos + 1
        left = 0
        right = 0
        for i in range(n - 1):
            if perm[i] > perm[i + 1]:
                right |= 1 << i
            if inv[i] > inv[i + 1]:
                left |= 1 << i
        key = (left, right)
        counts[key] = counts.get(key, 0) + 1
    return counts


def mask_of(members: Iterable[int]) -> int:
    """Bitmask of a descent set, bit i-1 for element i."""
    mask = 0
    for i in members:
        mask |= 1 << (i - 1)
    return mask


def set_of_mask(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def format_parts(parts: Sequence[int]) -> str:
    """Serialization for compositions and partitions, e.g. '(3,4,1,2)'."""
    return "(" + ",".join(str(p) for p in parts) + ")"
