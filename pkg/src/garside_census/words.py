"""
Positive braid words and their normal form.

A word is a sequence of generator indices in {1, ..., n-1}.  The normal
form is computed by local rewriting: starting from one square-free factor
per letter, whenever an adjacent pair (x, y) is not normal, the smallest
generator that left-divides y but does not right-divide x is transferred
from the front of y to the back of x.  Every move shifts one crossing one
slot to the left, so the weighted crossing count strictly decreases and
the process terminates; the result is the unique normal form, with
trailing trivial factors removed.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Callable

from .permutations import (
    Perm,
    compose,
    d_left,
    d_right,
    identity,
    inversion_number,
    is_normal_pair,
    transposition,
)


@dataclasses.dataclass(frozen=True)
class PositiveWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        for i in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} out of range for n={self.n}")


@dataclasses.dataclass(frozen=True)
class NormalSequence:
    n: int
    factors: tuple[Perm, ...]

    def __post_init__(self):
        one = identity(self.n)
        if self.factors and self.factors[-1] == one:
            raise ValueError("normal sequence may not end with a trivial factor")
        for k in range(len(self.factors) - 1):
            if not is_normal_pair(self.factors[k], self.factors[k + 1]):
                raise ValueError(f"factors {k + 1} and {k + 2} are not normal")


def delta_letters(n: int) -> tuple[int, ...]:
    """
    The standard positive word for the half twist: the descending
    concatenation of ascending runs (1..n-1)(1..n-2)...(1), of length
    n(n-1)/2.
    """
    out: list[int] = []
    for m in range(n, 1, -1):
        out.extend(range(1, m))
    return tuple(out)


_TOKEN = re.compile(r"^(?:(D)|s?(\d+))(?:\^(\d+))?$")


def parse_word(text: str, n: int) -> PositiveWord:
    """
    Parse a whitespace-separated word: tokens are 's<k>' or bare integers
    for single generators and 'D' for the half twist, each optionally
    followed by '^<e>' with e >= 1.
    """
    letters: list[int] = []
    for pos, token in enumerate(text.split(), start=1):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"syntax error at token {pos}: {token!r}")
        is_delta, digits, exponent = m.groups()
        e = int(exponent) if exponent is not None else 1
        if e < 1:
            raise ValueError(f"non-positive exponent at token {pos}: {token!r}")
        if is_delta:
            letters.extend(delta_letters(n) * e)
        else:
            i = int(digits)
            if not 1 <= i <= n - 1:
                raise ValueError(f"index out of range at token {pos}: {token!r}")
            letters.extend([i] * e)
    return PositiveWord(n=n, letters=tuple(letters))


def normalize_factors(
    n: int,
    factors: tuple[Perm, ...] | list[Perm],
    on_step: Callable[[tuple[Perm, ...]], None] | None = None,
) -> NormalSequence:
    """
    Closure of the local rewriting on an arbitrary sequence of square-free
    factors.  Sweeps left to right, fixing each adjacent pair completely
    (smallest transferable generator first) before moving on, and sweeps
    again until a pass makes no change.  An already-normal sequence comes
    back unchanged with no moves made.
    """
    factors = list(factors)
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1):
            while True:
                movable = d_left(factors[k + 1]) - d_right(factors[k])
                if not movable:
                    break
                i = min(movable)
                t = transposition(n, i)
                factors[k] = compose(factors[k], t)
                factors[k + 1] = compose(t, factors[k + 1])
                changed = True
                if on_step is not None:
                    on_step(tuple(factors))
    one = identity(n)
    while factors and factors[-1] == one:
        factors.pop()
    return NormalSequence(n=n, factors=tuple(factors))


def normalize(
    word: PositiveWord,
    on_step: Callable[[tuple[Perm, ...]], None] | None = None,
) -> NormalSequence:
    """
    The normal form of a positive word, starting from one square-free
    factor per letter.
    """
    n = word.n
    return normalize_factors(n, [transposition(n, i) for i in word.letters], on_step)


def degree(seq: NormalSequence) -> int:
    """The number of non-trivial factors."""
    return len(seq.factors)


def dth_factor(seq: NormalSequence, d: int) -> Perm:
    """
    The d-th factor, reading the sequence as padded with trivial factors
    on the right.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if d <= len(seq.factors):
        return seq.factors[d - 1]
    return identity(seq.n)


def rewrite_potential(factors: tuple[Perm, ...]) -> int:
    """
    The termination measure of the rewriting: the crossing count of each
    factor weighted by its slot.  Each local move decreases it by one.
    """
    return sum((k + 1) * inversion_number(x) for k, x in enumerate(factors))


def letters_of(x: Perm) -> tuple[int, ...]:
    """
    A reduced positive word for a square-free braid, peeling the smallest
    right descent until the identity remains.
    """
    out: list[int] = []
    n = len(x)
    while x != identity(n):
        i = min(d_right(x))
        out.append(i)
        x = compose(x, transposition(n, i))
    return tuple(reversed(out))
