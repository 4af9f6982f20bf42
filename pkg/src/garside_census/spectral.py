"""
Exact characteristic polynomials of the counting matrices, divisibility of
consecutive spectra, and floating-point dominant-eigenvalue estimates.

Polynomials are dense integer-coefficient tuples with the constant term
first.  Characteristic polynomials are computed by the Berkowitz vector
recursion, which is division-free and therefore stays in exact integers;
a naive cofactor-expansion determinant over polynomial entries serves as
the independent oracle at tiny sizes.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Sequence

from . import descents, matrices
from .matrices import CountMatrix

IntPoly = tuple[int, ...]


def poly_trim(p: Sequence) -> tuple:
    """Drop high-order zero coefficients, keeping at least the constant."""
    coeffs = list(p) if p else [0]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_is_zero(p: Sequence) -> bool:
    return all(c == 0 for c in p)


def poly_degree(p: Sequence) -> int:
    """Degree of a nonzero polynomial; the zero polynomial raises."""
    t = poly_trim(p)
    if poly_is_zero(t):
        raise ValueError("the zero polynomial has no degree")
    return len(t) - 1


def poly_mul(p: Sequence, q: Sequence) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_add(p: Sequence, q: Sequence) -> tuple:
    size = max(len(p), len(q))
    return poly_trim(
        tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(size))
    )


def poly_sub(p: Sequence, q: Sequence) -> tuple:
    size = max(len(p), len(q))
    return poly_trim(
        tuple((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(size))
    )


def poly_eval(p: Sequence, x):
    acc = 0
    for c in reversed(tuple(p)):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence) -> tuple:
    if len(p) <= 1:
        return (0,)
    return poly_trim(tuple(i * c for i, c in enumerate(p) if i >= 1))


def poly_str(p: Sequence) -> str:
    """Human-readable form, highest degree first, e.g. 'x^3 - 4x^2 + 5x - 2'."""
    t = poly_trim(p)
    if poly_is_zero(t):
        return "0"
    pieces = []
    for i in range(len(t) - 1, -1, -1):
        c = t[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
        if not pieces:
            pieces.append(term if c > 0 else f"-{term}")
        else:
            pieces.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(pieces)


def _berkowitz(rows: Sequence[Sequence[int]]) -> list[int]:
    """Leading-coefficient-first char poly of det(xI - A), division-free."""
    n = len(rows)
    poly = [1]
    for r in range(1, n + 1):
        a = rows[r - 1][r - 1]
        row = rows[r - 1][: r - 1]
        col = [rows[i][r - 1] for i in range(r - 1)]
        sub = [rows[i][: r - 1] for i in range(r - 1)]
        q = [1, -a]
        vec = col
        for step in range(r - 1):
            q.append(-sum(x * y for x, y in zip(row, vec)))
            if step < r - 2:
                vec = [
                    sum(sub[i][j] * vec[j] for j in range(r - 1))
                    for i in range(r - 1)
                ]
        new = [0] * (r + 1)
        for i in range(r + 1):
            lo = max(0, i - (len(q) - 1))
            new[i] = sum(q[i - j] * poly[j] for j in range(lo, min(i, r - 1) + 1))
        poly = new
    return poly


def charpoly(m: CountMatrix | Sequence[Sequence[int]]) -> IntPoly:
    """
    Exact characteristic polynomial det(xI - m), monic of degree equal to
    the matrix size, constant term first.
    """
    rows = m.rows if isinstance(m, CountMatrix) else tuple(tuple(r) for r in m)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return tuple(reversed(_berkowitz(rows)))


def naive_charpoly(rows: Sequence[Sequence[int]]) -> IntPoly:
    """Cofactor-expansion oracle for charpoly, usable only at tiny sizes."""
    n = len(rows)
    entries = [
        [
            poly_trim((-rows[i][j], 1) if i == j else (-rows[i][j],))
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(mat: list[list[tuple]]) -> tuple:
        k = len(mat)
        if k == 0:
            return (1,)
        if k == 1:
            return mat[0][0]
        acc = (0,)
        for j in range(k):
            minor = [r[:j] + r[j + 1 :] for r in mat[1:]]
            term = poly_mul(mat[0][j], det(minor))
            acc = poly_sub(acc, term) if j % 2 else poly_add(acc, term)
        return acc

    return det(entries)


def strip_x_power(p: Sequence) -> tuple:
    """Divide out the largest power of x, for nonzero-spectrum comparison."""
    t = poly_trim(p)
    if poly_is_zero(t):
        raise ValueError("cannot strip the zero polynomial")
    k = 0
    while t[k] == 0:
        k += 1
    return t[k:]


def _divmod_q(num: Sequence, den: Sequence) -> tuple[tuple, tuple]:
    """Long division over the rationals; returns (quotient, remainder)."""
    den = poly_trim(den)
    if poly_is_zero(den):
        raise ValueError("division by the zero polynomial")
    rem = [Fraction(c) for c in poly_trim(num)]
    dd = len(den) - 1
    lead = Fraction(den[-1])
    quot = [Fraction(0)] * max(1, len(rem) - dd)
    while len(rem) - 1 >= dd and not all(c == 0 for c in rem):
        shift = len(rem) - 1 - dd
        factor = rem[-1] / lead
        quot[shift] = factor
        for i in range(dd + 1):
            rem[shift + i] -= factor * Fraction(den[i])
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    return tuple(quot), tuple(rem)


def divides(p: Sequence, q: Sequence) -> bool:
    """Exact divisibility of q by p over the rationals."""
    _, rem = _divmod_q(q, p)
    return all(c == 0 for c in rem)


def exact_quotient(p: Sequence, q: Sequence) -> IntPoly | None:
    """q / p as an integer polynomial, or None when p does not divide q."""
    quot, rem = _divmod_q(q, p)
    if not all(c == 0 for c in rem):
        return None
    if not all(c.denominator == 1 for c in quot):
        return None
    return poly_trim(tuple(int(c) for c in quot))


def _poly_gcd_q(p: Sequence, q: Sequence) -> tuple:
    """Monic gcd over the rationals."""
    a = [Fraction(c) for c in poly_trim(p)]
    b = [Fraction(c) for c in poly_trim(q)]
    while not all(c == 0 for c in b):
        _, rem = _divmod_q(a, b)
        a, b = b, [Fraction(c) for c in poly_trim(rem)]
    a = list(poly_trim(a))
    lead = a[-1]
    if lead != 0:
        a = [c / lead for c in a]
    return tuple(a)


def is_squarefree(p: Sequence) -> bool:
    return len(_poly_gcd_q(p, poly_derivative(p))) == 1


def are_coprime(p: Sequence, q: Sequence) -> bool:
    return len(_poly_gcd_q(p, q)) == 1


@dataclasses.dataclass(frozen=True)
class NewFactorReport:
    """
    Divisibility of consecutive partition-matrix characteristic
    polynomials.  coprime_with_previous is reported but not part of the
    verdict: at n = 2 the new factor is (x - 1), repeating the eigenvalue
    of the size-1 matrix, while from n = 3 on the new roots are new.
    """

    n: int
    divides: bool
    quotient: IntPoly | None
    expected_degree: int
    degree_ok: bool
    constant_nonzero: bool
    squarefree: bool
    coprime_with_previous: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.divides
            and self.degree_ok
            and self.constant_nonzero
            and self.squarefree
        )


def new_factor_simple_roots(n: int, cap: int = matrices.DEFAULT_SUBSET_CAP) -> NewFactorReport:
    """
    Divide the partition-matrix characteristic polynomial at n by the one
    at n-1 and examine the quotient: its degree should be p(n) - p(n-1),
    its constant term nonzero, and its roots simple and new.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    prev = charpoly(matrices.build_Mbar(n - 1, cap=cap))
    cur = charpoly(matrices.build_Mbar(n, cap=cap))
    quotient = exact_quotient(prev, cur)
    expected = len(descents.partitions_in_order(n)) - len(descents.partitions_in_order(n - 1))
    if quotient is None:
        return NewFactorReport(
            n=n,
            divides=False,
            quotient=None,
            expected_degree=expected,
            degree_ok=False,
            constant_nonzero=False,
            squarefree=False,
            coprime_with_previous=False,
        )
    return NewFactorReport(
        n=n,
        divides=True,
        quotient=quotient,
        expected_degree=expected,
        degree_ok=poly_degree(quotient) == expected,
        constant_nonzero=quotient[0] != 0,
        squarefree=is_squarefree(quotient),
        coprime_with_previous=are_coprime(quotient, prev),
    )


def m_charpoly_nonzero(n: int) -> IntPoly:
    """
    The nonzero-spectrum part of the characteristic polynomial of the full
    n! x n! normality matrix, without building it.  The matrix factors as
    A B with A indexed by (braid, right-descent-set) indicators and B by
    set containment; A B and B A share their nonzero spectrum, and B A is
    only 2^(n-1) square.  Cross-checked against the direct computation at
    small n in the test suite.
    """
    census = descents.left_right_descent_census(n)
    size = 1 << (n - 1)
    # (B A)[s, s'] counts braids with left descents inside s and right descents exactly s'.
    prod = [[0] * size for _ in range(size)]
    for (left, right), count in census.items():
        for s in range(size):
            if left & ~s == 0:
                prod[s][right] += count
    return strip_x_power(charpoly(prod))


def rho_max(m: CountMatrix, tol: float = 1e-9, max_iter: int = 1_000_000) -> float:
    """
    Dominant eigenvalue of a non-negative matrix by power iteration from
    the all-ones vector, stopping when successive Rayleigh quotients agree
    within tol.
    """
    rows = [[float(e) for e in row] for row in m.rows]
    size = len(rows)
    v = [1.0] * size
    prev = None
    for _ in range(max_iter):
        w = [sum(row[j] * v[j] for j in range(size)) for row in rows]
        den = sum(x * x for x in v)
        est = sum(w[i] * v[i] for i in range(size)) / den
        if prev is not None and abs(est - prev) < tol:
            return est
        prev = est
        scale = max(abs(x) for x in w)
        if scale == 0.0:
            return 0.0
        v = [x / scale for x in w]
    raise RuntimeError(f"power iteration did not converge in {max_iter} steps")


def spectral_radius_table(nmax: int, tol: float = 1e-9) -> list[dict]:
    """
    Rows (n, dominant eigenvalue, ratio against n times the previous one)
    for n = 1..nmax.
    """
    out = []
    prev_rho = None
    for n in range(1, nmax + 1):
        rho = rho_max(matrices.build_Mbar(n), tol=tol)
        ratio = None if prev_rho is None else rho / (n * prev_rho)
        out.append({"n": n, "rho": rho, "ratio": ratio})
        prev_rho = rho
    return out


def recurrence_check(seq: Sequence[int], p: Sequence) -> bool:
    """
    Whether the integer sequence satisfies the linear recurrence whose
    coefficients are the x-power-stripped polynomial, on every window.
    """
    c = strip_x_power(p)
    order = len(c) - 1
    if len(seq) <= order:
        raise ValueError(f"sequence of length {len(seq)} too short for order {order}")
    for k in range(len(seq) - order):
        if sum(c[j] * seq[k + j] for j in range(order + 1)) != 0:
            return False
    return True
