"""Formal characters of polynomial GL_n-modules as symmetric functions.

A character is stored in the monomial-symmetric basis: a finite map from
dominant weights (partitions of the degree with at most n parts) to integer
multiplicities.  The full weight multiset is recovered by symmetrizing each
key over coordinate permutations.  Characters are immutable values.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .errors import DegreeMixed, LengthExceedsN, VariableCountMismatch
from .partitions import Partition, partition, partitions_of

COMPLETE = "complete"
EXTERIOR = "exterior"
TRUNCATED = "truncated"


def _distinct_permutations(values: tuple) -> Iterator[tuple]:
    """All distinct orderings of a tuple (multiset permutations)."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    n = len(values)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


class SymChar:
    """Symmetric character in n variables, keyed by dominant weights."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: dict):
        clean = {}
        for lam, c in coeffs.items():
            if c == 0:
                continue
            if len(lam) > n:
                raise LengthExceedsN(f"weight {lam} has more than {n} parts")
            if sum(lam) != degree:
                raise DegreeMixed(f"weight {lam} in a degree-{degree} character")
            clean[lam] = c
        self.n = n
        self.degree = degree
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, SymChar)
            and self.n == other.n
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = " + ".join(f"{c}*m{list(l)}" for l, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymChar(n={self.n}, deg={self.degree}: {body or '0'})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def orbit_size(self, lam: Partition) -> int:
        padded = lam + (0,) * (self.n - len(lam))
        size = factorial(self.n)
        for v in set(padded):
            size //= factorial(padded.count(v))
        return size

    def dim(self) -> int:
        """Evaluation at all-ones: total weight multiplicity."""
        return sum(c * self.orbit_size(lam) for lam, c in self.coeffs.items())

    def full_weights(self) -> dict:
        """Multiplicity of every composition (length-n tuple) in the orbit expansion."""
        out: dict[tuple, int] = {}
        for lam, c in self.coeffs.items():
            padded = lam + (0,) * (self.n - len(lam))
            for w in _distinct_permutations(padded):
                out[w] = c
        return out

    def __add__(self, other: "SymChar") -> "SymChar":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymChar(self.n, self.degree, out)

    def __sub__(self, other: "SymChar") -> "SymChar":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) - c
        return SymChar(self.n, self.degree, out)

    def _check_compatible(self, other):
        if not isinstance(other, SymChar):
            raise TypeError(f"cannot combine SymChar with {type(other)}")
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")
        if self.degree != other.degree and self.coeffs and other.coeffs:
            raise DegreeMixed(f"degree {self.degree} vs {other.degree}")

    def __mul__(self, other: "SymChar") -> "SymChar":
        """Product as symmetric functions (orbit convolution)."""
        if not isinstance(other, SymChar):
            return NotImplemented
        if self.n != other.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")
        deg = self.degree + other.degree
        if self.is_zero() or other.is_zero():
            return SymChar(self.n, deg, {})
        f1 = self.full_weights()
        f2 = other.full_weights()
        if len(f2) < len(f1):
            f1, f2 = f2, f1
        conv: dict[tuple, int] = {}
        for w1, c1 in f1.items():
            for w2, c2 in f2.items():
                key = tuple(a + b for a, b in zip(w1, w2))
                conv[key] = conv.get(key, 0) + c1 * c2
        out = {}
        for w, c in conv.items():
            if all(w[i] >= w[i + 1] for i in range(len(w) - 1)):
                out[partition(w)] = c
        return SymChar(self.n, deg, out)


def zero_char(n: int, degree: int = 0) -> SymChar:
    return SymChar(n, degree, {})


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Peels the cells holding the largest letter (a horizontal strip) and
    recurses; memoized globally.
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    k = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strip_removals(lam, k):
        total += kostka(nu, rest)
    return total


def _horizontal_strip_removals(lam: Partition, k: int) -> Iterator[Partition]:
    """All nu with lam/nu a horizontal strip of size k."""
    n = len(lam)

    def rec(i: int, rem: int, acc: list):
        if i == n:
            if rem == 0:
                yield partition(acc)
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for v in range(lam[i], lo - 1, -1):
            took = lam[i] - v
            if took > rem:
                break
            acc.append(v)
            yield from rec(i + 1, rem - took, acc)
            acc.pop()

    yield from rec(0, k, [])


def schur_char(lam: Partition, n: int) -> SymChar:
    """Character of the induced module with highest weight lam (Schur function)."""
    if len(lam) > n:
        raise LengthExceedsN(f"{lam} needs more than {n} variables")
    deg = sum(lam)
    coeffs = {}
    for mu in partitions_of(deg, max_len=n):
        k = kostka(lam, mu)
        if k:
            coeffs[mu] = k
    return SymChar(n, deg, coeffs)


def power_char(kind: str, r: int, n: int, p: int | None = None) -> SymChar:
    """Character of a symmetric (complete), exterior or truncated power.

    complete: every dominant weight of degree r once; exterior: the single
    column; truncated: dominant weights with first part below p.
    """
    if kind == COMPLETE:
        return SymChar(n, r, {mu: 1 for mu in partitions_of(r, max_len=n)})
    if kind == EXTERIOR:
        return SymChar(n, r, {(1,) * r: 1} if r <= n else {})
    if kind == TRUNCATED:
        if p is None:
            raise ValueError("truncated power needs the prime")
        return SymChar(n, r, {mu: 1 for mu in partitions_of(r, max_len=n, max_part=p - 1)})
    raise ValueError(f"unknown power kind {kind!r}")


def decompose_schur(chi: SymChar) -> dict:
    """Coefficients of chi in the Schur basis.

    Greedy: the lexicographically greatest supported weight is dominance
    maximal, so subtracting that multiple of its Schur character strictly
    shrinks the support in lex order.  Coefficients may be negative for
    virtual characters.
    """
    residual = dict(chi.coeffs)
    out: dict[Partition, int] = {}
    while residual:
        lam = max(residual)
        c = residual.pop(lam)
        if c == 0:
            continue
        out[lam] = c
        for mu, k in schur_char(lam, chi.n).coeffs.items():
            if mu == lam:
                continue
            residual[mu] = residual.get(mu, 0) - c * k
            if residual[mu] == 0:
                del residual[mu]
    return out


def is_deficient(chi: SymChar, a: int, b: int) -> bool:
    """No Schur constituent of chi is (a,b)-bounded."""
    from .partitions import is_bounded

    return all(not is_bounded(lam, a, b) for lam, c in decompose_schur(chi).items() if c)


def frobenius_twist(chi: SymChar, p: int) -> SymChar:
    """Scale every weight by p (precomposition with the p-power map)."""
    return SymChar(
        chi.n, chi.degree * p, {tuple(p * x for x in lam): c for lam, c in chi.coeffs.items()}
    )


def dim_complete(r: int, n: int) -> int:
    return comb(n + r - 1, r)


# --- expression parsing for the command line ----------------------------------


def char_from_expr(expr: str, n: int) -> SymChar:
    """Parse products of character atoms: h<r>, e<r>, sbar<r>@<p>, s[...]."""
    import json
    import re

    chi: SymChar | None = None
    for token in expr.split("*"):
        token = token.strip()
        if m := re.fullmatch(r"h(\d+)", token):
            atom = power_char(COMPLETE, int(m.group(1)), n)
        elif m := re.fullmatch(r"e(\d+)", token):
            atom = power_char(EXTERIOR, int(m.group(1)), n)
        elif m := re.fullmatch(r"sbar(\d+)@(\d+)", token):
            atom = power_char(TRUNCATED, int(m.group(1)), n, p=int(m.group(2)))
        elif m := re.fullmatch(r"s(\[.*\])", token):
            atom = schur_char(partition(json.loads(m.group(1))), n)
        else:
            raise ValueError(f"cannot parse character atom {token!r}")
        chi = atom if chi is None else chi * atom
    if chi is None:
        raise ValueError("empty character expression")
    return chi
