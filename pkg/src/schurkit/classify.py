"""Classification predicates for composition factors of symmetric-power products.

Vocabulary, with S the symmetric algebra of the natural module E, Sbar its
truncation by p-th powers, and W the exterior algebra:

* 1-special: highest weight of a factor of Sbar(E); the partitions (p-1)^k a.
* 2-special: factor of Sbar(E) x Sbar(E).
* (2,1)-special: factor of Sbar x Sbar x W; equals mu + omega_s with mu 2-special.
* 2-good: factor of S(E) x S(E); equals the standard partitions, i.e. digit
  chains of primitive blocks (beginning / middle / end terms).

All predicates are pure functions of (partition, prime).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import LengthExceedsN, NoCriticalAncestor, NotRegular, NotRestricted, PrimeTooSmall
from .partitions import (
    Partition,
    is_regular,
    is_restricted,
    omega,
    p_adic_digits,
    partition,
    recombine,
    restricted_split,
    subtract,
    transpose,
)

BEGINNING = "beginning"
MIDDLE = "middle"
END = "end"
RESTRICTED_2SPECIAL = "restricted_2special"


def is_1special(lam: Partition, p: int) -> bool:
    """lam = (p-1)^k a with k >= 0 and 0 <= a < p-1 (the zero partition qualifies)."""
    for i, x in enumerate(lam):
        if i + 1 < len(lam):
            if x != p - 1:
                return False
        elif x > p - 1:
            return False
    return True


def _is_beginning_shape(lam: Partition, p: int) -> bool:
    # (p-2)^k a b as a set: all parts <= p-2, all but the last two equal p-2.
    if lam and lam[0] > p - 2:
        return False
    return all(x == p - 2 for x in lam[:-2])


def _matches_two_ones_sum(lam: Partition, p: int) -> bool:
    # (2(p-1))^j (p-1+a) (p-1)^k b, j,k >= 0, 0 <= a,b <= p-2, and a <= b when k = 0.
    # These are exactly the restricted sums of two 1-special partitions.
    j = 0
    while j < len(lam) and lam[j] == 2 * (p - 1):
        j += 1
    rest = lam[j:]
    if not rest or not (p - 1 <= rest[0] <= 2 * p - 3):
        return False
    a = rest[0] - (p - 1)
    k = 0
    while 1 + k < len(rest) and rest[1 + k] == p - 1:
        k += 1
    tail = rest[1 + k :]
    if len(tail) > 1:
        return False
    b = tail[0] if tail else 0
    if b > p - 2:
        return False
    if k == 0 and a > b:
        return False
    return True


def is_2special(lam: Partition, p: int) -> bool:
    """Factor of the twofold truncated symmetric power.

    Restricted case: (p-2)^k a b, or a sum of two 1-special partitions in the
    canonical shape (2(p-1))^j (p-1+a) (p-1)^k b.  Non-restricted case: the
    restricted digit is (p-2)^k a b and the quotient is a single column.
    """
    if not lam:
        return True
    if is_restricted(lam, p):
        return _is_beginning_shape(lam, p) or _matches_two_ones_sum(lam, p)
    lam0, lbar = restricted_split(lam, p)
    return _is_beginning_shape(lam0, p) and lbar == omega(len(lbar)) and len(lbar) >= 1


def two_one_special_witness(lam: Partition, p: int) -> Optional[tuple[Partition, int]]:
    """A pair (mu, s) with lam = mu + omega_s and mu 2-special, if one exists."""
    if lam and lam[0] > 2 * p - 1:
        return None
    for s in range(len(lam) + 1):
        mu = subtract(lam, omega(s))
        if mu is not None and is_2special(mu, p):
            return mu, s
    return None


def is_21special(lam: Partition, p: int) -> bool:
    """lam_1 <= 2p-1 and lam = mu + omega_s for some 2-special mu and s >= 0."""
    return two_one_special_witness(lam, p) is not None


# --- piecewise first-row classification (p > 2, restricted input) ------------


def _strip_value(lam, value):
    k = 0
    while k < len(lam) and lam[k] == value:
        k += 1
    return k, lam[k:]


def _is_pminus1_run(lam, p, min_k):
    # (p-1)^k a with k >= min_k and 0 <= a < p-1
    k, rest = _strip_value(lam, p - 1)
    return k >= min_k and len(rest) <= 1 and all(x < p - 1 for x in rest)


def _omega_candidates(lam):
    yield lam, 0
    for r in range(1, len(lam) + 1):
        mu = subtract(lam, omega(r))
        if mu is not None:
            yield mu, r


def is_21good_piecewise(lam: Partition, p: int) -> bool:
    """First-row dispatch for restricted partitions, p > 2.

    Cross-checks the omega-subtraction search: each first-row band has its
    own closed form, with the exact parameter ranges of the band statements.
    """
    if p == 2:
        raise PrimeTooSmall("piecewise classification requires p > 2")
    if not is_restricted(lam, p):
        raise NotRestricted(f"{lam} is not restricted for p={p}")
    l1 = lam[0] if lam else 0

    if l1 <= p - 1:
        # (p-2)^k a b + omega_r, r >= 0
        return any(_is_beginning_shape(mu, p) for mu, _ in _omega_candidates(lam))

    if l1 == p:
        # (p-1)^k a + omega_r, k >= 1, r >= 1
        return any(r >= 1 and _is_pminus1_run(mu, p, 1) for mu, r in _omega_candidates(lam))

    if l1 < 2 * p - 2:
        # (p-1)^k a + (b) + omega_r, k >= 1, p-1 > b > 0, r > 0 when b = 1
        for mu, r in _omega_candidates(lam):
            if not mu:
                continue
            for b in range(1, p - 1):
                if b == 1 and r == 0:
                    continue
                nu = (mu[0] - b,) + mu[1:]
                if nu[0] >= (nu[1] if len(nu) > 1 else 0) and _is_pminus1_run(partition(nu), p, 1):
                    return True
        return False

    if l1 == 2 * p - 2:
        # (p-1)^k a + (p-1)^m b with k,m >= 1, or (p-1)^k a + (p-2) + omega_r, r >= 1
        if _sum_of_two_pminus1_runs(lam, p, allow_omega=False):
            return True
        for mu, r in _omega_candidates(lam):
            if r < 1 or not mu:
                continue
            nu = (mu[0] - (p - 2),) + mu[1:]
            if nu[0] >= 0 and nu[0] >= (nu[1] if len(nu) > 1 else 0) and _is_pminus1_run(partition(nu), p, 1):
                return True
        return False

    if l1 == 2 * p - 1:
        # (p-1)^k a + (p-1)^m b + omega_r with k,m >= 1
        return _sum_of_two_pminus1_runs(lam, p, allow_omega=True)

    return False


def _sum_of_two_pminus1_runs(lam, p, allow_omega):
    # lam = (p-1)^k a + (p-1)^m b (+ omega_r), k,m >= 1, 0 <= a,b < p-1
    candidates = _omega_candidates(lam) if allow_omega else [(lam, 0)]
    for mu, _ in candidates:
        for m in range(1, len(mu) + 1):
            for b in range(0, p - 1):
                second = (p - 1,) * m + ((b,) if b else ())
                nu = subtract(mu, second)
                if nu is not None and _is_pminus1_run(nu, p, 1):
                    return True
    return False


# --- digit-chain parsing ------------------------------------------------------


def is_beginning_term(lam: Partition, p: int) -> bool:
    """(p-2)^k a b with p-2 >= a >= b >= 0."""
    return _is_beginning_shape(lam, p)


def is_middle_term(lam: Partition, p: int) -> bool:
    """Not a beginning term, but beginning after removing a column."""
    if _is_beginning_shape(lam, p):
        return False
    for r in range(1, len(lam) + 1):
        mu = subtract(lam, omega(r))
        if mu is not None and _is_beginning_shape(mu, p):
            return True
    return False


def is_end_term(lam: Partition, p: int) -> bool:
    """Restricted, not 2-special, and 2-special after removing a column."""
    if not is_restricted(lam, p) or is_2special(lam, p):
        return False
    for r in range(1, len(lam) + 1):
        mu = subtract(lam, omega(r))
        if mu is not None and is_2special(mu, p):
            return True
    return False


def classify_term(lam: Partition, p: int) -> frozenset:
    """Flags from {beginning, middle, end, restricted_2special}; may overlap."""
    flags = set()
    if is_beginning_term(lam, p):
        flags.add(BEGINNING)
    if is_middle_term(lam, p):
        flags.add(MIDDLE)
    if is_end_term(lam, p):
        flags.add(END)
    if is_restricted(lam, p) and is_2special(lam, p):
        flags.add(RESTRICTED_2SPECIAL)
    return frozenset(flags)


@dataclass(frozen=True)
class ParseBlock:
    primitive: Partition
    index: int
    shift: int


@dataclass(frozen=True)
class StandardParse:
    blocks: tuple


def primitive_index(lam: Partition, p: int) -> Optional[int]:
    """Index of lam as a primitive partition, or None.

    Index 0: restricted and 2-special.  Index m > 0: the digit sequence has
    exactly m+1 entries running beginning, middles, end.
    """
    if is_restricted(lam, p):
        return 0 if is_2special(lam, p) else None
    digits = p_adic_digits(lam, p).digits
    m = len(digits) - 1
    if m < 1:
        return None
    if not is_beginning_term(digits[0], p):
        return None
    if not all(is_middle_term(d, p) for d in digits[1:m]):
        return None
    if not is_end_term(digits[m], p):
        return None
    return m


def standard_parses(lam: Partition, p: int) -> list[StandardParse]:
    """All decompositions of the digit sequence into consecutive primitive blocks.

    An index-0 block is a single restricted 2-special digit (a zero digit
    counts); an index-m block is a beginning term, m-1 middle terms and an
    end term.  The uniqueness statement for standard partitions predicts at
    most one parse; callers may rely on the list but not on that bound.
    """
    if not lam:
        return [StandardParse(())]
    digits = p_adic_digits(lam, p).digits
    n = len(digits)
    memo: dict[int, list[tuple]] = {}

    def parses_from(t: int) -> list[tuple]:
        if t == n:
            return [()]
        if t in memo:
            return memo[t]
        out = []
        if is_2special(digits[t], p):  # digits are restricted by construction
            for rest in parses_from(t + 1):
                out.append(((digits[t], 0, t),) + rest)
        if is_beginning_term(digits[t], p):
            m = 1
            while t + m < n:
                # digits t+1 .. t+m-1 are already verified middle terms
                if is_end_term(digits[t + m], p):
                    prim = recombine(digits[t : t + m + 1], p)
                    for rest in parses_from(t + m + 1):
                        out.append(((prim, m, t),) + rest)
                if not is_middle_term(digits[t + m], p):
                    break
                m += 1
        memo[t] = out
        return out

    return [
        StandardParse(tuple(ParseBlock(prim, idx, shift) for prim, idx, shift in chain))
        for chain in parses_from(0)
    ]


def is_standard(lam: Partition, p: int) -> bool:
    return bool(standard_parses(lam, p))


def is_2good(lam: Partition, p: int) -> bool:
    """Factor of the twofold symmetric power: exactly the standard partitions."""
    return is_standard(lam, p)


# --- symmetric-group corollaries ---------------------------------------------


def specht_d_lower(lam: Partition, p: int) -> bool:
    """Does D_lambda occur in a Specht module of (2,1)-bounded shape?

    For restricted lam this is (2,1)-special membership; the closed forms
    quoted alongside the statement are validated against this predicate in
    the verification suites rather than trusted as primary.
    """
    if not is_restricted(lam, p):
        raise NotRestricted(f"{lam} is not restricted for p={p}")
    return is_21special(lam, p)


def specht_d_upper(lam: Partition, p: int) -> bool:
    """Does D^lambda occur in a Specht module of (1,2)-bounded shape?

    Reduces to the lower predicate on the transpose via the sign twist.
    """
    if not is_regular(lam, p):
        raise NotRegular(f"{lam} is not p-regular for p={p}")
    return specht_d_lower(transpose(lam), p)


# --- three-variable injectivity criteria --------------------------------------


def _require_len3(lam):
    if len(lam) > 3:
        raise LengthExceedsN(f"{lam} has more than 3 parts")


def is_critical_n3(lam: Partition, p: int) -> bool:
    """For at most three rows: critical means 2-good."""
    _require_len3(lam)
    return is_2good(lam, p)


def divisibility_index_n3(lam: Partition, p: int) -> int:
    """Least j >= 0 with lam - j*omega_3 critical; j never exceeds lam_3."""
    _require_len3(lam)
    top = lam[2] if len(lam) == 3 else 0
    for j in range(top + 1):
        mu = partition(x - j for x in lam) if j else lam
        if is_critical_n3(mu, p):
            return j
    raise NoCriticalAncestor(f"no critical partition below {lam} within {top} column removals")


def g1_inj_n3(lam: Partition, p: int) -> bool:
    """Injectivity over the first Frobenius kernel for three variables.

    With lam = lam0 + p*lambar (restricted digit split), the criterion is:
    (i) lam0_1 >= 2p-2; or (ii) p-2 <= lam0_1 < 2p-2 and lambar not critical;
    or (iii) lam0_1 < p-2 and neither lambar nor lambar - omega_3 critical.
    A missing third column makes "lambar - omega_3 not critical" vacuous.
    """
    _require_len3(lam)
    lam0, lbar = restricted_split(lam, p)
    first = lam0[0] if lam0 else 0
    if first >= 2 * p - 2:
        return True
    if first >= p - 2:
        return not is_critical_n3(lbar, p)
    if is_critical_n3(lbar, p):
        return False
    below = subtract(lbar, omega(3))
    return below is None or not is_critical_n3(below, p)
