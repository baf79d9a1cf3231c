"""Closed-form and recursive routes to the matrix counts.

Everything here returns exact Python ints.  Intermediate rationals use
``fractions.Fraction`` and every division that must come out exact is
checked, so a formula transcription error surfaces as a hard failure
instead of a silently wrong count.

The four ``lambda2_*`` entry points compute the k = 2 count through
independent routes (a partition sum and three different recursions);
they exist separately so they can be cross-validated against each other
and against the enumeration and profile-DP oracles.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import InconsistentInputError, InvalidParameterError

__all__ = [
    "lambda2_partition_sum",
    "lambda2_anand",
    "lambda2_good",
    "lambda2_system",
    "lambda2_plus",
    "lambda_plus_from_total",
    "lambda_minus_from_plus",
    "lambda3_explicit",
]


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError("n must be a positive integer")


def _partitions_min2(total: int, max_part: int):
    """Partitions of ``total`` into parts between 2 and ``max_part``,
    as tuples of (part, multiplicity) with parts descending."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, max_part), 1, -1):
        for mult in range(total // part, 0, -1):
            for rest in _partitions_min2(total - part * mult, part - 1):
                yield ((part, mult),) + rest


def lambda2_partition_sum(n: int) -> int:
    """k = 2 count as a sum over partitions of n into parts >= 2.

    A partition with multiplicities x_r of each part r contributes
    (n!)^2 / prod_r x_r! (2r)^x_r; the terms are summed as exact
    rationals and the total is checked to be an integer.  n = 1 has no
    such partition and gives 0.
    """
    _check_positive(n)
    nfact2 = factorial(n) ** 2
    total = Fraction(0)
    for partition in _partitions_min2(n, n):
        denom = 1
        for part, mult in partition:
            denom *= factorial(mult) * (2 * part) ** mult
        total += Fraction(nfact2, denom)
    assert total.denominator == 1, "partition sum must be an integer"
    return int(total)


_ANAND = [0, 0, 1, 6]  # index n; entry 0 is a sentinel


def lambda2_anand(n: int) -> int:
    """k = 2 count by the classical three-term recursion

        lam(n) = n (n-1)^2 / 2 * ((2n-3) lam(n-2) + (n-2)^2 lam(n-3))

    for n >= 4, with lam(1) = 0, lam(2) = 1, lam(3) = 6.  Values are
    memoized and filled bottom-up.
    """
    _check_positive(n)
    while len(_ANAND) <= n:
        m = len(_ANAND)
        num = m * (m - 1) ** 2 * ((2 * m - 3) * _ANAND[m - 2] + (m - 2) ** 2 * _ANAND[m - 3])
        half, rest = divmod(num, 2)
        assert rest == 0, "three-term recursion must divide evenly by 2"
        _ANAND.append(half)
    return _ANAND[n]


_GOOD = [0, 0, 1]  # index n; entry 0 is a sentinel


def lambda2_good(n: int) -> int:
    """k = 2 count by the classical two-term recursion

        lam(n) = (n-1) n lam(n-1) + (n-1)^2 n / 2 * lam(n-2)

    for n >= 3, with lam(1) = 0, lam(2) = 1.  Memoized bottom-up.
    """
    _check_positive(n)
    while len(_GOOD) <= n:
        m = len(_GOOD)
        num = (m - 1) ** 2 * m * _GOOD[m - 2]
        half, rest = divmod(num, 2)
        assert rest == 0, "two-term recursion must divide evenly by 2"
        _GOOD.append((m - 1) * m * _GOOD[m - 1] + half)
    return _GOOD[n]


_SYS_LAM = [0, 0, 1]  # index n; entry 0 is a sentinel
_SYS_AUX = [0, 0, 0, 0, 9]  # auxiliary sequence; bases aux(1..3) = 0, aux(4) = 9


def lambda2_system(n: int) -> tuple[int, int]:
    """k = 2 count by a coupled forward recursion with an auxiliary
    sequence aux that the count recursion subtracts:

        lam(n) = (n-1)(2n-3) lam(n-1) + (n-1)^2 lam(n-2) - aux(n)     n >= 3
        aux(n) = (n-1)^2 (n-2)^2 / 4 * (8 (n-3)(n-4) lam(n-3)
                 + (n-3)^2 lam(n-4) - 4 aux(n-2))                     n >= 5

    with lam(1) = 0, lam(2) = 1 and aux(1..3) = 0, aux(4) = 9.  Returns
    (lam(n), aux(n)); both divisions are checked exact.
    """
    _check_positive(n)
    while len(_SYS_LAM) <= n:
        m = len(_SYS_LAM)
        if m >= 5:
            assert len(_SYS_AUX) == m
            coeff, rest = divmod((m - 1) ** 2 * (m - 2) ** 2, 4)
            assert rest == 0, "auxiliary coefficient must divide evenly by 4"
            aux = coeff * (
                8 * (m - 3) * (m - 4) * _SYS_LAM[m - 3]
                + (m - 3) ** 2 * _SYS_LAM[m - 4]
                - 4 * _SYS_AUX[m - 2]
            )
            assert aux >= 0
            _SYS_AUX.append(aux)
        lam = (
            (m - 1) * (2 * m - 3) * _SYS_LAM[m - 1]
            + (m - 1) ** 2 * _SYS_LAM[m - 2]
            - _SYS_AUX[m]
        )
        assert lam >= 0
        _SYS_LAM.append(lam)
    return _SYS_LAM[n], _SYS_AUX[n]


def lambda2_plus(n: int) -> int:
    """Corner-one k = 2 count: plus(n) = 2(n-1) lam(n-1) + (n-1)^2 lam(n-2)
    for n >= 3, with the lam subterms from :func:`lambda2_good`."""
    if not isinstance(n, int) or n < 3:
        raise InvalidParameterError("the corner-one formula needs n >= 3")
    return 2 * (n - 1) * lambda2_good(n - 1) + (n - 1) ** 2 * lambda2_good(n - 2)


def lambda_plus_from_total(n: int, k: int, lam: int) -> int:
    """Corner-one share of a total count: k * lam / n, exactly.

    Raises :class:`InconsistentInputError` when k * lam is not divisible
    by n, since a true total always splits evenly.
    """
    if not isinstance(n, int) or not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidParameterError("need 1 <= k <= n")
    scaled = k * lam
    plus, rest = divmod(scaled, n)
    if rest:
        raise InconsistentInputError(
            f"{k} * {lam} is not divisible by {n}; not a valid total count"
        )
    return plus


def lambda_minus_from_plus(n: int, k: int, lam_plus: int) -> int:
    """Corner-zero count from the corner-one count: (n-k) * plus / k, exactly."""
    if not isinstance(n, int) or not isinstance(k, int) or not 1 <= k <= n:
        raise InvalidParameterError("need 1 <= k <= n")
    scaled = (n - k) * lam_plus
    minus, rest = divmod(scaled, k)
    if rest:
        raise InconsistentInputError(
            f"{n - k} * {lam_plus} is not divisible by {k}; not a valid corner-one count"
        )
    return minus


def lambda3_explicit(n: int) -> int:
    """k = 3 count by the explicit alternating triple sum

        (n!^2 / 6^n) * sum over a+b+g = n of
            (-1)^b (b+3g)! 2^a 3^b / (a! b! g!^2 6^g)

    evaluated over all (n+2)(n+1)/2 nonnegative solutions in exact
    rational arithmetic.  The result is checked to be a nonnegative
    integer; n < 3 correctly comes out 0.
    """
    _check_positive(n)
    total = Fraction(0)
    for g in range(n + 1):
        for b in range(n + 1 - g):
            a = n - g - b
            term = Fraction(
                factorial(b + 3 * g) * 2**a * 3**b,
                factorial(a) * factorial(b) * factorial(g) ** 2 * 6**g,
            )
            total += -term if b & 1 else term
    value = Fraction(factorial(n) ** 2, 6**n) * total
    assert value.denominator == 1 and value >= 0, (
        "explicit k=3 sum must be a nonnegative integer"
    )
    return int(value)
