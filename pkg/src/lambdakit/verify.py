"""Exact cross-validation suites behind the ``verify`` CLI subcommand.

Every check is an integer identity between independently computed
quantities, so a failed check is a falsification, not a tolerance
issue.  Suites clamp their search-based segments to desk scale no
matter what bound the caller asks for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classifier import census_identity_check
from .enumerator import (
    count_lambda,
    count_split,
    insertion_class_members,
    insertion_class_stats,
    iter_lambda,
)
from .formulas import (
    lambda2_anand,
    lambda2_good,
    lambda2_partition_sum,
    lambda2_plus,
    lambda2_system,
    lambda3_explicit,
)
from .matrix import BinaryMatrix, is_lambda, transpose
from .profile_dp import dp_count

__all__ = ["Check", "SUITE_NAMES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, lhs, rhs) -> Check:
    return Check(name, lhs == rhs, f"{lhs} vs {rhs}")


def suite_theorem1(n_max: int = 6) -> list[Check]:
    """Corner-split ratio identities over enumerated splits:
    k * minus == (n-k) * plus and n * plus == k * total."""
    n_max = min(n_max, 7)
    checks = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            split = count_split(n, k)
            checks.append(_check(
                f"n={n} k={k}: k*minus == (n-k)*plus",
                k * split.minus, (n - k) * split.plus,
            ))
            checks.append(_check(
                f"n={n} k={k}: n*plus == k*total",
                n * split.plus, k * split.total,
            ))
    return checks


def suite_theorem2(n_max: int = 8) -> list[Check]:
    """The closed corner-one k = 2 formula against the enumerated split
    and against the two-term recursion total."""
    checks = []
    for n in range(3, min(n_max, 8) + 1):
        checks.append(_check(
            f"n={n}: corner-one formula == enumerated plus",
            lambda2_plus(n), count_split(n, 2).plus,
        ))
    for n in range(3, min(n_max, 500) + 1):
        checks.append(_check(
            f"n={n}: n * corner-one formula == 2 * total",
            n * lambda2_plus(n), 2 * lambda2_good(n),
        ))
    return checks


def suite_theorem4(n_max: int = 6) -> list[Check]:
    """The census identity at each size."""
    checks = []
    for n in range(4, min(n_max, 7) + 1):
        report = census_identity_check(n)
        checks.append(Check(
            f"n={n}: census identity", report.holds,
            f"{report.lhs} vs {report.rhs}",
        ))
    return checks


def suite_rho(n_max: int = 5) -> list[Check]:
    """Reinsertion classes: sizes, corner splits, and the partition of
    the whole set, against full enumeration."""
    n_max = min(n_max, 6)
    checks = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            split = count_split(n, k)
            classes: dict = {}
            for m in iter_lambda(n, k):
                classes.setdefault(_class_key(m), []).append(m)
            sizes_ok = True
            members_ok = True
            plus_sum = 0
            minus_sum = 0
            for group in classes.values():
                stats = insertion_class_stats(group[0], k)
                minus = sum(1 for m in group if m.entry(n, n) == 0)
                if stats.class_size != len(group) or stats.p_minus != minus:
                    sizes_ok = False
                if set(insertion_class_members(group[0], k)) != set(group):
                    members_ok = False
                plus_sum += stats.p_plus
                minus_sum += stats.p_minus
            checks.append(Check(
                f"n={n} k={k}: class sizes and corner splits", sizes_ok))
            checks.append(Check(
                f"n={n} k={k}: regenerated classes partition the set", members_ok))
            checks.append(Check(
                f"n={n} k={k}: class sums reproduce the split",
                plus_sum == split.plus and minus_sum == split.minus,
                f"plus {plus_sum} vs {split.plus}, minus {minus_sum} vs {split.minus}",
            ))
    return checks


def suite_formulas(n_max: int = 40) -> list[Check]:
    """Four-way k = 2 agreement, the explicit k = 3 sum, and the
    profile-DP cross-checks."""
    n_max = min(n_max, 200)
    checks = []
    for n in range(1, n_max + 1):
        a = lambda2_partition_sum(n)
        b = lambda2_anand(n)
        c = lambda2_good(n)
        d, _ = lambda2_system(n)
        checks.append(Check(
            f"n={n}: four k=2 routes agree",
            a == b == c == d, f"{a}, {b}, {c}, {d}",
        ))
    for n in range(1, min(n_max, 40) + 1):
        checks.append(_check(
            f"n={n}: k=2 formulas == profile dp", lambda2_good(n), dp_count(n, 2),
        ))
    for n in range(3, min(n_max, 25) + 1):
        checks.append(_check(
            f"n={n}: explicit k=3 sum == profile dp",
            lambda3_explicit(n), dp_count(n, 3),
        ))
    checks.append(Check(
        f"k=2 counts strictly increase for 3 <= n <= {n_max}",
        all(lambda2_good(n) < lambda2_good(n + 1) for n in range(3, n_max)),
    ))
    return checks


def suite_oracle(n_max: int = 5) -> list[Check]:
    """Enumeration against profile DP, the exhaustive filter at tiny n,
    and the complement/transpose symmetries."""
    n_max = min(n_max, 6)
    checks = []
    for n in range(1, n_max + 1):
        checks.append(Check(
            f"n={n}: enumerated counts == profile dp for every k",
            all(count_lambda(n, k) == dp_count(n, k) for k in range(n + 1)),
        ))
        checks.append(Check(
            f"n={n}: complement symmetry of enumerated counts",
            all(count_lambda(n, k) == count_lambda(n, n - k) for k in range(n + 1)),
        ))
    for n in range(1, min(n_max, 4) + 1):
        for k in range(n + 1):
            seen = list(iter_lambda(n, k))
            brute = _brute_force_set(n, k)
            checks.append(Check(
                f"n={n} k={k}: enumeration matches the exhaustive filter",
                len(seen) == len(set(seen)) and set(seen) == brute,
                f"{len(seen)} enumerated vs {len(brute)} filtered",
            ))
            checks.append(Check(
                f"n={n} k={k}: visited set closed under transpose",
                set(seen) == {transpose(m) for m in seen},
            ))
    return checks


def _brute_force_set(n: int, k: int) -> set[BinaryMatrix]:
    """All n x n matrices passing the row/column-sum filter, by trying
    every one of the 2^(n*n) bit patterns.  Only sensible for n <= 4."""
    out = set()
    for code in range(1 << (n * n)):
        rows = [(code >> (n * i)) & ((1 << n) - 1) for i in range(n)]
        m = BinaryMatrix(n, rows)
        if is_lambda(m, k):
            out.add(m)
    return out


def _class_key(matrix: BinaryMatrix):
    n = matrix.n
    cols = matrix.col_masks()
    last_bit = 1 << (n - 1)
    kept = tuple(c for c in cols if not c & last_bit)
    deleted = tuple(sorted(c for c in cols if c & last_bit))
    return kept, deleted


_SUITES = {
    "formulas": suite_formulas,
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "theorem4": suite_theorem4,
    "rho": suite_rho,
    "oracle": suite_oracle,
}

_DEFAULT_BOUNDS = {
    "formulas": 40,
    "theorem1": 6,
    "theorem2": 8,
    "theorem4": 6,
    "rho": 5,
    "oracle": 5,
}

SUITE_NAMES = (*_SUITES, "all")


def run_suite(name: str, n_max: int | None = None) -> list[Check]:
    """Run one suite (or ``all``) and return its checks."""
    if name == "all":
        checks = []
        for suite in _SUITES:
            checks.extend(run_suite(suite, n_max))
        return checks
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    bound = _DEFAULT_BOUNDS[name] if n_max is None else n_max
    return _SUITES[name](bound)
