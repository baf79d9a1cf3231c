"""Square 0-1 matrices stored as per-row bit masks.

Row i is a Python int whose bit j-1 holds the entry in column j, so row
and column sums are popcounts and whole rows can be handled as machine
words by the search kernels.  All user-facing indices (error messages,
edge lists, submatrix coordinates) are 1-based; bit positions are an
internal detail.

Matrices are immutable: every operation returns a new value, and
instances can be shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    InvalidParameterError,
    MatrixParseError,
    NotInPlusSetError,
    NotLambdaError,
)

__all__ = [
    "BinaryMatrix",
    "CornerSubmatrix",
    "parse_matrix",
    "serialize_matrix",
    "is_lambda",
    "complement",
    "transpose",
    "corner_submatrix",
    "to_bipartite_edges",
]


class BinaryMatrix:
    """Immutable n x n 0-1 matrix."""

    __slots__ = ("n", "row_masks")

    def __init__(self, n: int, row_masks) -> None:
        if not isinstance(n, int) or n < 1:
            raise InvalidParameterError("matrix dimension must be a positive integer")
        masks = tuple(row_masks)
        if len(masks) != n:
            raise InvalidParameterError(f"expected {n} rows, got {len(masks)}")
        limit = 1 << n
        for i, mask in enumerate(masks, start=1):
            if not isinstance(mask, int) or not 0 <= mask < limit:
                raise InvalidParameterError(f"row {i} does not fit in {n} columns")
        self.n = n
        self.row_masks = masks

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j (both 1-based)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i},{j}) outside a {self.n}x{self.n} matrix")
        return (self.row_masks[i - 1] >> (j - 1)) & 1

    def col_masks(self) -> tuple[int, ...]:
        """Column bit masks (bit i-1 of mask j-1 is the entry at row i, column j)."""
        cols = [0] * self.n
        for i, mask in enumerate(self.row_masks):
            while mask:
                low = mask & -mask
                cols[low.bit_length() - 1] |= 1 << i
                mask ^= low
        return tuple(cols)

    def to_strings(self) -> tuple[str, ...]:
        """Rows as bit strings, leftmost character = column 1."""
        n = self.n
        return tuple(
            "".join("1" if (mask >> j) & 1 else "0" for j in range(n))
            for mask in self.row_masks
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.n == other.n
            and self.row_masks == other.row_masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.row_masks))

    def __repr__(self) -> str:
        return "BinaryMatrix(%r)" % "/".join(self.to_strings())

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse newline-separated bit-string rows into a matrix.

    The input must be square (as many rows as columns) and contain only
    the characters 0 and 1.  A single trailing newline is tolerated.
    """
    lines = text.splitlines()
    if not lines or lines == [""]:
        raise MatrixParseError("empty input")
    n = len(lines)
    masks = []
    for i, line in enumerate(lines, start=1):
        if len(line) != n:
            raise MatrixParseError(
                f"non-square input: {n} rows but row {i} has {len(line)} columns"
            )
        mask = 0
        for j, ch in enumerate(line, start=1):
            if ch == "1":
                mask |= 1 << (j - 1)
            elif ch != "0":
                raise MatrixParseError(
                    f"illegal character {ch!r} at row {i}, column {j}"
                )
        masks.append(mask)
    return BinaryMatrix(n, masks)


def serialize_matrix(matrix: BinaryMatrix, fmt: str = "plain") -> str:
    """Render a matrix as text.

    ``plain`` is newline-joined bit strings (the inverse of
    :func:`parse_matrix`); ``jsonl-record`` is a single-line JSON object
    with fields ``n`` and ``rows``.
    """
    if fmt == "plain":
        return "\n".join(matrix.to_strings())
    if fmt == "jsonl-record":
        return json.dumps(
            {"n": matrix.n, "rows": list(matrix.to_strings())},
            sort_keys=True,
            separators=(",", ":"),
        )
    raise InvalidParameterError(f"unknown matrix format {fmt!r}")


def is_lambda(matrix: BinaryMatrix, k: int) -> bool:
    """True iff every row sum and every column sum equals k."""
    n = matrix.n
    if not isinstance(k, int) or k < 0 or k > n:
        raise InvalidParameterError(f"k must satisfy 0 <= k <= n, got k={k} for n={n}")
    if any(mask.bit_count() != k for mask in matrix.row_masks):
        return False
    return all(mask.bit_count() == k for mask in matrix.col_masks())


def complement(matrix: BinaryMatrix) -> BinaryMatrix:
    """Entrywise 1-x; maps a k-regular matrix to an (n-k)-regular one."""
    full = (1 << matrix.n) - 1
    return BinaryMatrix(matrix.n, (mask ^ full for mask in matrix.row_masks))


def transpose(matrix: BinaryMatrix) -> BinaryMatrix:
    """Swap rows and columns; preserves regularity."""
    return BinaryMatrix(matrix.n, matrix.col_masks())


@dataclass(frozen=True)
class CornerSubmatrix:
    """2x2 submatrix of a 3-regular corner-one matrix.

    Taken at the rows s < t carrying the last column's other ones and
    the columns p < q carrying the last row's other ones; all indices
    1-based.  ``bits`` is ((entry(s,p), entry(s,q)), (entry(t,p),
    entry(t,q))).
    """

    rows: tuple[int, int]
    cols: tuple[int, int]
    bits: tuple[tuple[int, int], tuple[int, int]]

    @property
    def pattern(self) -> int:
        """4-bit code: top-left<<3 | top-right<<2 | bottom-left<<1 | bottom-right."""
        (a, b), (c, d) = self.bits
        return (a << 3) | (b << 2) | (c << 1) | d


def corner_submatrix(matrix: BinaryMatrix) -> CornerSubmatrix:
    """Extract the 2x2 corner submatrix of a 3-regular corner-one matrix.

    Raises :class:`NotLambdaError` when some row or column sum differs
    from 3, and :class:`NotInPlusSetError` when the bottom-right entry
    is 0.  For n = 3 the indices degenerate to rows (1, 2) and columns
    (1, 2) and the only qualifying matrix is all-ones.
    """
    if not is_lambda(matrix, 3):
        raise NotLambdaError("matrix does not have exactly 3 ones in every row and column")
    n = matrix.n
    if matrix.entry(n, n) != 1:
        raise NotInPlusSetError("bottom-right entry is 0; the corner submatrix needs a corner 1")
    corner_bit = 1 << (n - 1)
    s, t = (i + 1 for i in range(n - 1) if matrix.row_masks[i] & corner_bit)
    last = matrix.row_masks[n - 1]
    p, q = (j + 1 for j in range(n - 1) if (last >> j) & 1)
    bits = (
        (matrix.entry(s, p), matrix.entry(s, q)),
        (matrix.entry(t, p), matrix.entry(t, q)),
    )
    return CornerSubmatrix(rows=(s, t), cols=(p, q), bits=bits)


def to_bipartite_edges(matrix: BinaryMatrix) -> list[tuple[int, int]]:
    """Edges (row vertex, column vertex) of the bipartite graph whose
    biadjacency matrix this is; 1-based, rows ascending then columns.

    A k-regular matrix gives every vertex of both parts degree k.
    """
    n = matrix.n
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if (matrix.row_masks[i - 1] >> (j - 1)) & 1
    ]
