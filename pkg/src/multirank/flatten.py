"""Matricization of a state along a bipartition.

Each nonzero term maps to exactly one matrix entry: the row index is the
big-endian mixed-radix value of the ket digits on the row side (first
listed party most significant), the column index the same construction
over the complement.  Any fixed bijection gives the same rank; this one
is chosen so the produced matrices, not just their ranks, are stable and
reproducible.  The matrix is assembled straight from the sparse terms;
the dense tensor is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidStateError
from .gaussian import Amplitude, GaussianRational, as_amplitude
from .partition import Bipartition
from .state import MultiIndex, QuditDims, StateTensor


@dataclass(frozen=True)
class FlattenedMatrix:
    """Sparse ``rows x cols`` matrix holding the surviving amplitudes.

    ``bipartition`` is None for synthetic matrices (tests, transposes).
    """

    rows: int
    cols: int
    entries: dict[tuple[int, int], Amplitude]
    bipartition: Optional[Bipartition] = None


def row_col_of(
    index: MultiIndex, bipartition: Bipartition, dims: QuditDims
) -> tuple[int, int]:
    """Map one multi-index to its (row, col) position in the flattening."""
    row = 0
    for j in bipartition.parties:
        row = row * dims.dims[j - 1] + index[j - 1]
    col = 0
    for j in bipartition.complement:
        col = col * dims.dims[j - 1] + index[j - 1]
    return row, col


def flatten(state: StateTensor, bipartition: Bipartition) -> FlattenedMatrix:
    """Build the flattening of ``state`` induced by ``bipartition``."""
    _check_consistent(state.dims, bipartition)
    entries = {
        row_col_of(index, bipartition, state.dims): amp
        for index, amp in state.terms.items()
    }
    return FlattenedMatrix(
        rows=bipartition.dim_rows,
        cols=bipartition.dim_cols,
        entries=entries,
        bipartition=bipartition,
    )


def _check_consistent(dims: QuditDims, bipartition: Bipartition) -> None:
    labels = bipartition.parties + bipartition.complement
    if sorted(labels) != list(range(1, dims.n + 1)):
        raise InvalidStateError(
            f"bipartition {bipartition.parties}/{bipartition.complement} "
            f"does not partition parties 1..{dims.n}"
        )
    dim_rows = 1
    for j in bipartition.parties:
        dim_rows *= dims.dims[j - 1]
    if dim_rows != bipartition.dim_rows or dims.delta != dim_rows * bipartition.dim_cols:
        raise InvalidStateError("bipartition dimensions disagree with the state dims")


def transposed(matrix: FlattenedMatrix) -> FlattenedMatrix:
    """Swap rows and columns; the result carries no bipartition."""
    return FlattenedMatrix(
        rows=matrix.cols,
        cols=matrix.rows,
        entries={(c, r): a for (r, c), a in matrix.entries.items()},
        bipartition=None,
    )


def matrix_from_dense(rows: Sequence[Sequence[object]]) -> FlattenedMatrix:
    """Convenience constructor from dense values (zeros are dropped)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    entries: dict[tuple[int, int], Amplitude] = {}
    for r, row in enumerate(rows):
        if len(row) != n_cols:
            raise ValueError("ragged rows")
        for c, value in enumerate(row):
            amp = as_amplitude(value)
            if isinstance(amp, GaussianRational) and amp.is_zero:
                continue
            entries[(r, c)] = amp
    return FlattenedMatrix(rows=n_rows, cols=n_cols, entries=entries)


def dense_string_rows(matrix: FlattenedMatrix) -> list[list[str]]:
    """Dense rendering with every entry as an exact string (debug dumps)."""
    out = [["0"] * matrix.cols for _ in range(matrix.rows)]
    for (r, c), amp in matrix.entries.items():
        out[r][c] = str(amp)
    return out
