"""Exact, modular, and generic (probabilistic) matrix rank.

Three routes, one contract:

* :func:`exact_rank` works over the Gaussian rationals.  Each row is
  scaled by the lcm of its denominators (rank-invariant), then
  fraction-free Bareiss elimination runs over the Gaussian integers:
  every 2x2 cross-multiplication is exactly divisible by the previous
  pivot, which keeps entry growth polynomial instead of exponential.
  Pivots are the first nonzero in column order; no magnitude pivoting is
  needed in exact arithmetic.

* :func:`modular_rank` eliminates over GF(p)[i] with p an odd prime
  congruent to 3 mod 4, so i*i + 1 is irreducible and the quotient is
  the field GF(p^2).  The result never exceeds the exact rank; it can
  undershoot when p divides a pivot minor.

* :func:`generic_rank` substitutes uniform random field elements for
  each named parameter, takes the modular rank, and maximizes over
  trials.  By Schwartz-Zippel the per-trial failure probability is at
  most deg/p with deg bounded by the smaller matrix dimension (entries
  are at most linear in the parameters).

Every route first discards all-zero rows and columns, so the working
matrix is never larger than the number of nonzero entries on a side.
:func:`rank_dispatch` glues the routes together under a policy; the
default fast-then-verify policy certifies a modular result as exact
whenever it meets the upper bound min(nonzero rows, nonzero cols) and
falls back to the exact route otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional

import numpy as np

from .errors import PolicyMismatchError, PrimeClashError
from .flatten import FlattenedMatrix
from .gaussian import GaussianRational, Parameter
from .kernels import rank_mod_gaussian

# Twenty primes == 3 (mod 4) just below 2**31: large enough that random
# substitution failures are negligible, small enough for int64 kernels.
PRIMES_3_MOD_4 = (
    2147483647, 2147483587, 2147483579, 2147483563, 2147483543,
    2147483423, 2147483399, 2147483323, 2147483179, 2147483171,
    2147483123, 2147483059, 2147482951, 2147482943, 2147482867,
    2147482859, 2147482819, 2147482811, 2147482763, 2147482739,
)

DEFAULT_GENERIC_TRIALS = 8


@dataclass(frozen=True, slots=True)
class RankResult:
    """A rank value plus how it was obtained.

    ``certainty`` is "exact" when the value provably equals the rank
    over the Gaussian rationals, "probabilistic" otherwise.  A modular
    value is always a lower bound on the exact rank.  ``failure_bound``
    is the Schwartz-Zippel bound on the probability that a generic
    result understates the generic rank.
    """

    value: int
    mode: str  # "exact" | "modular" | "generic"
    certainty: str  # "exact" | "probabilistic"
    prime: Optional[int] = None
    trials: Optional[int] = None
    failure_bound: Optional[float] = None


@dataclass(frozen=True, slots=True)
class RankPolicy:
    """Which rank route to use; see :func:`rank_dispatch`."""

    kind: str  # "exact" | "fast" | "modular" | "generic"
    prime: Optional[int] = None
    trials: Optional[int] = None

    @classmethod
    def exact(cls) -> "RankPolicy":
        return cls("exact")

    @classmethod
    def fast(cls) -> "RankPolicy":
        return cls("fast")

    @classmethod
    def modular(cls, prime: int) -> "RankPolicy":
        return cls("modular", prime=prime)

    @classmethod
    def generic(cls, trials: int = DEFAULT_GENERIC_TRIALS, prime: Optional[int] = None) -> "RankPolicy":
        return cls("generic", prime=prime, trials=trials)

    def label(self) -> str:
        if self.kind == "modular":
            return f"mod:{self.prime}"
        if self.kind == "generic":
            prime = self.prime if self.prime is not None else "auto"
            return f"generic:{self.trials},{prime}"
        return self.kind


def parse_policy(text: str) -> RankPolicy:
    """Parse the CLI policy syntax: exact | fast | mod:<p> | generic:<trials>,<p>."""
    if text == "exact":
        return RankPolicy.exact()
    if text == "fast":
        return RankPolicy.fast()
    if text.startswith("mod:"):
        try:
            return RankPolicy.modular(int(text[4:]))
        except ValueError:
            raise ValueError(f"malformed modular policy {text!r}") from None
    if text == "generic":
        return RankPolicy.generic()
    if text.startswith("generic:"):
        body = text[len("generic:") :]
        parts = body.split(",")
        try:
            if len(parts) == 1:
                return RankPolicy.generic(trials=int(parts[0]))
            if len(parts) == 2:
                return RankPolicy.generic(trials=int(parts[0]), prime=int(parts[1]))
        except ValueError:
            pass
        raise ValueError(f"malformed generic policy {text!r}")
    raise ValueError(f"unknown rank policy {text!r}")


# ---------------------------------------------------------------------------
# Shared plumbing

GaussInt = tuple[int, int]


def _compress(matrix: FlattenedMatrix):
    """Relabel to the nonzero rows/cols only; rank is unaffected."""
    row_ids = sorted({r for r, _ in matrix.entries})
    col_ids = sorted({c for _, c in matrix.entries})
    row_of = {r: i for i, r in enumerate(row_ids)}
    col_of = {c: i for i, c in enumerate(col_ids)}
    entries = {
        (row_of[r], col_of[c]): amp for (r, c), amp in matrix.entries.items()
    }
    return len(row_ids), len(col_ids), entries


def _has_parameters(matrix: FlattenedMatrix) -> bool:
    return any(isinstance(a, Parameter) for a in matrix.entries.values())


def _cleared_integer_rows(rows: int, cols: int, entries) -> list[list[GaussInt]]:
    """Dense Gaussian-integer rows after per-row denominator clearing."""
    grid: list[list[GaussianRational]] = [
        [None] * cols for _ in range(rows)  # type: ignore[list-item]
    ]
    for (r, c), amp in entries.items():
        grid[r][c] = amp
    out = []
    for row in grid:
        scale = 1
        for amp in row:
            if amp is not None:
                scale = lcm(scale, amp.re.denominator, amp.im.denominator)
        out.append(
            [
                (0, 0)
                if amp is None
                else (int(amp.re * scale), int(amp.im * scale))
                for amp in row
            ]
        )
    return out


def _gdiv_exact(a: GaussInt, b: GaussInt) -> GaussInt:
    # a / b in Z[i]; Bareiss guarantees divisibility, assert it anyway.
    norm = b[0] * b[0] + b[1] * b[1]
    xr = a[0] * b[0] + a[1] * b[1]
    xi = a[1] * b[0] - a[0] * b[1]
    qr, rr = divmod(xr, norm)
    qi, ri = divmod(xi, norm)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian-integer division in Bareiss step")
    return (qr, qi)


def _bareiss_rank(mat: list[list[GaussInt]]) -> int:
    """Fraction-free elimination over Z[i]; mutates and returns the rank."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    rank = 0
    prev: GaussInt = (1, 0)
    for col in range(cols):
        if rank == rows:
            break
        piv = next((i for i in range(rank, rows) if mat[i][col] != (0, 0)), None)
        if piv is None:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, rows):
            # the pivot rescale applies even when factor is zero, or the
            # exact-division invariant breaks at later steps
            factor = mat[i][col]
            row_i = mat[i]
            row_p = mat[rank]
            for j in range(col + 1, cols):
                num = (
                    pivot[0] * row_i[j][0] - pivot[1] * row_i[j][1]
                    - factor[0] * row_p[j][0] + factor[1] * row_p[j][1],
                    pivot[0] * row_i[j][1] + pivot[1] * row_i[j][0]
                    - factor[0] * row_p[j][1] - factor[1] * row_p[j][0],
                )
                row_i[j] = _gdiv_exact(num, prev) if prev != (1, 0) else num
            row_i[col] = (0, 0)
        prev = pivot
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Exact route


def exact_rank(matrix: FlattenedMatrix) -> RankResult:
    """Rank over the Gaussian rationals; requires non-parametric entries."""
    if _has_parameters(matrix):
        raise PolicyMismatchError(
            "matrix has parametric entries; use the generic policy"
        )
    rows, cols, entries = _compress(matrix)
    if rows == 0:
        return RankResult(0, mode="exact", certainty="exact")
    value = _bareiss_rank(_cleared_integer_rows(rows, cols, entries))
    return RankResult(value, mode="exact", certainty="exact")


# ---------------------------------------------------------------------------
# Modular route


def _check_prime(p: int) -> None:
    if p < 3 or p % 4 != 3:
        raise ValueError(
            f"prime must be congruent to 3 mod 4 so that GF(p)[i] is a field, got {p}"
        )
    if p >= 2**31:
        # the elimination kernels rely on products of residues fitting int64
        raise ValueError(f"prime must be below 2**31, got {p}")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _residue(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise PrimeClashError(f"prime {p} divides a denominator")
    return x.numerator * pow(x.denominator, p - 2, p) % p


def _modular_arrays(rows, cols, entries, p, assignment=None):
    re = np.zeros((rows, cols), dtype=np.int64)
    im = np.zeros((rows, cols), dtype=np.int64)
    for (r, c), amp in entries.items():
        if isinstance(amp, Parameter):
            if assignment is None:
                raise PolicyMismatchError(
                    "matrix has parametric entries; use the generic policy"
                )
            re[r, c], im[r, c] = assignment[amp.name]
        else:
            re[r, c] = _residue(amp.re, p)
            im[r, c] = _residue(amp.im, p)
    return re, im


def modular_rank(matrix: FlattenedMatrix, p: int) -> RankResult:
    """Rank over GF(p)[i]; a guaranteed lower bound for the exact rank."""
    _check_prime(p)
    rows, cols, entries = _compress(matrix)
    if rows == 0:
        return RankResult(0, mode="modular", certainty="probabilistic", prime=p)
    re, im = _modular_arrays(rows, cols, entries, p)
    value = int(rank_mod_gaussian(re, im, p))
    return RankResult(value, mode="modular", certainty="probabilistic", prime=p)


# ---------------------------------------------------------------------------
# Generic route


def generic_rank(
    matrix: FlattenedMatrix,
    trials: int = DEFAULT_GENERIC_TRIALS,
    p: Optional[int] = None,
    seed: object = 0,
) -> RankResult:
    """Max modular rank over random parameter substitutions.

    Equals the generic rank (the rank away from a measure-zero parameter
    set) except with probability at most (deg/p)**trials, reported in
    ``failure_bound``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(f"generic:{seed}")
    if p is None:
        p = _pick_prime(matrix, rng)
    _check_prime(p)
    rows, cols, entries = _compress(matrix)
    if rows == 0:
        return RankResult(
            0, mode="generic", certainty="probabilistic", prime=p, trials=trials,
            failure_bound=0.0,
        )
    names = sorted(
        {a.name for a in entries.values() if isinstance(a, Parameter)}
    )
    best = 0
    for _ in range(trials):
        assignment = {
            name: (rng.randrange(p), rng.randrange(p)) for name in names
        }
        re, im = _modular_arrays(rows, cols, entries, p, assignment)
        best = max(best, int(rank_mod_gaussian(re, im, p)))
        if best == min(rows, cols):
            break
    per_trial = Fraction(min(rows, cols), p)
    return RankResult(
        best,
        mode="generic",
        certainty="probabilistic",
        prime=p,
        trials=trials,
        failure_bound=float(per_trial**trials),
    )


def _pick_prime(matrix: FlattenedMatrix, rng: random.Random) -> int:
    """A table prime dividing no denominator; the table is large enough
    that failure means the matrix was engineered against it."""
    candidates = list(PRIMES_3_MOD_4)
    rng.shuffle(candidates)
    for p in candidates:
        if all(
            isinstance(a, Parameter)
            or (a.re.denominator % p and a.im.denominator % p)
            for a in matrix.entries.values()
        ):
            return p
    raise PrimeClashError("every table prime divides some denominator")


# ---------------------------------------------------------------------------
# Dispatch


def rank_dispatch(
    matrix: FlattenedMatrix, policy: RankPolicy, seed: object = 0
) -> RankResult:
    """Run one matrix through the policy.

    fast: one modular pass at a random admissible prime; the value is
    certified exact when it meets the upper bound min(nonzero rows,
    nonzero cols), otherwise the exact route decides.
    """
    if policy.kind == "exact":
        return exact_rank(matrix)
    if policy.kind == "generic":
        trials = policy.trials or DEFAULT_GENERIC_TRIALS
        return generic_rank(matrix, trials=trials, p=policy.prime, seed=seed)
    if policy.kind == "modular":
        if policy.prime is None:
            raise ValueError("modular policy needs an explicit prime")
        return modular_rank(matrix, policy.prime)
    if policy.kind == "fast":
        if _has_parameters(matrix):
            raise PolicyMismatchError(
                "matrix has parametric entries; use the generic policy"
            )
        rows, cols, _ = _compress(matrix)
        if rows == 0:
            return RankResult(0, mode="exact", certainty="exact")
        rng = random.Random(f"fast:{seed}")
        p = _pick_prime(matrix, rng)
        probe = modular_rank(matrix, p)
        if probe.value == min(rows, cols):
            return RankResult(
                probe.value, mode="modular", certainty="exact", prime=p
            )
        return exact_rank(matrix)
    raise ValueError(f"unknown rank policy kind {policy.kind!r}")


# ---------------------------------------------------------------------------
# Independent oracle


def oracle_rank_minors(matrix: FlattenedMatrix) -> int:
    """Largest k with a nonzero k x k minor, by exhaustive expansion.

    Test oracle, deliberately independent of the elimination routes;
    restricted to matrices no larger than 6 on either side.
    """
    if matrix.rows > 6 or matrix.cols > 6:
        raise ValueError("minor oracle is restricted to dimensions <= 6")
    if _has_parameters(matrix):
        raise PolicyMismatchError("minor oracle needs non-parametric entries")
    zero = GaussianRational.of(0)
    dense = [[zero] * matrix.cols for _ in range(matrix.rows)]
    for (r, c), amp in matrix.entries.items():
        dense[r][c] = amp
    for k in range(min(matrix.rows, matrix.cols), 0, -1):
        for row_ids in combinations(range(matrix.rows), k):
            for col_ids in combinations(range(matrix.cols), k):
                sub = [[dense[r][c] for c in col_ids] for r in row_ids]
                if not _determinant(sub).is_zero:
                    return k
    return 0


def _determinant(sub: list[list[GaussianRational]]) -> GaussianRational:
    n = len(sub)
    if n == 1:
        return sub[0][0]
    total = GaussianRational.of(0)
    for j, top in enumerate(sub[0]):
        if top.is_zero:
            continue
        minor = [row[:j] + row[j + 1 :] for row in sub[1:]]
        term = top * _determinant(minor)
        total = total - term if j % 2 else total + term
    return total
