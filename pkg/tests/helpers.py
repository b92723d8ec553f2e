"""Shared constructions for the test suite.

Random states, random invertible local matrices, and the four reference
states exercised throughout.  Every generator takes an explicit
``random.Random`` so tests stay reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from multirank import (
    FlattenedMatrix,
    GaussianRational,
    QuditDims,
    StateTensor,
    build_state,
)


def w3() -> StateTensor:
    return build_state((2, 2, 2), [((0, 0, 1), 1), ((0, 1, 0), 1), ((1, 0, 0), 1)])


def cluster4() -> StateTensor:
    return build_state(
        (2, 2, 2, 2),
        [((0, 0, 0, 0), 1), ((0, 0, 1, 1), 1), ((1, 1, 0, 0), 1), ((1, 1, 1, 1), -1)],
    )


def qutrit3() -> StateTensor:
    return build_state(
        (3, 3, 3),
        [
            ((0, 0, 2), 1),
            ((0, 2, 0), 1),
            ((2, 0, 0), 1),
            ((0, 1, 1), 1),
            ((1, 0, 1), 1),
            ((1, 1, 0), 1),
        ],
    )


def ghz6_qutrit_plus() -> StateTensor:
    terms = [((k,) * 6, 1) for k in range(3)]
    terms.append(((0, 0, 1, 1, 2, 2), 1))
    return build_state((3,) * 6, terms)


REFERENCE_PROFILES = {
    "w3": (w3, [[2, 2, 2]]),
    "cluster4": (cluster4, [[2, 2, 2, 2], [2, 4, 4, 4, 4, 2]]),
    "qutrit3": (qutrit3, [[3, 3, 3]]),
    "ghz6_qutrit_plus": (
        ghz6_qutrit_plus,
        [[3] * 6, [3, 4, 4, 4, 4, 4, 4, 4, 4, 3, 4, 4, 4, 4, 3], [4] * 20],
    ),
}


def gauss(re=0, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


def rand_gauss_int(rng: random.Random, lo: int = -3, hi: int = 3) -> GaussianRational:
    """Nonzero Gaussian integer with both parts in [lo, hi]."""
    while True:
        g = gauss(rng.randint(lo, hi), rng.randint(lo, hi))
        if not g.is_zero:
            return g


def rand_dims(rng: random.Random, max_n: int = 6, max_d: int = 3) -> tuple[int, ...]:
    n = rng.randint(2, max_n)
    return tuple(rng.randint(2, max_d) for _ in range(n))


def rand_state(
    rng: random.Random,
    max_n: int = 6,
    max_d: int = 3,
    max_terms: int = 20,
) -> StateTensor:
    dims = rand_dims(rng, max_n, max_d)
    space = 1
    for d in dims:
        space *= d
    count = rng.randint(1, min(max_terms, space))
    indices: set[tuple[int, ...]] = set()
    while len(indices) < count:
        indices.add(tuple(rng.randrange(d) for d in dims))
    return build_state(dims, [(idx, rand_gauss_int(rng)) for idx in indices])


def _rand_local_vector(rng: random.Random, d: int, max_support: int = 2):
    support = rng.sample(range(d), rng.randint(1, min(max_support, d)))
    return {i: rand_gauss_int(rng) for i in support}


def rand_product_state(rng: random.Random, max_n: int = 6, max_d: int = 3) -> StateTensor:
    """Explicit tensor product of random single-party vectors."""
    dims = rand_dims(rng, max_n, max_d)
    vectors = [_rand_local_vector(rng, d) for d in dims]
    terms = [((), gauss(1))]
    for vec in vectors:
        terms = [
            (idx + (i,), coeff * v) for idx, coeff in terms for i, v in vec.items()
        ]
    return build_state(dims, terms)


def rand_cut_product_state(rng: random.Random, max_n: int = 6, max_d: int = 3):
    """A state that is a product across one chosen cut.

    Returns (state, cut) with ``cut`` the sorted tuple of 1-based party
    labels on one side.  Either side may be internally entangled.
    """
    n = rng.randint(3, max_n)
    dims = tuple(rng.randint(2, max_d) for _ in range(n))
    size = rng.randint(1, n - 1)
    cut = tuple(sorted(rng.sample(range(1, n + 1), size)))
    rest = tuple(j for j in range(1, n + 1) if j not in cut)

    def side_terms(parties):
        side_dims = [dims[j - 1] for j in parties]
        space = 1
        for d in side_dims:
            space *= d
        count = rng.randint(1, min(4, space))
        chosen: set[tuple[int, ...]] = set()
        while len(chosen) < count:
            chosen.add(tuple(rng.randrange(d) for d in side_dims))
        return {idx: rand_gauss_int(rng) for idx in chosen}

    left, right = side_terms(cut), side_terms(rest)
    terms = []
    for li, lc in left.items():
        for ri, rc in right.items():
            full = [0] * n
            for pos, j in enumerate(cut):
                full[j - 1] = li[pos]
            for pos, j in enumerate(rest):
                full[j - 1] = ri[pos]
            terms.append((tuple(full), lc * rc))
    return build_state(dims, terms), cut


def matmul(a, b):
    """Exact product of two dense GaussianRational matrices."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[gauss(0)] * cols for _ in range(rows)]
    for r in range(rows):
        for k in range(inner):
            if a[r][k].is_zero:
                continue
            for c in range(cols):
                out[r][c] = out[r][c] + a[r][k] * b[k][c]
    return out


def rand_invertible_matrix(rng: random.Random, d: int):
    """L @ U with unit lower L and nonzero upper diagonal, rows permuted."""
    units = [gauss(1), gauss(-1), gauss(2), gauss(0, 1), gauss(1, 1)]
    small = lambda: gauss(rng.randint(-2, 2), rng.randint(-2, 2))
    lower = [[gauss(1) if r == c else (small() if r > c else gauss(0)) for c in range(d)] for r in range(d)]
    upper = [
        [rng.choice(units) if r == c else (small() if r < c else gauss(0)) for c in range(d)]
        for r in range(d)
    ]
    product = matmul(lower, upper)
    perm = list(range(d))
    rng.shuffle(perm)
    return [product[i] for i in perm]


def compressed_dense(matrix: FlattenedMatrix):
    """Drop empty rows/cols, test-side; used to feed the minors oracle."""
    row_ids = sorted({r for r, _ in matrix.entries})
    col_ids = sorted({c for _, c in matrix.entries})
    dense = [[gauss(0)] * len(col_ids) for _ in row_ids]
    for (r, c), amp in matrix.entries.items():
        dense[row_ids.index(r)][col_ids.index(c)] = amp
    return dense


def dims_of(state: StateTensor) -> QuditDims:
    return state.dims
