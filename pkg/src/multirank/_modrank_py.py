"""Pure-Python elimination kernel over GF(p)[i], vectorized with numpy.

Fallback used when the compiled extension is unavailable (see
``kernels``).  Entries are int64 pairs (re, im) already reduced to
[0, p).  With p < 2**31 every intermediate product stays below 2**62
and every two-product sum below 2**63, so int64 never overflows; each
product is reduced mod p before combining to keep that bound.

Both kernels mutate their arguments; callers pass owned copies.
"""

from __future__ import annotations

import numpy as np


def rank_mod_gaussian(re: np.ndarray, im: np.ndarray, p: int) -> int:
    """Rank of the matrix re + i*im over GF(p)[i], destroying the inputs."""
    rows, cols = re.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero((re[rank:, col] != 0) | (im[rank:, col] != 0))
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            re[[rank, piv]] = re[[piv, rank]]
            im[[rank, piv]] = im[[piv, rank]]
        a = int(re[rank, col])
        b = int(im[rank, col])
        ninv = pow((a * a + b * b) % p, p - 2, p)
        inv_r = a * ninv % p
        inv_i = (p - b) * ninv % p
        # factors f = M[i, col] / pivot for every row below
        fr = re[rank + 1 :, col]
        fi = im[rank + 1 :, col]
        gr = (fr * inv_r - fi * inv_i) % p
        gi = (fr * inv_i + fi * inv_r) % p
        pr = re[rank, col:]
        pi = im[rank, col:]
        tr = ((gr[:, None] * pr) % p - (gi[:, None] * pi) % p) % p
        ti = ((gr[:, None] * pi) % p + (gi[:, None] * pr) % p) % p
        re[rank + 1 :, col:] = (re[rank + 1 :, col:] - tr) % p
        im[rank + 1 :, col:] = (im[rank + 1 :, col:] - ti) % p
        rank += 1
    return rank
