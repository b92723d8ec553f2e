# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled elimination kernel over GF(p)[i]; see _modrank_py for the
fallback with the same contract.  Entries are int64 pairs reduced to
[0, p) with p < 2**31, so products fit in 64 bits (two-product sums stay
below 2**63 by 2**34)."""


cdef inline long long _mod(long long x, long long p) noexcept nogil:
    x %= p
    if x < 0:
        x += p
    return x


cdef inline long long _modpow(long long base, long long exp, long long p) noexcept nogil:
    cdef long long acc = 1
    base %= p
    while exp > 0:
        if exp & 1:
            acc = (acc * base) % p
        base = (base * base) % p
        exp >>= 1
    return acc


def rank_mod_gaussian(long long[:, ::1] re, long long[:, ::1] im, long long p):
    """Rank of the matrix re + i*im over GF(p)[i], destroying the inputs."""
    cdef Py_ssize_t rows = re.shape[0]
    cdef Py_ssize_t cols = re.shape[1]
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, i, j, piv
    cdef long long a, b, ninv, inv_r, inv_i
    cdef long long fr, fi, gr, gi, pr, pi, tr, ti, tmp

    with nogil:
        for col in range(cols):
            if rank == rows:
                break
            piv = -1
            for i in range(rank, rows):
                if re[i, col] != 0 or im[i, col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(col, cols):
                    tmp = re[rank, j]; re[rank, j] = re[piv, j]; re[piv, j] = tmp
                    tmp = im[rank, j]; im[rank, j] = im[piv, j]; im[piv, j] = tmp
            a = re[rank, col]
            b = im[rank, col]
            ninv = _modpow((a * a + b * b) % p, p - 2, p)
            inv_r = (a * ninv) % p
            inv_i = ((p - b) * ninv) % p
            for i in range(rank + 1, rows):
                fr = re[i, col]
                fi = im[i, col]
                if fr == 0 and fi == 0:
                    continue
                gr = _mod(fr * inv_r - fi * inv_i, p)
                gi = (fr * inv_i + fi * inv_r) % p
                re[i, col] = 0
                im[i, col] = 0
                for j in range(col + 1, cols):
                    pr = re[rank, j]
                    pi = im[rank, j]
                    if pr == 0 and pi == 0:
                        continue
                    tr = _mod(gr * pr - gi * pi, p)
                    ti = (gr * pi + gi * pr) % p
                    re[i, j] = _mod(re[i, j] - tr, p)
                    im[i, j] = _mod(im[i, j] - ti, p)
            rank += 1
    return rank
