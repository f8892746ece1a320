"""Hot loops of the lambda sweeps, in two interchangeable implementations.

Each kernel exists as a numba-compiled loop (``*_jit``) and as a vectorized
numpy routine (``*_np``). The public names dispatch on
:data:`legquartic._jit.BACKEND`, which ``LEGQUARTIC_NO_JIT=1`` flips to numpy.
Both paths are exact integer code and must agree bit for bit; the test suite
runs them against each other.

Field elements are canonical indices. Multiplication goes through the
discrete log tables, addition digit by digit in base p.
"""

import numpy as np

from ._jit import BACKEND, njit

# --- numba kernels ------------------------------------------------------------


@njit(cache=True, nogil=True)
def _fadd(a, b, p, n):
    if n == 1:
        return (a + b) % p
    res = 0
    place = 1
    for _ in range(n):
        res += ((a % p + b % p) % p) * place
        a //= p
        b //= p
        place *= p
    return res


@njit(cache=True, nogil=True)
def _fsub_digits(a, b, p, n):
    res = 0
    place = 1
    for _ in range(n):
        res += ((a % p - b % p) % p) * place
        a //= p
        b //= p
        place *= p
    return res


@njit(cache=True, nogil=True)
def _fmul(a, b, log, exp, qm1):
    if a == 0 or b == 0:
        return 0
    k = log[a] + log[b]
    if k >= qm1:
        k -= qm1
    return exp[k]


@njit(cache=True, nogil=True)
def _fdiv(a, b, log, exp, qm1):
    if a == 0:
        return 0
    k = log[a] - log[b]
    if k < 0:
        k += qm1
    return exp[k]


@njit(cache=True, nogil=True)
def _char_correlation_jit(u, chi, p, n, lo, hi):
    # S(lam) = sum_x u[x] * chi[x - lam]
    q = chi.shape[0]
    out = np.zeros(hi - lo, dtype=np.int64)
    if n == 1:
        # x - lam walks chi in two contiguous runs
        for li in range(hi - lo):
            lam = lo + li
            acc = 0
            for x in range(lam, q):
                acc += np.int32(u[x]) * np.int32(chi[x - lam])
            for x in range(lam):
                acc += np.int32(u[x]) * np.int32(chi[x - lam + q])
            out[li] = acc
        return out
    # x = a + P*b with P = p^k: subtraction splits into a table over the k
    # low digits and one over the n - k high digits
    k = (n + 1) // 2
    big_p = p**k
    blocks = q // big_p
    low = np.empty(big_p, dtype=np.int64)
    high = np.empty(blocks, dtype=np.int64)
    for li in range(hi - lo):
        lam = lo + li
        llow = lam % big_p
        lhigh = lam // big_p
        for a in range(big_p):
            low[a] = _fsub_digits(a, llow, p, k)
        for b in range(blocks):
            high[b] = _fsub_digits(b, lhigh, p, n - k) * big_p
        acc = 0
        for b in range(blocks):
            hb = high[b]
            base = b * big_p
            for a in range(big_p):
                acc += np.int32(u[base + a]) * np.int32(chi[hb + low[a]])
        out[li] = acc
    return out


@njit(cache=True, nogil=True)
def _quartic_buckets_jit(sq, fourth, log, exp, p, n):
    # every point with s2 != 0 lies on exactly one member C_c, c = s1/s2,
    # of the pencil s1 = c*s2; points with s1 = s2 = 0 lie on all of them
    q = sq.shape[0]
    qm1 = q - 1
    buckets = np.zeros(q, dtype=np.int64)
    universal = 0
    for x in range(q):
        a = sq[x]
        ax = _fadd(fourth[x], 1, p, n)
        for y in range(q):
            b = sq[y]
            s1 = _fadd(ax, fourth[y], p, n)
            s2 = _fadd(_fadd(_fmul(a, b, log, exp, qm1), a, p, n), b, p, n)
            if s2 != 0:
                buckets[_fdiv(s1, s2, log, exp, qm1)] += 1
            elif s1 == 0:
                universal += 1
    # line z = 0, points (x : 1 : 0); (1 : 0 : 0) has s1 = 1, s2 = 0
    for x in range(q):
        s1 = _fadd(fourth[x], 1, p, n)
        s2 = sq[x]
        if s2 != 0:
            buckets[_fdiv(s1, s2, log, exp, qm1)] += 1
        elif s1 == 0:
            universal += 1
    return buckets, universal


@njit(cache=True, nogil=True)
def _quartic_count_jit(c, sq, fourth, log, exp, p, n):
    q = sq.shape[0]
    qm1 = q - 1
    count = 0
    for x in range(q):
        a = sq[x]
        ax = _fadd(fourth[x], 1, p, n)
        for y in range(q):
            b = sq[y]
            s1 = _fadd(ax, fourth[y], p, n)
            s2 = _fadd(_fadd(_fmul(a, b, log, exp, qm1), a, p, n), b, p, n)
            if s1 == _fmul(c, s2, log, exp, qm1):
                count += 1
    for x in range(q):
        if _fadd(fourth[x], 1, p, n) == _fmul(c, sq[x], log, exp, qm1):
            count += 1
    if _fmul(c, 0, log, exp, qm1) == 1:  # (1 : 0 : 0), never true
        count += 1
    return count


@njit(cache=True, nogil=True)
def _horner_all_jit(coeffs, log, exp, p, n):
    # coefficients live in F_p, so adding one only touches digit 0
    q = log.shape[0]
    qm1 = q - 1
    out = np.zeros(q, dtype=np.int64)
    if n == 1:
        # coefficient-major so the inner loop runs over a contiguous row
        for k in range(coeffs.shape[0] - 1, -1, -1):
            c = coeffs[k]
            for x in range(q):
                out[x] = (out[x] * x + c) % p
        return out
    for x in range(q):
        acc = 0
        for k in range(coeffs.shape[0] - 1, -1, -1):
            acc = _fmul(acc, x, log, exp, qm1)
            d0 = acc % p
            acc += (d0 + coeffs[k]) % p - d0
        out[x] = acc
    return out


# --- numpy kernels ------------------------------------------------------------

def _powers(p, n):
    return np.array([p**i for i in range(n)], dtype=np.int64)


def _vdigits(u, p, n):
    return (np.asarray(u, dtype=np.int64)[..., None] // _powers(p, n)) % p


def _vadd(u, v, p, n):
    if n == 1:
        return (u + v) % p
    return ((_vdigits(u, p, n) + _vdigits(v, p, n)) % p) @ _powers(p, n)


def _vsub(u, v, p, n):
    if n == 1:
        return (u - v) % p
    return ((_vdigits(u, p, n) - _vdigits(v, p, n)) % p) @ _powers(p, n)


def _vmul(u, v, log, exp, qm1):
    k = (log[u] + log[v]) % qm1
    return np.where((u == 0) | (v == 0), 0, exp[k])


def _vdiv(u, v, log, exp, qm1):
    k = (log[u] - log[v]) % qm1
    return np.where(u == 0, 0, exp[k])


def _char_correlation_np(u, chi, p, n, lo, hi):
    q = chi.shape[0]
    xs = np.arange(q, dtype=np.int64)
    u64 = u.astype(np.int64)
    out = np.zeros(hi - lo, dtype=np.int64)
    block = max(1, (1 << 21) // q)
    for start in range(lo, hi, block):
        lams = np.arange(start, min(hi, start + block), dtype=np.int64)
        idx = _vsub(xs[None, :], lams[:, None], p, n)
        out[start - lo:start - lo + lams.size] = chi[idx].astype(np.int64) @ u64
    return out


def _pencil_values_np(sq, fourth, p, n, log, exp):
    """(s1, s2) over all points of P^2 that can lie on a member of the pencil."""
    q = sq.shape[0]
    qm1 = q - 1
    for x in range(q):
        a = sq[x]
        s1 = _vadd(_vadd(fourth[x], 1, p, n), fourth, p, n)
        s2 = _vadd(_vadd(_vmul(np.full(q, a), sq, log, exp, qm1), a, p, n), sq, p, n)
        yield s1, s2
    yield _vadd(fourth, 1, p, n), sq


def _quartic_buckets_np(sq, fourth, log, exp, p, n):
    q = sq.shape[0]
    qm1 = q - 1
    buckets = np.zeros(q, dtype=np.int64)
    universal = 0
    for s1, s2 in _pencil_values_np(sq, fourth, p, n, log, exp):
        on = s2 != 0
        c = _vdiv(s1[on], s2[on], log, exp, qm1)
        buckets += np.bincount(c, minlength=q)
        universal += int(np.count_nonzero(s1[~on] == 0))
    return buckets, universal


def _quartic_count_np(c, sq, fourth, log, exp, p, n):
    q = sq.shape[0]
    qm1 = q - 1
    count = 0
    for s1, s2 in _pencil_values_np(sq, fourth, p, n, log, exp):
        count += int(np.count_nonzero(s1 == _vmul(np.full(q, c), s2, log, exp, qm1)))
    return count


def _horner_all_np(coeffs, log, exp, p, n):
    q = log.shape[0]
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    if n == 1:
        for k in range(len(coeffs) - 1, -1, -1):
            acc = (acc * xs + int(coeffs[k])) % p
        return acc
    for k in range(len(coeffs) - 1, -1, -1):
        acc = _vmul(acc, xs, log, exp, q - 1)
        d0 = acc % p
        acc = acc - d0 + (d0 + int(coeffs[k])) % p
    return acc


# --- dispatch -------------------------------------------------------------------

_IMPL = {
    "numba": {
        "char_correlation": _char_correlation_jit,
        "quartic_buckets": _quartic_buckets_jit,
        "quartic_count": _quartic_count_jit,
        "horner_all": _horner_all_jit,
    },
    "numpy": {
        "char_correlation": _char_correlation_np,
        "quartic_buckets": _quartic_buckets_np,
        "quartic_count": _quartic_count_np,
        "horner_all": _horner_all_np,
    },
}


def kernel(name, backend=None):
    impls = _IMPL[backend or BACKEND]
    return impls[name]


def char_correlation(u, chi, p, n, lo, hi, backend=None):
    """sum_x u[x] * chi[x - lam] for every lam index in [lo, hi)."""
    return kernel("char_correlation", backend)(u, chi, p, n, lo, hi)


def quartic_buckets(sq, fourth, log, exp, p, n, backend=None):
    """Projective points of the pencil s1 = c*s2, bucketed by c.

    Returns (buckets, universal): the curve for c has buckets[c] + universal
    points.
    """
    buckets, universal = kernel("quartic_buckets", backend)(sq, fourth, log, exp, p, n)
    return buckets, int(universal)


def quartic_count(c, sq, fourth, log, exp, p, n, backend=None):
    return int(kernel("quartic_count", backend)(c, sq, fourth, log, exp, p, n))


def horner_all(coeffs, log, exp, p, n, backend=None):
    """Evaluate a polynomial with F_p coefficients at every element of F_q."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    return kernel("horner_all", backend)(coeffs, log, exp, p, n)
