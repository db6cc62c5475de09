# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; same contract as ``f2conics._kernel_py``."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_parityll(unsigned long long) nogil

cdef enum:
    # products of masks' moduli need 2M + 2 bits
    MAX_LOG_HEIGHT = 30
    MAX_PLACES = 64


cdef inline int pdeg(uint64_t a) noexcept nogil:
    if a == 0:
        return -1
    return 63 - __builtin_clzll(a)


cdef inline uint64_t pmul(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


cdef inline uint64_t pmod(uint64_t a, uint64_t b) noexcept nogil:
    cdef int db = pdeg(b)
    cdef int da = pdeg(a)
    while da >= db:
        a ^= b << (da - db)
        da = pdeg(a)
    return a


cdef inline uint64_t pdiv(uint64_t a, uint64_t b, uint64_t* rem) noexcept nogil:
    cdef int db = pdeg(b)
    cdef int da = pdeg(a)
    cdef uint64_t q = 0
    while da >= db:
        q |= (<uint64_t>1) << (da - db)
        a ^= b << (da - db)
        da = pdeg(a)
    rem[0] = a
    return q


cdef uint64_t pinv(uint64_t a, uint64_t m) noexcept nogil:
    # extended Euclid; caller guarantees gcd(a, m) == 1
    cdef uint64_t r0 = m, r1 = pmod(a, m), s0 = 0, s1 = 1, q, r, tmp
    while r1:
        q = pdiv(r0, r1, &r)
        r0 = r1
        r1 = r
        tmp = s0 ^ pmul(q, s1)
        s0 = s1
        s1 = tmp
    return pmod(s0, m)


cdef uint64_t functional_mask(uint64_t c, uint64_t modulus, int bit, int M) noexcept nogil:
    cdef uint64_t mask = 0
    cdef uint64_t r = pmod(c, modulus)
    cdef int top = pdeg(modulus)
    cdef int i
    for i in range(M + 1):
        if (r >> bit) & 1:
            mask |= (<uint64_t>1) << i
        r <<= 1
        if pdeg(r) == top:
            r ^= modulus
    return mask


cdef int build(uint64_t d, int M, const uint64_t[:] irr,
               uint64_t* primes, int* nprimes, uint64_t* masks) noexcept nogil:
    """Factor ``d`` and fill in coprimality primes and symbol masks."""
    cdef uint64_t rem = d, p, q, r, pe, cofactor, inv_mask = 0
    cdef uint64_t fprimes[MAX_PLACES]
    cdef int fexp[MAX_PLACES]
    cdef int nf = 0, e, i, j, et = 0, nmask = 0
    cdef Py_ssize_t k
    for k in range(irr.shape[0]):
        p = irr[k]
        if 2 * pdeg(p) > pdeg(rem):
            break
        e = 0
        while True:
            q = pdiv(rem, p, &r)
            if r:
                break
            rem = q
            e += 1
        if e:
            fprimes[nf] = p
            fexp[nf] = e
            nf += 1
    if pdeg(rem) >= 1:
        fprimes[nf] = rem
        fexp[nf] = 1
        nf += 1

    for i in range(nf):
        primes[i] = fprimes[i]
        if fprimes[i] == 2:
            et = fexp[i]
    nprimes[0] = nf

    # place t
    masks[nmask] = functional_mask(pinv(d >> et, (<uint64_t>1) << (et + 1)),
                                   (<uint64_t>1) << (et + 1), et, M)
    nmask += 1
    # infinity: constant term of t^i // d
    for i in range(pdeg(d), M + 1):
        if pdiv((<uint64_t>1) << i, d, &r) & 1:
            inv_mask |= (<uint64_t>1) << i
    masks[nmask] = inv_mask
    nmask += 1
    # poles away from t
    for i in range(nf):
        p = fprimes[i]
        if p == 2:
            continue
        pe = 1
        for j in range(fexp[i]):
            pe = pmul(pe, p)
        cofactor = pdiv(d, pe, &r)
        masks[nmask] = functional_mask(pinv(pmul(2, cofactor), pe), pe,
                                       fexp[i] * pdeg(p) - 1, M)
        nmask += 1
    return nmask


def census_slice(int M, uint64_t lo, uint64_t hi, const uint64_t[:] irreducibles):
    """``(total, soluble, visited)`` over denominators ``lo <= d < hi``.

    ``irreducibles`` lists every irreducible up to degree ``M // 2`` in
    increasing order (used for trial division).

    Numerators are walked in Gray-code order: consecutive ones differ in a
    single bit ``b``, so each residue ``n mod p`` changes by ``t^b mod p``
    and each symbol parity flips iff bit ``b`` is in its mask.
    """
    if M < 0 or M > MAX_LOG_HEIGHT:
        raise ValueError(f"compiled kernel supports 0 <= M <= {MAX_LOG_HEIGHT}")
    cdef uint64_t top = (<uint64_t>1) << (M + 1)
    cdef uint64_t d, start, k, steps, sym
    cdef uint64_t primes[MAX_PLACES]
    cdef uint64_t masks[MAX_PLACES]
    cdef uint64_t res[MAX_PLACES]
    cdef uint64_t step_res[MAX_PLACES][MAX_LOG_HEIGHT + 1]
    cdef uint64_t step_sym[MAX_LOG_HEIGHT + 1]
    cdef int nprimes = 0, nmask, i, j, b
    cdef long long total = 0, soluble = 0, visited = 0
    cdef bint ok
    if lo < 1:
        lo = 1
    if hi > top:
        hi = top
    with nogil:
        d = lo
        while d < hi:
            nmask = build(d, M, irreducibles, primes, &nprimes, masks)
            for b in range(M + 1):
                step_sym[b] = 0
                for j in range(nmask):
                    step_sym[b] |= ((masks[j] >> b) & 1) << j
                for i in range(nprimes):
                    step_res[i][b] = pmod((<uint64_t>1) << b, primes[i])
            # numerators: all of degree <= M, or exactly M when deg d < M
            start = 0 if pdeg(d) == M else (<uint64_t>1) << M
            steps = top - start
            visited += steps
            sym = 0
            for j in range(nmask):
                sym |= (<uint64_t>__builtin_parityll(start & masks[j])) << j
            for i in range(nprimes):
                res[i] = pmod(start, primes[i])
            k = 0
            while True:
                ok = True
                for i in range(nprimes):
                    if res[i] == 0:
                        ok = False
                        break
                if ok:
                    total += 1
                    if sym == 0:
                        soluble += 1
                k += 1
                if k == steps:
                    break
                b = __builtin_ctzll(k)
                sym ^= step_sym[b]
                for i in range(nprimes):
                    res[i] ^= step_res[i][b]
            d += 1
    return total, soluble, visited
