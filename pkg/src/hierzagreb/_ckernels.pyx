# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_pykernels`` function for function."""

from array import array

from libc.stdlib cimport calloc, free

cdef extern from *:
    bint add_ovf "__builtin_saddll_overflow"(long long a, long long b, long long *res) nogil
    bint mul_ovf "__builtin_smulll_overflow"(long long a, long long b, long long *res) nogil


cdef inline int _raise_overflow() except -1:
    raise OverflowError("index value exceeds the signed 64-bit range")


cdef object _zeros(Py_ssize_t n):
    return array("q", bytes(8 * n))


def degrees(Py_ssize_t n, const long long[:] us, const long long[:] vs):
    deg = _zeros(n)
    cdef long long[:] d = deg
    cdef Py_ssize_t i
    for i in range(us.shape[0]):
        d[us[i]] += 1
        d[vs[i]] += 1
    return deg


def degree_indices(Py_ssize_t n, const long long[:] us, const long long[:] vs):
    cdef long long[:] deg = degrees(n, us, vs)
    cdef long long m1 = 0, m2 = 0, em1 = 0, em2 = 0
    cdef long long du, dv, de, sq, t
    cdef Py_ssize_t i, m = us.shape[0]
    cdef long long *s1 = <long long *>calloc(n + 1, sizeof(long long))
    cdef long long *s2 = <long long *>calloc(n + 1, sizeof(long long))
    if s1 == NULL or s2 == NULL:
        free(s1)
        free(s2)
        raise MemoryError()
    try:
        for i in range(n):
            if mul_ovf(deg[i], deg[i], &t) or add_ovf(m1, t, &m1):
                _raise_overflow()
        for i in range(m):
            du = deg[us[i]]
            dv = deg[vs[i]]
            if mul_ovf(du, dv, &t) or add_ovf(m2, t, &m2):
                _raise_overflow()
            de = du + dv - 2
            if mul_ovf(de, de, &sq) or add_ovf(em1, sq, &em1):
                _raise_overflow()
            s1[us[i]] += de
            s1[vs[i]] += de
            if add_ovf(s2[us[i]], sq, &s2[us[i]]) or add_ovf(s2[vs[i]], sq, &s2[vs[i]]):
                _raise_overflow()
        for i in range(n):
            if mul_ovf(s1[i], s1[i], &t):
                _raise_overflow()
            if add_ovf(em2, (t - s2[i]) // 2, &em2):
                _raise_overflow()
    finally:
        free(s1)
        free(s2)
    return m1, m2, em1, em2


def subset_sums(Py_ssize_t n, const long long[:] us, const long long[:] vs, const unsigned char[:] in_u):
    cdef long long[:] deg = degrees(n, us, vs)
    cdef long long sigma1 = 0, sigma2 = 0, epsilon = 0, nu = 0
    cdef Py_ssize_t i, x, y
    for x in range(n):
        if in_u[x]:
            sigma1 += deg[x]
            sigma2 += deg[x] * deg[x]
    for i in range(us.shape[0]):
        x = us[i]
        y = vs[i]
        if in_u[x]:
            nu += deg[y]
            if in_u[y]:
                epsilon += 1
        if in_u[y]:
            nu += deg[x]
    return sigma1, sigma2, epsilon, nu


def hier_edges(Py_ssize_t n_g, const long long[:] g_us, const long long[:] g_vs,
               Py_ssize_t n_h, const long long[:] h_us, const long long[:] h_vs,
               const unsigned char[:] in_u):
    # edges arrive canonical (u < v, lexicographic), so CSR rows of the
    # forward neighbours come out sorted without an explicit sort
    cdef Py_ssize_t mg = g_us.shape[0], mh = h_us.shape[0]
    cdef Py_ssize_t i, a, b, x, k, pos = 0, rows = 0
    for x in range(n_h):
        if in_u[x]:
            rows += 1
    cdef Py_ssize_t total = n_g * mh + rows * mg
    out_u = _zeros(total)
    out_v = _zeros(total)
    cdef long long[:] ou = out_u
    cdef long long[:] ov = out_v
    cdef long long *g_ptr = <long long *>calloc(n_g + 1, sizeof(long long))
    cdef long long *h_ptr = <long long *>calloc(n_h + 1, sizeof(long long))
    if g_ptr == NULL or h_ptr == NULL:
        free(g_ptr)
        free(h_ptr)
        raise MemoryError()
    try:
        for i in range(mg):
            g_ptr[g_us[i] + 1] += 1
        for a in range(n_g):
            g_ptr[a + 1] += g_ptr[a]
        for i in range(mh):
            h_ptr[h_us[i] + 1] += 1
        for x in range(n_h):
            h_ptr[x + 1] += h_ptr[x]
        for a in range(n_g):
            for x in range(n_h):
                for k in range(h_ptr[x], h_ptr[x + 1]):
                    ou[pos] = a * n_h + x
                    ov[pos] = a * n_h + h_vs[k]
                    pos += 1
                if in_u[x]:
                    for k in range(g_ptr[a], g_ptr[a + 1]):
                        ou[pos] = a * n_h + x
                        ov[pos] = g_vs[k] * n_h + x
                        pos += 1
    finally:
        free(g_ptr)
        free(h_ptr)
    return out_u, out_v
