"""Pure-Python kernels; the reference twin of ``_ckernels.pyx``.

Edges are passed as two parallel integer sequences ``us``/``vs``. Every
function here has the same signature and result as its compiled
counterpart.
"""

from array import array

INT64_MAX = 2**63 - 1


def _checked(value):
    if value > INT64_MAX:
        raise OverflowError("index value exceeds the signed 64-bit range")
    return value


def degrees(n, us, vs):
    deg = array("q", bytes(8 * n))
    for u, v in zip(us, vs):
        deg[u] += 1
        deg[v] += 1
    return deg


def degree_indices(n, us, vs):
    """Return ``(m1, m2, em1, em2)`` in one sweep over the edges."""
    deg = degrees(n, us, vs)
    m1 = sum(d * d for d in deg)
    m2 = 0
    em1 = 0
    # per-vertex sums of incident edge degrees and their squares
    s1 = [0] * n
    s2 = [0] * n
    for u, v in zip(us, vs):
        du = deg[u]
        dv = deg[v]
        m2 += du * dv
        de = du + dv - 2
        sq = de * de
        em1 += sq
        s1[u] += de
        s1[v] += de
        s2[u] += sq
        s2[v] += sq
    em2 = sum((a * a - b) // 2 for a, b in zip(s1, s2))
    return _checked(m1), _checked(m2), _checked(em1), _checked(em2)


def subset_sums(n, us, vs, in_u):
    """Return ``(sigma1, sigma2, epsilon, nu)`` for the vertex mask ``in_u``."""
    deg = degrees(n, us, vs)
    sigma1 = sigma2 = epsilon = nu = 0
    for x in range(n):
        if in_u[x]:
            sigma1 += deg[x]
            sigma2 += deg[x] * deg[x]
    for u, v in zip(us, vs):
        if in_u[u]:
            nu += deg[v]
            if in_u[v]:
                epsilon += 1
        if in_u[v]:
            nu += deg[u]
    return sigma1, sigma2, epsilon, nu


def hier_edges(n_g, g_us, g_vs, n_h, h_us, h_vs, in_u):
    """Edge arrays of the generalized hierarchical product.

    Vertex ``(a, x)`` gets id ``a * n_h + x``. H-edges are copied into every
    G-column; G-edges appear in the rows whose H-vertex is in ``in_u``.
    Output is sorted lexicographically with ``u < v``.
    """
    rows = [x for x in range(n_h) if in_u[x]]
    g_adj = [[] for _ in range(n_g)]
    for a, b in zip(g_us, g_vs):
        lo, hi = (a, b) if a < b else (b, a)
        g_adj[lo].append(hi)
    h_adj = [[] for _ in range(n_h)]
    for x, y in zip(h_us, h_vs):
        lo, hi = (x, y) if x < y else (y, x)
        h_adj[lo].append(hi)
    for lst in g_adj:
        lst.sort()
    for lst in h_adj:
        lst.sort()
    out_u = array("q")
    out_v = array("q")
    in_row = bytearray(n_h)
    for x in rows:
        in_row[x] = 1
    for a in range(n_g):
        base = a * n_h
        for x in range(n_h):
            src = base + x
            # neighbours with larger id: same column first (smaller ids), then G-edges
            for y in h_adj[x]:
                out_u.append(src)
                out_v.append(base + y)
            if in_row[x]:
                for b in g_adj[a]:
                    out_u.append(src)
                    out_v.append(b * n_h + x)
    return out_u, out_v
