"""Pure-Python compute kernels: exact dense linear algebra over a field
(rationals or Gaussian rationals), congruence inertia, and the
polynomial reduction inner loop used by Buchberger's algorithm.

A Cython build of the same API lives in _kernel_c.pyx; kernels.py picks
whichever is available (ORBIT_ATLAS_PURE=1 forces this module).
"""

from .scalar import QQ, ZERO

IMPLEMENTATION = "pure"


# -- dense linear algebra (entries: any exact field scalars) ---------------

def rref(m):
    """In-place reduced row echelon form; returns list of pivot columns."""
    nrows = len(m)
    if not nrows:
        return []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        d = m[r][c]
        if d != 1:
            row = m[r]
            for j in range(c, ncols):
                if row[j]:
                    row[j] = row[j] / d
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                ri, rr = m[i], m[r]
                for j in range(c, ncols):
                    if rr[j]:
                        ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def mat_rank(m):
    if not m:
        return 0
    work = [list(row) for row in m]
    return len(rref(work))


def nullspace(m, ncols, one):
    """Basis of the right null space of m (list of rows); `one` is the
    field's multiplicative identity (fixes the scalar type)."""
    zero = one - one
    work = [list(row) for row in m] if m else []
    pivots = rref(work)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            if fc < len(work[r]):
                v[pc] = -work[r][fc]
        basis.append(v)
    return basis


def solve_linear(a, b, one):
    """One solution x of a x = b (free variables set to zero), or None."""
    zero = one - one
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][ncols]
    return x


def mat_mul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = None
            for t in range(k):
                x = ai[t]
                if x:
                    y = b[t][j]
                    if y:
                        s = x * y if s is None else s + x * y
            row.append(s if s is not None else ai[0] - ai[0])
        out.append(row)
    return out


def congruence_inertia(a):
    """Inertia (n_plus, n_minus) of a symmetric matrix over an ordered
    field, by symmetric Gaussian elimination with hyperbolic 2x2 blocks
    at zero pivots.  Destroys a."""
    n = len(a)
    npos = 0
    nneg = 0
    i = 0
    while i < n:
        piv = None
        for k in range(i, n):
            if a[k][k]:
                piv = k
                break
        if piv is not None:
            if piv != i:
                a[i], a[piv] = a[piv], a[i]
                for r in range(n):
                    a[r][i], a[r][piv] = a[r][piv], a[r][i]
            d = a[i][i]
            if d > 0:
                npos += 1
            else:
                nneg += 1
            col = [a[r][i] for r in range(i + 1, n)]
            for r in range(i + 1, n):
                fr = col[r - i - 1]
                if fr:
                    f = fr / d
                    ar = a[r]
                    ai = a[i]
                    for c in range(i + 1, n):
                        if ai[c]:
                            ar[c] = ar[c] - f * ai[c]
            i += 1
        else:
            found = None
            for r in range(i, n):
                for c in range(r + 1, n):
                    if a[r][c]:
                        found = (r, c)
                        break
                if found:
                    break
            if found is None:
                break
            r0, c0 = found
            for (src, dst) in ((r0, i), (c0, i + 1)):
                if src != dst:
                    a[src], a[dst] = a[dst], a[src]
                    for r in range(n):
                        a[r][src], a[r][dst] = a[r][dst], a[r][src]
            b = a[i][i + 1]
            npos += 1
            nneg += 1
            for k in range(i + 2, n):
                for l in range(k, n):
                    v = a[k][l] - (a[i][k] * a[i + 1][l] + a[i + 1][k] * a[i][l]) / b
                    a[k][l] = v
                    a[l][k] = v
            i += 2
    return npos, nneg


# -- monomial / polynomial kernel for Buchberger ----------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def poly_normal_form(terms, gens):
    """Full normal form of a term dict modulo gens.

    gens: list of (lead_monomial, lead_coeff, terms_dict), each terms_dict
    containing the lead.  Pure lex; returns a new dict.
    """
    work = dict(terms)
    out = {}
    while work:
        lm = max(work)
        lc = work.pop(lm)
        if not lc:
            continue
        hit = None
        for g in gens:
            q = mono_div(lm, g[0])
            if q is not None:
                hit = (q, g)
                break
        if hit is None:
            out[lm] = lc
            continue
        q, (glm, glc, gterms) = hit
        f = lc / glc
        for e, c in gterms.items():
            if e == glm:
                continue
            t = tuple(x + y for x, y in zip(q, e))
            s = work.get(t, ZERO) - f * c
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return out


def poly_spoly(f_lm, f_lc, f_terms, g_lm, g_lc, g_terms):
    """S-polynomial term dict of two polynomials given by lead data."""
    lcm = mono_lcm(f_lm, g_lm)
    qf = tuple(x - y for x, y in zip(lcm, f_lm))
    qg = tuple(x - y for x, y in zip(lcm, g_lm))
    out = {}
    for e, c in f_terms.items():
        t = tuple(x + y for x, y in zip(qf, e))
        out[t] = out.get(t, ZERO) + c / f_lc
    for e, c in g_terms.items():
        t = tuple(x + y for x, y in zip(qg, e))
        s = out.get(t, ZERO) - c / g_lc
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return {e: c for e, c in out.items() if c}
