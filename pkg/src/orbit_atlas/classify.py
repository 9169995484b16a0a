"""Tensor classifiers, orbit fingerprints, delta-labels and the orbit
table assembly (including the coarser identification that merges
delta-pairs of the high orbits).

The quadratic classifiers T(i,j) are the six 4x4 symmetric matrices
obtained from v x v by epsilon-contracting the two factors outside
{i, j} and symmetrizing the remaining couples; their exact signatures
are orbit invariants.  The sixteen quartic 27x27 classifiers are built
the same way from Pauli contractions and serve as tie-breakers.
"""

import itertools

from .scalar import (
    QQ, ZERO, ONE, GaussianRational, gauss, symmetric_signature, Signature,
)
from .liealg import (
    LieElement, bracket, is_nilpotent, in_g1, g0_basis, centralizer,
    complete_to_sl2, make_cayley_from_e, Sl2Triple, verify_cayley,
)
from .rootsys import alpha_label, gamma_label, beta_label, LabelVector
from .tensormod import (
    TensorElement, SIGN_TUPLES, sigma, sigma_inverse, act, GroupElement4,
    parse_sign_expr,
)

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

EPS = ((ZERO, ONE), (-ONE, ZERO))

# Pauli matrices over Q(i)
_S1 = ((gauss(0), gauss(1)), (gauss(1), gauss(0)))
_S2 = ((gauss(0), GaussianRational(0, -1)), (GaussianRational(0, 1), gauss(0)))
_S3 = ((gauss(1), gauss(0)), (gauss(0), gauss(-1)))
PAULI = (_S1, _S2, _S3)


class InvariantTensors:
    """epsilon, the Pauli basis, S_{x a b} = S_{x a}^c eps_{c b}, and the
    trace form eta_{xy} = Tr(S_x S_y) with its inverse."""

    def __init__(self):
        self.epsilon = EPS
        self.pauli = PAULI
        self.s_low = tuple(
            tuple(
                tuple(
                    sum((PAULI[x][a][c] * gauss(EPS[c][b]) for c in range(2)),
                        gauss(0))
                    for b in range(2))
                for a in range(2))
            for x in range(3))
        eta = [[gauss(0)] * 3 for _ in range(3)]
        for x in range(3):
            for y in range(3):
                eta[x][y] = sum(
                    (PAULI[x][a][b] * PAULI[y][b][a]
                     for a in range(2) for b in range(2)), gauss(0))
        self.eta = tuple(tuple(row) for row in eta)
        inv = [[gauss(0)] * 3 for _ in range(3)]
        for x in range(3):
            if not self.eta[x][x]:
                raise AssertionError("eta must be diagonal nonzero")
            inv[x][x] = gauss(1) / self.eta[x][x]
        self.eta_inv = tuple(tuple(row) for row in inv)


_INV = None


def invariant_tensors():
    global _INV
    if _INV is None:
        _INV = InvariantTensors()
    return _INV


def _components(v):
    """v as a map {0,1}^4 -> scalar (index 0 = '+'); accepts a
    TensorElement or a raw tuple -> coefficient mapping."""
    src = v.coeffs if isinstance(v, TensorElement) else v
    comp = {}
    for t, c in src.items():
        comp[tuple(0 if s > 0 else 1 for s in t)] = c
    return comp


COMPOSITE_INDEX = ((0, 0), (0, 1), (1, 0), (1, 1))


def quadratic_classifier(v, pair):
    """The 4x4 symmetric matrix T(i,j)(v) for a factor pair i < j, with
    composite row index (alpha_i, alpha_j) in the order
    ((1,1),(1,2),(2,1),(2,2))."""
    i, j = pair
    if i == j:
        raise ValueError("factor pair must be distinct")
    if not (1 <= i < j <= 4):
        raise ValueError("pair must satisfy 1 <= i < j <= 4")
    i -= 1
    j -= 1
    k, l = [m for m in range(4) if m not in (i, j)]
    comp = _components(v)

    def slot(ai, aj, ak, al):
        idx = [0] * 4
        idx[i], idx[j], idx[k], idx[l] = ai, aj, ak, al
        return comp.get(tuple(idx), ZERO)

    def raw(ai, aj, bi, bj):
        acc = ZERO
        for ak in range(2):
            for bk in range(2):
                ek = EPS[ak][bk]
                if not ek:
                    continue
                for al in range(2):
                    for bl in range(2):
                        el = EPS[al][bl]
                        if not el:
                            continue
                        acc = acc + slot(ai, aj, ak, al) * slot(bi, bj, bk, bl) * ek * el
        return acc

    half = QQ(1, 2)
    out = [[ZERO] * 4 for _ in range(4)]
    for r, (ai, aj) in enumerate(COMPOSITE_INDEX):
        for c, (bi, bj) in enumerate(COMPOSITE_INDEX):
            # symmetrize the couple (a_i, b_i) and the couple (a_j, b_j)
            val = (raw(ai, aj, bi, bj) + raw(bi, aj, ai, bj)
                   + raw(ai, bj, bi, aj) + raw(bi, bj, ai, aj)) * half * half
            out[r][c] = val
    return out


def quadratic_signatures(v):
    """The six signatures sign(T(i,j)(v)) in PAIRS order."""
    return tuple(symmetric_signature(quadratic_classifier(v, p)) for p in PAIRS)


def _pauli_tensor(v):
    """T_{x1 x2 x3 x4}(v): 3^4 components over Q(i)."""
    inv = invariant_tensors()
    comp = _components(v)
    items = list(comp.items())
    out = {}
    for xs in itertools.product(range(3), repeat=4):
        acc = gauss(0)
        for a_idx, va in items:
            for b_idx, vb in items:
                prod = gauss(va * vb)
                dead = False
                for kk in range(4):
                    s = inv.s_low[xs[kk]][a_idx[kk]][b_idx[kk]]
                    if not s:
                        dead = True
                        break
                    prod = prod * s
                if not dead:
                    acc = acc + prod
        out[xs] = acc
    return out


def quartic_classifiers(v):
    """Sixteen symmetric 27x27 rational matrices: for each factor triple
    (i,j,k) the eta-contracted quartic, projected per couple onto the
    symmetric-traceless or antisymmetric part of 3 x 3, keeping the
    projections with an even number of antisymmetrizations (the odd ones
    vanish identically)."""
    inv = invariant_tensors()
    tt = _pauli_tensor(v)
    results = {}
    triples = [t for t in itertools.combinations(range(4), 3)]
    idx27 = list(itertools.product(range(3), repeat=3))
    pos27 = {u: n for n, u in enumerate(idx27)}
    for tri in triples:
        omit = [m for m in range(4) if m not in tri][0]

        def big(xs, ys):
            a = [0] * 4
            b = [0] * 4
            for mpos, m in enumerate(tri):
                a[m] = xs[mpos]
                b[m] = ys[mpos]
            acc = gauss(0)
            for u in range(3):
                a[omit] = u
                b[omit] = u
                acc = acc + tt[tuple(a)] * tt[tuple(b)] * inv.eta_inv[u][u]
            return acc

        raw = [[big(xs, ys) for ys in idx27] for xs in idx27]
        for pattern in (("S", "S", "S"), ("S", "A", "A"),
                        ("A", "S", "A"), ("A", "A", "S")):
            mat = _project_couples(raw, idx27, pos27, pattern, inv)
            key = (tuple(m + 1 for m in tri), pattern)
            results[key] = mat
    return results


def _project_couples(raw, idx27, pos27, pattern, inv):
    cur = raw
    for slot in range(3):
        kind = pattern[slot]
        nxt = [[gauss(0)] * 27 for _ in range(27)]
        for r, xs in enumerate(idx27):
            for c, ys in enumerate(idx27):
                val = cur[r][c]
                if not val:
                    continue
                half = gauss(QQ(1, 2))
                # swap the couple (x_slot, y_slot)
                xs2 = list(xs)
                ys2 = list(ys)
                xs2[slot], ys2[slot] = ys[slot], xs[slot]
                r2 = pos27[tuple(xs2)]
                c2 = pos27[tuple(ys2)]
                if kind == "A":
                    nxt[r][c] = nxt[r][c] + val * half
                    nxt[r2][c2] = nxt[r2][c2] - val * half
                else:
                    nxt[r][c] = nxt[r][c] + val * half
                    nxt[r2][c2] = nxt[r2][c2] + val * half
        if kind == "S":
            # remove the eta-trace part of the couple
            third = gauss(QQ(1, 3))
            traced = {}
            for r, xs in enumerate(idx27):
                for c, ys in enumerate(idx27):
                    val = nxt[r][c]
                    if not val:
                        continue
                    if xs[slot] == ys[slot]:
                        rest = (tuple(x for s, x in enumerate(xs) if s != slot),
                                tuple(y for s, y in enumerate(ys) if s != slot))
                        traced[rest] = traced.get(rest, gauss(0)) + val * inv.eta_inv[xs[slot]][xs[slot]]
            for (rx, ry), trval in traced.items():
                if not trval:
                    continue
                for u in range(3):
                    xs2 = list(rx)
                    xs2.insert(slot, u)
                    ys2 = list(ry)
                    ys2.insert(slot, u)
                    r2 = pos27[tuple(xs2)]
                    c2 = pos27[tuple(ys2)]
                    nxt[r2][c2] = nxt[r2][c2] - trval * third * inv.eta[u][u]
        cur = nxt
    # entries must be real; return a rational matrix
    out = [[ZERO] * 27 for _ in range(27)]
    for r in range(27):
        for c in range(27):
            val = cur[r][c]
            if isinstance(val, GaussianRational):
                if val.im:
                    raise AssertionError("quartic classifier entry not real")
                out[r][c] = val.re
            else:
                out[r][c] = val
    return out


def quartic_signature_summary(v):
    """Signatures of the sixteen quartic classifiers, as a sorted tuple
    of ((triple, pattern), (n+, n-)) items."""
    mats = quartic_classifiers(v)
    out = []
    for key in sorted(mats):
        out.append((key, symmetric_signature(mats[key]).astuple()))
    return tuple(out)


class OrbitRecord:
    """One real nilpotent orbit: representative, labels, dimension and
    classifier fingerprint."""

    __slots__ = ("rep", "alpha", "gamma", "beta", "delta", "dim",
                 "signatures", "complex_class", "extra")

    def __init__(self, rep, alpha, gamma, beta, dim, signatures,
                 complex_class=None, delta=None, extra=None):
        self.rep = rep
        self.alpha = alpha
        self.gamma = gamma
        self.beta = beta
        self.delta = delta
        self.dim = dim
        self.signatures = tuple(signatures)
        self.complex_class = complex_class
        self.extra = extra

    def fingerprint_key(self):
        return (self.alpha.values, self.gamma.values, self.beta.values,
                tuple(s.astuple() for s in self.signatures))

    def group_key(self):
        return (self.alpha.values, self.gamma.values, self.beta.values)

    def __repr__(self):
        return ("OrbitRecord(%s, alpha=%s, gamma=%s, beta=%s, delta=%s, dim=%d)"
                % (self.rep.text(), self.alpha.values, self.gamma.values,
                   self.beta.values, self.delta, self.dim))


def orbit_dimension(e):
    """dim G0.e = 12 - dim z_{g0^c}(e) (the centralizer is complex but
    the system is rational, so the rational null space has the right
    dimension)."""
    z = centralizer(g0_basis(), [e])
    return 12 - len(z)
