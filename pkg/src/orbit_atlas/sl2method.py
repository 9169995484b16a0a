"""Classification pipeline through sl2-triples: complex characteristics,
homogeneity, weight-2 spaces, the real Cayley equations [e, e^T] = h and
their rational solutions, and centralizer reduction.

The complex nilpotent orbits of so(8, C) are indexed by the partitions
of 8 in which even parts have even multiplicity, the two very even
partitions [2^4] and [4^4... [4,4] each splitting into two classes.
Their characteristics are assembled from the eigenvalue strings
(k-1, k-3, ..., 1-k) of the parts and land in the split Cartan
subalgebra; acting with the Weyl group and reducing modulo W0 gives the
candidate homogeneous characteristics of the symmetric pair.
"""

import itertools

from .scalar import QQ, ZERO, ONE, rat_sqrt, MultiPoly
from . import kernels
from .liealg import (
    LieElement, ROOTS, ROOT_INDEX, bracket, theta, in_g1, is_nilpotent,
    g1_basis, G1_ROOTS, Sl2Triple, verify_cayley, make_cayley_from_e, DIM,
)
from .rootsys import full_weyl, weyl_w0, gamma_label, alpha_label


# partitions of 8 with even parts of even multiplicity; None marks the
# very even ones that split into two classes (distinguished by the sign
# of the last Cartan coordinate)
_D4_PARTITIONS = (
    (2, 2, 1, 1, 1, 1),
    (2, 2, 2, 2),
    (3, 1, 1, 1, 1, 1),
    (3, 2, 2, 1),
    (3, 3, 1, 1),
    (4, 4),
    (5, 1, 1, 1),
    (5, 3),
    (7, 1),
)
_VERY_EVEN = ((2, 2, 2, 2), (4, 4))


def complex_adjoint_characteristics():
    """Characteristics of the nonzero nilpotent orbits of g^c (11 of
    them), as elements of the split Cartan subalgebra."""
    out = []
    for part in _D4_PARTITIONS:
        eigs = []
        for k in part:
            eigs.extend(range(k - 1, -k, -2))
        pos = sorted((e for e in eigs if e > 0), reverse=True)
        zeros = eigs.count(0)
        t = pos + [0] * (zeros // 2)
        if len(t) != 4:
            raise AssertionError("bad eigenvalue pairing for %s" % (part,))
        out.append((part, tuple(t)))
        if part in _VERY_EVEN:
            flipped = tuple(t[:3]) + (-t[3],)
            out.append((part, flipped))
    if len(out) != 11:
        raise AssertionError("expected 11 nonzero complex adjoint orbits")
    return out


def weight2_space(h):
    """Basis of g1(2) = {x in g1 : [h, x] = 2x} for h in the split
    Cartan (exact eigenspace; the basis is root vectors)."""
    t = h.cartan_part()
    if any(h.coords[4:]):
        raise ValueError("h must lie in the split Cartan subalgebra")
    basis = []
    for beta in G1_ROOTS:
        if sum(QQ(b) * x for b, x in zip(beta, t)) == 2:
            basis.append(LieElement.root_vector(beta))
    return basis


def weight_space_dims(h):
    """dim g1(k) for each integer eigenvalue k of ad h on g1."""
    t = h.cartan_part()
    dims = {}
    for beta in G1_ROOTS:
        k = sum(QQ(b) * x for b, x in zip(beta, t))
        dims[k] = dims.get(k, 0) + 1
    return dims


def homogeneity_test(h, trials=32, seed=1):
    """Whether h is a homogeneous characteristic: for sampled rational
    e in g1(2), test solvability of [e, y] = h with y in g1(-2).

    Solvability at a generic point decides the question; the sample
    budget guards against unlucky degenerate picks."""
    u = weight2_space(h)
    if not u:
        return False
    w = _weight_space(h, -2)
    if not w:
        return False
    state = seed & 0x7FFFFFFF
    best = False
    for _ in range(trials):
        coeffs = []
        for _ in range(len(u)):
            state = (1103515245 * state + 12345) % (1 << 31)
            coeffs.append(QQ((state >> 7) % 19 - 9))
        e = LieElement.zero()
        for c, b in zip(coeffs, u):
            if c:
                e = e + b.scale(c)
        if not e:
            continue
        rows = []
        rhs = []
        cols = [bracket(e, b).coords for b in w]
        for i in range(DIM):
            rows.append([cols[j][i] for j in range(len(w))])
            rhs.append(h.coords[i])
        if kernels.solve_linear(rows, rhs, ONE) is not None:
            best = True
            break
    return best


def _weight_space(h, k):
    t = h.cartan_part()
    out = []
    for beta in G1_ROOTS:
        if sum(QQ(b) * x for b, x in zip(beta, t)) == k:
            out.append(LieElement.root_vector(beta))
    return out


class CharacteristicSet:
    """Candidate homogeneous characteristics: the W-orbit union of the
    adjoint characteristics, reduced to W0-orbit representatives."""

    def __init__(self, reps, homogeneous_flags):
        self.reps = tuple(reps)
        self.homogeneous_flags = tuple(homogeneous_flags)

    def homogeneous(self):
        return [h for h, fl in zip(self.reps, self.homogeneous_flags) if fl]


def complex_characteristics(seed=1):
    """W0-classes of candidate characteristics with homogeneity
    verdicts.  The homogeneous ones biject with the nonzero nilpotent
    G0^c-orbits in g1^c."""
    w = full_weyl()
    w0 = weyl_w0()
    seen = set()
    reps = []
    for _part, t in complex_adjoint_characteristics():
        for g in w:
            v = g.apply(t)
            if v in seen:
                continue
            orbit = {u.apply(v) for u in w0}
            seen.update(orbit)
            # canonical W0-representative: all four evaluations >= 0,
            # realized as the lexicographically largest orbit member
            reps.append(max(orbit))
    reps.sort(reverse=True)
    hs = [LieElement.cartan(t) for t in reps]
    flags = [homogeneity_test(h, seed=seed) for h in hs]
    return CharacteristicSet(hs, flags)


def cayley_equations(h, basis=None):
    """Polynomial system in T1..Td whose zeros are the e = sum T_i u_i
    with (h, e, -theta(e)) a real Cayley triple."""
    if basis is None:
        basis = weight2_space(h)
    d = len(basis)
    names = tuple("T%d" % (i + 1) for i in range(d))
    polys = {}
    zero_e = [0] * d
    # [e, e^T] - h = sum_i sum_j T_i T_j [u_i, u_j^T] - h
    pair = {}
    for i in range(d):
        for j in range(d):
            ui = basis[i]
            ujt = theta(basis[j]).scale(QQ(-1))
            pair[(i, j)] = bracket(ui, ujt)
    eqs = []
    for coord in range(DIM):
        terms = {}
        for (i, j), br in pair.items():
            c = br.coords[coord]
            if c:
                e = list(zero_e)
                e[i] += 1
                e[j] += 1
                e = tuple(e)
                terms[e] = terms.get(e, ZERO) + c
        hc = h.coords[coord]
        if hc:
            terms[tuple(zero_e)] = terms.get(tuple(zero_e), ZERO) - hc
        p = MultiPoly(names, terms)
        if p:
            eqs.append(p)
    return names, eqs


_DEFAULT_POOL = (QQ(1), QQ(-1), QQ(2), QQ(-2), QQ(1, 2), QQ(-1, 2),
                 QQ(3), QQ(-3))


def cayley_points(h, basis=None, max_support=None, pool=_DEFAULT_POOL):
    """Rational points of the Cayley variety of h, by support
    enumeration with rescaling.

    A candidate e0 with [e0, e0^T] = c^2 h for rational c > 0 rescales to
    the exact solution e0/c, so the grid only needs coefficient patterns
    up to a global scalar (first nonzero coefficient fixed to 1)."""
    if basis is None:
        basis = weight2_space(h)
    d = len(basis)
    if max_support is None:
        max_support = min(d, 5)
    found = []
    seen = set()
    for k in range(1, max_support + 1):
        for supp in itertools.combinations(range(d), k):
            for rest in itertools.product(pool, repeat=k - 1):
                coeffs = (ONE,) + rest
                e0 = LieElement.zero()
                for idx, c in zip(supp, coeffs):
                    e0 = e0 + basis[idx].scale(c)
                br = bracket(e0, theta(e0).scale(QQ(-1)))
                c2 = _proportionality(br, h)
                if c2 is None or c2 <= 0:
                    continue
                c = rat_sqrt(c2)
                if c is None:
                    continue
                e = e0.scale(ONE / c)
                key = e.coords
                if key in seen:
                    continue
                seen.add(key)
                found.append(e)
    return found


def _proportionality(x, y):
    """c with x = c y (y nonzero), else None."""
    c = None
    for a, b in zip(x.coords, y.coords):
        if b:
            c = a / b
            break
        if a:
            return None
    if c is None:
        return None
    for a, b in zip(x.coords, y.coords):
        if a != c * b:
            return None
    return c


def cayley_points_ext(h, basis=None, grid=None):
    """Cayley-variety points over real quadratic towers for
    characteristics without rational points.

    The system [e, e^T] = h splits into a part linear in s_i = T_i^2 and
    bilinear cross equations.  Rational points of the linear part are
    enumerated over a small grid of its free parameters; each point
    fixes T_i = eps_i sqrt(s_i) up to signs, and the sign vectors are
    filtered through the cross equations with exact tower arithmetic."""
    from .scalar import make_sqrt

    if basis is None:
        basis = weight2_space(h)
    d = len(basis)
    if grid is None:
        grid = [QQ(0), QQ(1), QQ(2), QQ(3), QQ(4), QQ(1, 2), QQ(9, 4),
                QQ(5), QQ(6), QQ(8), QQ(9), QQ(10), QQ(25, 4), QQ(12)]
    names, eqs = cayley_equations(h, basis)
    diag_rows = []
    diag_rhs = []
    cross = []
    for p in eqs:
        is_diag = True
        row = [ZERO] * d
        rhs = ZERO
        for e, c in p.terms.items():
            tot = sum(e)
            if tot == 0:
                rhs = rhs - c
            elif tot == 2 and 2 in e:
                row[e.index(2)] = c
            else:
                is_diag = False
                break
        if is_diag:
            diag_rows.append(row)
            diag_rhs.append(rhs)
        else:
            cross.append(p)
    # solve the diagonal system for s = T^2; enumerate the affine space
    aug = [diag_rows[i] + [diag_rhs[i]] for i in range(len(diag_rows))]
    work = [row[:] for row in aug]
    pivots = kernels.rref(work)
    if d in pivots:
        return []
    pivcols = [c for c in pivots if c < d]
    freecols = [c for c in range(d) if c not in pivcols]
    out = []
    seen = set()
    for vals in itertools.product(grid, repeat=len(freecols)):
        s = [None] * d
        for c, v in zip(freecols, vals):
            s[c] = v
        ok = True
        for r, pc in enumerate(pivcols):
            acc = work[r][d]
            for fc in freecols:
                if work[r][fc]:
                    acc = acc - work[r][fc] * s[fc]
            s[pc] = acc
        if any(x < 0 for x in s):
            continue
        roots = [make_sqrt(x) for x in s]
        # sign patterns; first nonzero coefficient fixed positive
        nz = [i for i in range(d) if s[i]]
        if not nz:
            continue
        for signs in itertools.product((1, -1), repeat=max(len(nz) - 1, 0)):
            tvals = [ZERO] * d
            tvals[nz[0]] = roots[nz[0]]
            for i, sg in zip(nz[1:], signs):
                tvals[i] = roots[i] if sg > 0 else -roots[i]
            good = True
            for p in cross:
                acc = ZERO
                for e, c in p.terms.items():
                    term = c
                    for i, k in enumerate(e):
                        for _ in range(k):
                            term = term * tvals[i]
                    acc = acc + term
                if acc:
                    good = False
                    break
            if not good:
                continue
            e = LieElement.zero()
            for i in range(d):
                if tvals[i]:
                    e = e + basis[i].scale(tvals[i])
            key = e.coords
            if key in seen:
                continue
            seen.add(key)
            out.append(e)
    return out


def centralizer_reduce(h, solutions, moves=None):
    """Collapse Cayley solutions under the compact part of Z(h) using
    rational circle points; returns (representatives, move log).

    This is a best-effort reduction: elements are merged when an applied
    move maps one exactly onto another."""
    from .tensormod import sigma_inverse, sigma, act, GroupElement4

    reps = []
    log = []
    seenv = {}
    circle = [(QQ(1), QQ(0)), (QQ(0), QQ(1)), (QQ(3, 5), QQ(4, 5)),
              (QQ(-3, 5), QQ(4, 5)), (QQ(4, 5), QQ(3, 5)), (QQ(0), QQ(-1)),
              (QQ(5, 13), QQ(12, 13))]
    gens = []
    for k in range(4):
        for (c, s) in circle:
            if (c, s) == (QQ(1), QQ(0)):
                continue
            gens.append((k, c, s))
    for e in solutions:
        v = sigma_inverse(e)
        canon = None
        for (k, c, s) in gens:
            g = GroupElement4.rotation(k, c, s)
            img = act(g, v)
            key = sigma(img).coords
            if key in seenv:
                canon = seenv[key]
                log.append(("rot", k, str(c), str(s)))
                break
        if canon is None:
            seenv[sigma(v).coords] = e
            reps.append(e)
    return reps, log
