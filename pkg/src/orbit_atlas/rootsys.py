"""D4 root system, Weyl groups, real Cartan subalgebras and the three
label families (alpha, gamma, beta) attached to nilpotent orbits.

Roots live in epsilon-coordinates: the 24 vectors +-eps_i +- eps_j.  The
full Weyl group W (order 192) consists of the signed permutations of the
four coordinates with an even number of sign changes; the Weyl group W0
of g0 (order 16) is generated by the four commuting reflections in
alpha0, alpha1, alpha3, alpha4.

beta-labels are computed from the Cayley transform h0 = i(e - f) of a
real Cayley triple: h0 lies in k^c, a sum of four sl2(C) ideals, and the
label is the tuple of exact per-ideal eigenvalue magnitudes, ordered by
the dictionary beta1 = -(alpha1+2*alpha2+alpha3+alpha4), beta2 = alpha1,
beta3 = alpha4, beta4 = alpha3.
"""

import itertools

from .scalar import QQ, ZERO, ONE, GaussianRational, gauss, I_UNIT, rat_sqrt
from . import kernels
from .liealg import (
    LieElement, ROOTS, ROOT_INDEX, ALPHA, PHI0_ROOTS, PHI1_ROOTS, DIM,
    bracket, theta, phi, pairing, _neg, Sl2Triple, verify_cayley,
    in_g0, _field_one,
)


# ---------------------------------------------------------------------------
# Weyl group elements as signed permutations of the epsilon-coordinates.
# ---------------------------------------------------------------------------

class WeylElement:
    """Signed permutation e_i -> signs[i] * e_{perm[i]} with an even
    number of sign changes."""

    __slots__ = ("perm", "signs")

    def __init__(self, perm, signs):
        self.perm = tuple(perm)
        self.signs = tuple(signs)

    @classmethod
    def identity(cls):
        return cls((0, 1, 2, 3), (1, 1, 1, 1))

    def __eq__(self, other):
        return self.perm == other.perm and self.signs == other.signs

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __lt__(self, other):
        return (self.perm, self.signs) < (other.perm, other.signs)

    def __mul__(self, other):
        """Composition self * other = apply other first."""
        perm = tuple(self.perm[other.perm[i]] for i in range(4))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(4))
        return WeylElement(perm, signs)

    def inverse(self):
        perm = [0] * 4
        signs = [1] * 4
        for i in range(4):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return WeylElement(perm, signs)

    def apply(self, v):
        """Image of an epsilon-coordinate vector."""
        out = [0] * 4
        for i in range(4):
            out[self.perm[i]] = self.signs[i] * v[i]
        return tuple(out)

    def __repr__(self):
        return "W(perm=%s, signs=%s)" % (self.perm, self.signs)


def reflection(beta):
    """s_beta as a signed permutation (beta a D4 root)."""
    nz = [i for i, c in enumerate(beta) if c]
    i, j = nz
    perm = [0, 1, 2, 3]
    signs = [1, 1, 1, 1]
    perm[i], perm[j] = j, i
    if beta[i] * beta[j] > 0:
        signs[i] = -1
        signs[j] = -1
    return WeylElement(tuple(perm), tuple(signs))


def mulclose(gens):
    """Closure of a generating set under composition."""
    els = set(gens)
    els.add(WeylElement.identity())
    frontier = list(els)
    while frontier:
        new = []
        for g in gens:
            for w in frontier:
                c = g * w
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return sorted(els)


def weyl_group(generator_roots):
    """Group generated by the reflections in the given roots, as a
    deterministically ordered list."""
    return mulclose([reflection(b) for b in generator_roots])


_W_FULL = None
_W0 = None


def full_weyl():
    global _W_FULL
    if _W_FULL is None:
        _W_FULL = weyl_group([ALPHA[1], ALPHA[2], ALPHA[3], ALPHA[4]])
    return _W_FULL


def weyl_w0():
    global _W0
    if _W0 is None:
        _W0 = weyl_group([ALPHA[0], ALPHA[1], ALPHA[3], ALPHA[4]])
    return _W0


def build_roots():
    """(Phi, Delta, Phi0, Cartan matrix) of the model."""
    delta = (ALPHA[1], ALPHA[2], ALPHA[3], ALPHA[4])
    cmat = tuple(tuple(pairing(a, b) for a in delta) for b in delta)
    return tuple(ROOTS), delta, tuple(sorted(PHI0_ROOTS)), cmat


# ---------------------------------------------------------------------------
# Label vectors.
# ---------------------------------------------------------------------------

class LabelVector:
    __slots__ = ("kind", "values")

    def __init__(self, kind, values):
        self.kind = kind
        self.values = tuple(values)

    def __eq__(self, other):
        return self.kind == other.kind and self.values == other.values

    def __hash__(self):
        return hash((self.kind, self.values))

    def __lt__(self, other):
        return (self.kind, self.values) < (other.kind, other.values)

    def __repr__(self):
        return "%s%s" % (self.kind, self.values)


def _cartan_vector(h):
    """Epsilon-coordinates of an element of the split Cartan; rejects
    elements with root-vector components."""
    if any(h.coords[4:]):
        raise ValueError("element is not in the split Cartan subalgebra")
    return tuple(QQ(c) for c in h.coords[:4])


def alpha_label(h):
    """Weighted-Dynkin-diagram labels: evaluations of the simple roots on
    the unique W-dominant conjugate of h."""
    t = _cartan_vector(h)
    mags = sorted((abs(c) for c in t), reverse=True)
    negs = sum(1 for c in t if c < 0)
    if negs % 2 and mags[3] > 0:
        # even sign changes only: a leftover minus lands on the smallest
        mags[3] = -mags[3]
    # beware: parity absorbs into any zero coordinate
    t1, t2, t3, t4 = mags
    vals = (t1 - t2, t2 - t3, t3 + t4, t3 - t4)
    return LabelVector("alpha", vals)


# print order of the gamma tuple: evaluations against (alpha1, alpha0,
# alpha4, alpha3), the unique assignment under which every Table I row
# reproduces its printed gamma-label and the printed solutions of the
# gamma(3;1) class are weight-2 vectors of its characteristic (see
# tests/test_labels.py for the calibration evidence).
GAMMA_ROOT_ORDER = (1, 0, 4, 3)


def gamma_label(h):
    """W0-dominant evaluation of the simple roots of g0 on h."""
    t = _cartan_vector(h)
    vals = []
    for i in GAMMA_ROOT_ORDER:
        a = ALPHA[i]
        vals.append(abs(sum(QQ(c) * x for c, x in zip(a, t))))
    return LabelVector("gamma", tuple(vals))


def w_dominant_representative(h, group):
    """The group-translate of h that is lexicographically largest in
    epsilon-coordinates among all translates with the dominance pattern;
    used only where a concrete representative is needed."""
    t = _cartan_vector(h)
    best = max(w.apply(t) for w in group)
    return LieElement.cartan(best)


# ---------------------------------------------------------------------------
# Cayley transform and beta-labels.
# ---------------------------------------------------------------------------

def cayley_transform(t):
    """Kostant-Sekiguchi Cayley transform of a real Cayley triple:
    h0 = i(e-f), e0 = (-i e - i f + h)/2, f0 = (i e + i f + h)/2.

    Returns an Sl2Triple over Q(i) that is homogeneous for the
    (k^c, p^c) grading."""
    if not verify_cayley(t):
        raise ValueError("cayley_transform requires a real Cayley triple")
    e = t.e.complexify()
    f = t.f.complexify()
    h = t.h.complexify()
    half = gauss(QQ(1, 2))
    ihalf = I_UNIT * half
    h0 = (e - f).scale(I_UNIT)
    e0 = (e + f).scale(-ihalf) + h.scale(half)
    f0 = (e + f).scale(ihalf) + h.scale(half)
    out = Sl2Triple(h0, e0, f0)
    if not out.verify():
        raise AssertionError("Cayley transform broke the sl2 relations")
    if theta(h0) != h0:
        raise AssertionError("h0 must lie in k^c")
    if theta(e0) != -e0 or theta(f0) != -f0:
        raise AssertionError("e0, f0 must lie in p^c")
    return out


class _KIdeals:
    """The four sl2(C) ideals of k^c with normalized sl2 bases, plus the
    projection machinery used for beta-labels.

    Each ideal is tagged with the label of its root pair under the
    eigenvalue-matching identification tau_i = i(e_i - f_i) <-> h_i;
    the labels come out as +-{eps1+eps3, eps1-eps3, eps2+eps4,
    eps2-eps4}.  BETA_IDEAL_ORDER fixes the print order of the
    beta-tuple; it is a calibration constant, pinned by the intact
    Table I rows and the signature data (tests/test_labels.py)."""

    BETA_IDEAL_ORDER = ((1, 0, -1, 0), (1, 0, 1, 0), (0, 1, 0, -1), (0, 1, 0, 1))

    def __init__(self):
        gens = {}
        for i in (0, 1, 3, 4):
            ei = LieElement.root_vector(ALPHA[i]).complexify()
            fi = LieElement.root_vector(_neg(ALPHA[i])).complexify()
            gens[i] = (ei - fi).scale(I_UNIT)
        self.tau = gens  # basis of the compact Cartan t^c of k^c
        kbasis = []
        for beta in ROOTS:
            if beta > _neg(beta):
                x = LieElement.root_vector(beta).complexify()
                y = LieElement.root_vector(_neg(beta)).complexify()
                kbasis.append(x - y)
        self.k_basis = kbasis  # 12-dimensional
        self._split_ideals()

    def _split_ideals(self):
        one = gauss(1)
        order = (0, 1, 3, 4)
        spaces = [list(self.k_basis)]
        labels = [()]
        for i in order:
            op = self.tau[i]
            nspaces, nlabels = [], []
            for sp, lb in zip(spaces, labels):
                for lam in (-2, -1, 0, 1, 2):
                    sub = _eig_subspace(sp, op, gauss(lam))
                    if sub:
                        nspaces.append(sub)
                        nlabels.append(lb + (lam,))
            spaces, labels = nspaces, nlabels
        pairs = {}
        for sp, lb in zip(spaces, labels):
            if lb == (0, 0, 0, 0):
                continue
            if len(sp) != 1:
                raise AssertionError("k^c root space is not a line")
            pairs[lb] = sp[0]
        if len(pairs) != 8:
            raise AssertionError("k^c must have 8 roots")
        # match each eigenvalue tuple with a D4 root label
        ideals = {}
        for lb, vec in pairs.items():
            a0, a1, a3, a4 = lb
            b1 = QQ(a0 + a1, 2)
            b2 = QQ(a0 - a1, 2)
            b3 = QQ(a3 + a4, 2)
            b4 = QQ(a3 - a4, 2)
            beta = tuple(int(x) for x in (b1, b2, b3, b4))
            if tuple(QQ(x) for x in beta) != (b1, b2, b3, b4):
                raise AssertionError("k^c root tuple is not integral")
            if beta not in ROOT_INDEX:
                raise AssertionError("k^c root %s is not a D4 root" % (beta,))
            positive = beta > _neg(beta)
            label = beta if positive else _neg(beta)
            ideals.setdefault(label, {})["X" if positive else "Y"] = (lb, vec)
        self.ideal = {}
        for label, d in ideals.items():
            (lbx, x), (lby, y) = d["X"], d["Y"]
            hh = bracket(x, y)
            # eigenvalue of ad(hh) on x, as a scalar
            hx = bracket(hh, x)
            c = _line_ratio(hx, x)
            if not c:
                raise AssertionError("degenerate k^c ideal")
            y = y.scale(gauss(2) / c)
            hh = bracket(x, y)
            if _line_ratio(bracket(hh, x), x) != gauss(2):
                raise AssertionError("sl2 normalization failed")
            self.ideal[label] = (hh, x, y)
        if set(self.ideal) != set(self.BETA_IDEAL_ORDER):
            raise AssertionError("unexpected k^c ideal labels: %s"
                                 % (sorted(self.ideal),))
        # matrix whose columns are the 12 basis vectors H_j, X_j, Y_j
        cols = []
        self.col_tags = []
        for label in self.BETA_IDEAL_ORDER:
            hh, x, y = self.ideal[label]
            for tag, v in (("h", hh), ("x", x), ("y", y)):
                cols.append(v.coords)
                self.col_tags.append((label, tag))
        self.proj_rows = [[cols[j][i] + gauss(0) for j in range(12)]
                          for i in range(DIM)]

    def component_magnitudes(self, z):
        """For z in k^c: exact non-negative integer m_j = |2 lambda_j| per
        ideal, keyed by the ideal's D4-root label."""
        rows = [row[:] for row in self.proj_rows]
        b = [gauss(0) + c for c in z.coords]
        sol = kernels.solve_linear(rows, b, gauss(1))
        if sol is None:
            raise ValueError("element does not lie in k^c")
        comp = {}
        for (label, tag), c in zip(self.col_tags, sol):
            comp.setdefault(label, {})[tag] = c
        out = {}
        for label, d in comp.items():
            lam4 = gauss(4) * (d["h"] * d["h"] + d["x"] * d["y"])
            if not lam4.is_real:
                raise ValueError("ideal Casimir is not real")
            m = rat_sqrt(lam4.re)
            if m is None:
                raise ValueError("characteristic magnitude is irrational")
            out[label] = m
        return out


def _eig_subspace(space, op, lam):
    """Basis of {v in span(space) : [op, v] = lam v}."""
    if not space:
        return []
    one = gauss(1)
    cols = [(bracket(op, b) - b.scale(lam)).coords for b in space]
    rows = []
    for i in range(DIM):
        row = [gauss(0) + cols[j][i] for j in range(len(space))]
        if any(row):
            rows.append(row)
    if not rows:
        coeffs = [[one if i == j else gauss(0) for j in range(len(space))]
                  for i in range(len(space))]
    else:
        coeffs = kernels.nullspace(rows, len(space), one)
    out = []
    for cf in coeffs:
        acc = LieElement.zero()
        for c, b in zip(cf, space):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def _line_ratio(v, w):
    """Scalar c with v = c w for w != 0 on a line; error otherwise."""
    c = None
    for a, b in zip(v.coords, w.coords):
        bb = gauss(b)
        if bb:
            c = gauss(a) / bb
            break
    if c is None:
        raise ValueError("zero direction vector")
    for a, b in zip(v.coords, w.coords):
        if gauss(a) != c * gauss(b):
            raise ValueError("vectors are not proportional")
    return c


_K_IDEALS = None


def k_ideals():
    global _K_IDEALS
    if _K_IDEALS is None:
        _K_IDEALS = _KIdeals()
    return _K_IDEALS


def beta_label(t):
    """beta-label of the orbit of a real Cayley triple: the Wk-dominant
    evaluation of the simple roots of k^c on the Cayley-transformed
    characteristic h0 = i(e - f)."""
    h0 = cayley_transform(t).h
    mags = k_ideals().component_magnitudes(h0)
    vals = tuple(mags[i] for i in _KIdeals.BETA_IDEAL_ORDER)
    return LabelVector("beta", vals)


# ---------------------------------------------------------------------------
# The 16 real Cartan subalgebras of g0 and their root data.
# ---------------------------------------------------------------------------

FACTOR_ORDER = (0, 1, 3, 4)


class CartanSubalgebraReal:
    """Theta-stable Cartan subalgebra of g0, one of 16 up to conjugacy:
    per sl2-factor either the split direction h_i or the compact
    direction e_i - f_i."""

    __slots__ = ("flags", "basis")

    def __init__(self, flags):
        flags = tuple(flags)
        if len(flags) != 4 or any(fl not in ("split", "compact") for fl in flags):
            raise ValueError("flags must be four of split|compact")
        self.flags = flags
        basis = []
        for i, fl in zip(FACTOR_ORDER, flags):
            if fl == "split":
                basis.append(LieElement.coroot(ALPHA[i]))
            else:
                basis.append(LieElement.root_vector(ALPHA[i])
                             - LieElement.root_vector(_neg(ALPHA[i])))
        self.basis = tuple(basis)

    @property
    def name(self):
        return "".join("s" if fl == "split" else "c" for fl in self.flags)

    def compact_dimension(self):
        return sum(1 for fl in self.flags if fl == "compact")

    def noncompact_dimension(self):
        return 4 - self.compact_dimension()

    def __repr__(self):
        return "CartanSubalgebraReal(%s)" % (self.name,)


def all_real_cartans():
    out = []
    for flags in itertools.product(("split", "compact"), repeat=4):
        out.append(CartanSubalgebraReal(flags))
    return out


def real_weyl(cartan):
    """Real Weyl group W(h0) as the subgroup of W0 generated by the
    factor reflections of the split factors."""
    gens = [ALPHA[i] for i, fl in zip(FACTOR_ORDER, cartan.flags)
            if fl == "split"]
    if not gens:
        return [WeylElement.identity()]
    return weyl_group(gens)
