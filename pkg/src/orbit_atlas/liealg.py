"""The split Lie algebra of type D4 in its 8x8 matrix model.

Elements X satisfy X^T M = -M X with M = antidiag(I4, I4); the involution
phi(X) = D X D (D = diag(1,1,-1,-1,1,1,-1,-1)) cuts out the symmetric-pair
grading g = g0 + g1 with g0 isomorphic to four copies of sl2(R), and the
Cartan involution theta(X) = -X^T gives the compact decomposition
g = k + p.

Internally every element is a coordinate vector over the canonical basis
(d1..d4, then one vector per root, roots in a fixed order), with all
brackets done through an integer structure-constant table.  Root vectors
are normalized so every structure constant is +-1 and the Chevalley
generators of the paper model are literal basis vectors.
"""

import itertools

from .scalar import QQ, ZERO, ONE, GaussianRational, gauss
from . import kernels

DIM = 28
DIM_G0 = 12
DIM_G1 = 16


def _eps(i):
    v = [0, 0, 0, 0]
    v[i] = 1
    return tuple(v)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def build_root_list():
    """All 24 roots +-eps_i +- eps_j (i<j) of D4, in a fixed order."""
    roots = []
    for i in range(4):
        for j in range(i + 1, 4):
            pi, pj = _eps(i), _eps(j)
            roots.append(_add(pi, _neg(pj)))   # eps_i - eps_j
            roots.append(_add(pj, _neg(pi)))   # eps_j - eps_i
            roots.append(_add(pi, pj))         # eps_i + eps_j
            roots.append(_neg(_add(pi, pj)))   # -eps_i - eps_j
    return roots


ROOTS = build_root_list()
ROOT_INDEX = {r: i for i, r in enumerate(ROOTS)}

ALPHA = {
    0: (1, 1, 0, 0),    # alpha0 = eps1 + eps2 (highest root combination)
    1: (1, -1, 0, 0),   # alpha1 = eps1 - eps2
    2: (0, 1, -1, 0),   # alpha2 = eps2 - eps3 (central node)
    3: (0, 0, 1, 1),    # alpha3 = eps3 + eps4
    4: (0, 0, 1, -1),   # alpha4 = eps3 - eps4
}

SIMPLE_ROOTS = (ALPHA[1], ALPHA[2], ALPHA[3], ALPHA[4])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def pairing(beta, gamma):
    """<beta, gamma^vee> = 2(beta,gamma)/(gamma,gamma); all D4 roots have
    squared length 2, so this is just the euclidean dot product."""
    return _dot(beta, gamma)


CARTAN_MATRIX = tuple(tuple(pairing(a, b) for a in SIMPLE_ROOTS) for b in SIMPLE_ROOTS)
# CARTAN_MATRIX[i][j] = <alpha_{j+1}, alpha_{i+1}^vee> = C_{j,i} of the paper.

PHI0_ROOTS = frozenset(
    [ALPHA[0], _neg(ALPHA[0]), ALPHA[1], _neg(ALPHA[1]),
     ALPHA[3], _neg(ALPHA[3]), ALPHA[4], _neg(ALPHA[4])]
)
PHI1_ROOTS = frozenset(r for r in ROOTS if r not in PHI0_ROOTS)


def root_parity(beta):
    """0 when the root space sits in g0, 1 when in g1."""
    return 0 if beta in PHI0_ROOTS else 1


def _basis_matrix(idx):
    """8x8 integer matrix of basis element idx (0..27)."""
    m = [[0] * 8 for _ in range(8)]
    if idx < 4:
        m[idx][idx] = 1
        m[4 + idx][4 + idx] = -1
        return m
    beta = ROOTS[idx - 4]
    pos = [i for i, c in enumerate(beta) if c > 0]
    negs = [i for i, c in enumerate(beta) if c < 0]
    if len(pos) == 1 and len(negs) == 1:
        i, j = pos[0], negs[0]
        m[i][j] = 1
        m[4 + j][4 + i] = -1
    elif len(pos) == 2:
        i, j = pos
        m[i][4 + j] = 1
        m[j][4 + i] = -1
    else:
        i, j = negs
        m[4 + j][i] = 1
        m[4 + i][j] = -1
    return m


def _lead_position(idx):
    if idx < 4:
        return (idx, idx)
    beta = ROOTS[idx - 4]
    pos = [i for i, c in enumerate(beta) if c > 0]
    negs = [i for i, c in enumerate(beta) if c < 0]
    if len(pos) == 1 and len(negs) == 1:
        return (pos[0], negs[0])
    if len(pos) == 2:
        return (pos[0], 4 + pos[1])
    return (4 + negs[1], negs[0])


BASIS_MATRICES = [_basis_matrix(i) for i in range(DIM)]
LEAD_POSITIONS = [_lead_position(i) for i in range(DIM)]


def _coordinatize_int(m):
    """Coordinates of an integer matrix known to lie in g."""
    return tuple(m[r][c] for (r, c) in LEAD_POSITIONS)


def _int_mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(8)) for j in range(8)]
            for i in range(8)]


def _build_bracket_table():
    table = {}
    for i in range(DIM):
        for j in range(i + 1, DIM):
            ab = _int_mat_mul(BASIS_MATRICES[i], BASIS_MATRICES[j])
            ba = _int_mat_mul(BASIS_MATRICES[j], BASIS_MATRICES[i])
            comm = [[ab[r][c] - ba[r][c] for c in range(8)] for r in range(8)]
            coords = _coordinatize_int(comm)
            # reconstruction check: the basis must span the commutator
            for r in range(8):
                for c in range(8):
                    s = sum(coords[k] * BASIS_MATRICES[k][r][c] for k in range(DIM)
                            if coords[k])
                    if s != comm[r][c]:
                        raise AssertionError("bracket left the span of the basis")
            ent = tuple((k, v) for k, v in enumerate(coords) if v)
            if ent:
                table[(i, j)] = ent
    return table


BRACKET_TABLE = _build_bracket_table()


class LieElement:
    """Element of g^c as a coordinate vector over the canonical basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(coords)

    @classmethod
    def zero(cls):
        return cls((ZERO,) * DIM)

    @classmethod
    def basis(cls, idx, scale=1):
        c = [ZERO] * DIM
        c[idx] = QQ(scale)
        return cls(c)

    @classmethod
    def root_vector(cls, beta, scale=1):
        return cls.basis(4 + ROOT_INDEX[tuple(beta)], scale)

    @classmethod
    def cartan(cls, t):
        """Element diag(t1..t4,-t1..-t4) of the split Cartan subalgebra."""
        c = [ZERO] * DIM
        for i in range(4):
            c[i] = QQ(t[i]) if not isinstance(t[i], GaussianRational) else t[i]
        return cls(c)

    @classmethod
    def coroot(cls, beta):
        """h_beta with alpha(h_beta) = <alpha, beta^vee>; equals the
        epsilon-coordinate vector of beta in the Cartan."""
        return cls.cartan(beta)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        return LieElement(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        return LieElement(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return LieElement(-a for a in self.coords)

    def scale(self, c):
        return LieElement(c * a for a in self.coords)

    def is_real(self):
        return all(not isinstance(a, GaussianRational) or a.is_real
                   for a in self.coords)

    def real_form(self):
        """Drop exact-zero imaginary parts, returning rational coords."""
        out = []
        for a in self.coords:
            if isinstance(a, GaussianRational):
                if a.im:
                    raise ValueError("element is not real")
                out.append(a.re)
            else:
                out.append(a)
        return LieElement(out)

    def complexify(self):
        return LieElement(a if isinstance(a, GaussianRational) else gauss(a)
                          for a in self.coords)

    def conj(self):
        return LieElement(a.conj() if isinstance(a, GaussianRational) else a
                          for a in self.coords)

    def matrix(self):
        """The underlying 8x8 matrix."""
        m = [[ZERO] * 8 for _ in range(8)]
        for k, a in enumerate(self.coords):
            if a:
                bk = BASIS_MATRICES[k]
                for (r, c) in _support(bk):
                    m[r][c] = m[r][c] + a * bk[r][c]
        return m

    def transpose_element(self):
        """X^T, which again lies in g (theta(X) = -X^T)."""
        return theta(self).scale(QQ(-1))

    def support(self):
        return [k for k, a in enumerate(self.coords) if a]

    def cartan_part(self):
        return self.coords[:4]

    def __repr__(self):
        bits = []
        for k, a in enumerate(self.coords):
            if not a:
                continue
            name = "d%d" % (k + 1) if k < 4 else "x%s" % (ROOTS[k - 4],)
            bits.append("%s*%s" % (a, name))
        return " + ".join(bits) if bits else "0"


def _support(mat):
    return [(r, c) for r in range(8) for c in range(8) if mat[r][c]]


def bracket(x, y):
    """Lie bracket via the integer structure-constant table."""
    acc = {}
    xs = [(k, a) for k, a in enumerate(x.coords) if a]
    ys = [(k, a) for k, a in enumerate(y.coords) if a]
    for i, a in xs:
        for j, b in ys:
            if i == j:
                continue
            if i < j:
                ent = BRACKET_TABLE.get((i, j))
                coef = a * b
            else:
                ent = BRACKET_TABLE.get((j, i))
                coef = -(a * b)
            if ent:
                for k, v in ent:
                    acc[k] = acc.get(k, ZERO) + coef * v
    c = [ZERO] * DIM
    for k, v in acc.items():
        c[k] = v
    return LieElement(c)


def theta(x):
    """Cartan involution, negative-transpose: d -> -d, x_beta -> -x_{-beta}."""
    c = [ZERO] * DIM
    for k, a in enumerate(x.coords):
        if not a:
            continue
        if k < 4:
            c[k] = -a
        else:
            nk = 4 + ROOT_INDEX[_neg(ROOTS[k - 4])]
            c[nk] = -a
    return LieElement(c)


def phi(x):
    """The grading involution X -> DXD: +1 on g0, -1 on g1."""
    c = list(x.coords)
    for k in range(4, DIM):
        if c[k] and root_parity(ROOTS[k - 4]) == 1:
            c[k] = -c[k]
    return LieElement(c)


# index sets of coordinates spanning the graded pieces
G0_IDX = tuple([0, 1, 2, 3] + [4 + ROOT_INDEX[r] for r in ROOTS if r in PHI0_ROOTS])
G1_IDX = tuple(4 + ROOT_INDEX[r] for r in ROOTS if r in PHI1_ROOTS)
G1_ROOTS = tuple(ROOTS[k - 4] for k in G1_IDX)


def in_g0(x):
    return all(not x.coords[k] for k in G1_IDX)


def in_g1(x):
    return all(not x.coords[k] for k in G0_IDX)


def decompose(x):
    """(g0-part, g1-part, k-part, p-part) of a real element."""
    if not x.is_real():
        raise ValueError("decompose expects a real element")
    half = QQ(1, 2)
    px = phi(x)
    x0 = (x + px).scale(half)
    x1 = (x - px).scale(half)
    tx = theta(x)
    xk = (x + tx).scale(half)
    xp = (x - tx).scale(half)
    return x0, x1, xk, xp


def is_nilpotent(x):
    """mat^8 = 0 (equivalent to ad-nilpotency in this model)."""
    m = x.matrix()
    m2 = kernels.mat_mul(m, m)
    m4 = kernels.mat_mul(m2, m2)
    m8 = kernels.mat_mul(m4, m4)
    return all(not v for row in m8 for v in row)


def ad_matrix(x, domain):
    """Columns are coordinates of [x, b] for b in domain (LieElements)."""
    cols = [bracket(x, b).coords for b in domain]
    return [[cols[j][i] for j in range(len(domain))] for i in range(DIM)]


def _field_one(vectors):
    for v in vectors:
        for a in v:
            if isinstance(a, GaussianRational):
                return gauss(1)
    return ONE


def centralizer(space, elements):
    """Basis of {x in span(space) : [x, s] = 0 for all s in elements}.

    space: list of LieElements spanning the ambient subspace.
    Returns a list of LieElements (exact null-space computation).
    """
    if not space:
        return []
    one = _field_one([b.coords for b in space] + [s.coords for s in elements])
    rows = []
    for s in elements:
        cols = [bracket(b, s).coords for b in space]
        for i in range(DIM):
            row = [one - one + cols[j][i] for j in range(len(space))]
            if any(row):
                rows.append(row)
    if not rows:
        coeffs = [[one if i == j else one - one for j in range(len(space))]
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


def g0_basis():
    return [LieElement.basis(k) for k in G0_IDX]


def g1_basis():
    return [LieElement.basis(k) for k in G1_IDX]


def full_basis():
    return [LieElement.basis(k) for k in range(DIM)]


def complete_to_sl2(e):
    """Complete nilpotent nonzero e in g1 to a homogeneous sl2-triple.

    h is found by solving h in [e, g1] with [h, e] = 2e (canonical
    reduced-echelon solution of the linear system, so the result is
    deterministic), then f in g1 with [e, f] = h and [h, f] = -2f.
    """
    if not e:
        raise ValueError("zero element has no sl2-triple")
    if not in_g1(e):
        raise ValueError("element is not in g1")
    if not is_nilpotent(e):
        raise ValueError("element is not nilpotent")
    g1b = g1_basis()
    one = _field_one([e.coords])
    # unknown y in g1 with [[e, y], e] = 2e
    rows = []
    rhs = []
    cols = [bracket(bracket(e, b), e).coords for b in g1b]
    target = e.scale(QQ(2))
    for i in range(DIM):
        row = [one - one + cols[j][i] for j in range(len(g1b))]
        rows.append(row)
        rhs.append(target.coords[i] + (one - one))
    sol = kernels.solve_linear(rows, rhs, one)
    if sol is None:
        raise ValueError("no homogeneous triple: h-equation unsolvable")
    y = LieElement.zero()
    for c, b in zip(sol, g1b):
        if c:
            y = y + b.scale(c)
    h = bracket(e, y)
    # f in g1 with [e, f] = h and [h, f] = -2f
    rows = []
    rhs = []
    cols_ef = [bracket(e, b).coords for b in g1b]
    cols_hf = [bracket(h, b).coords for b in g1b]
    for i in range(DIM):
        rows.append([one - one + cols_ef[j][i] for j in range(len(g1b))])
        rhs.append(h.coords[i] + (one - one))
    two = QQ(2)
    for i in range(DIM):
        rows.append([cols_hf[j][i] + two * g1b[j].coords[i]
                     for j in range(len(g1b))])
        rhs.append(one - one)
    sol = kernels.solve_linear(rows, rhs, one)
    if sol is None:
        raise ValueError("no homogeneous triple: f-equation unsolvable")
    f = LieElement.zero()
    for c, b in zip(sol, g1b):
        if c:
            f = f + b.scale(c)
    return Sl2Triple(h, e, f)


class Sl2Triple:
    """(h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""

    __slots__ = ("h", "e", "f")

    def __init__(self, h, e, f):
        self.h = h
        self.e = e
        self.f = f

    def verify(self):
        two = QQ(2)
        return (bracket(self.h, self.e) == self.e.scale(two)
                and bracket(self.h, self.f) == self.f.scale(-two)
                and bracket(self.e, self.f) == self.h)

    def is_homogeneous(self):
        return in_g0(self.h) and in_g1(self.e) and in_g1(self.f)

    def is_cayley(self):
        return verify_cayley(self)

    def span(self):
        return [self.h, self.e, self.f]


def verify_cayley(t):
    """Real Cayley triple: sl2 relations, homogeneity, and theta(e) = -f
    (equivalently [e, e^T] = h in this matrix model)."""
    if not t.verify() or not t.is_homogeneous():
        return False
    return theta(t.e) == -t.f


def make_cayley_from_e(e):
    """Try f := -theta(e); returns the Cayley triple or None."""
    f = theta(e).scale(QQ(-1))
    h = bracket(e, f)
    t = Sl2Triple(h, e, f)
    if t.verify() and t.is_homogeneous():
        return t
    return None


def _seeded_rationals(seed, n, height=7):
    """Deterministic small rational vector; seed is any integer."""
    out = []
    state = seed & 0x7FFFFFFF
    for _ in range(n):
        state = (1103515245 * state + 12345) % (1 << 31)
        num = (state >> 8) % (2 * height + 1) - height
        out.append(QQ(num))
    return out


def p_part_basis(l_basis):
    """Basis of l intersect p for a theta-stable subalgebra l."""
    if not l_basis:
        return []
    one = _field_one([b.coords for b in l_basis])
    # x = sum c_j b_j with theta(x) = -x
    rows = []
    cols = [(theta(b) + b).coords for b in l_basis]
    for i in range(DIM):
        row = [one - one + cols[j][i] for j in range(len(l_basis))]
        if any(row):
            rows.append(row)
    if not rows:
        coeffs = [[one if i == j else one - one for j in range(len(l_basis))]
                  for i in range(len(l_basis))]
    else:
        coeffs = kernels.nullspace(rows, len(l_basis), one)
    out = []
    for cf in coeffs:
        acc = LieElement.zero()
        for c, b in zip(cf, l_basis):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def is_theta_stable(l_basis):
    """theta maps span(l_basis) into itself (exact membership test)."""
    if not l_basis:
        return True
    one = _field_one([b.coords for b in l_basis])
    mat = [[one - one + b.coords[i] for b in l_basis] for i in range(DIM)]
    rank0 = kernels.mat_rank(mat)
    for b in l_basis:
        ext = [row[:] for row in mat]
        tb = theta(b)
        for i in range(DIM):
            ext[i].append(one - one + tb.coords[i])
        if kernels.mat_rank(ext) != rank0:
            return False
    return True


def real_rank(l_basis, seed=1):
    """Real rank of a theta-stable reductive subalgebra l: dimension of a
    maximal abelian subspace of l intersect p, found by exact
    centralizer iteration from deterministic generic elements.

    All maximal abelian subspaces of l cap p are conjugate, so the
    dimension of any maximal one is the real rank.
    """
    if not is_theta_stable(l_basis):
        raise ValueError("real_rank requires a theta-stable subalgebra")
    pb = p_part_basis(l_basis)
    if not pb:
        return 0
    cur = pb
    attempt = 0
    while True:
        # abelian?
        if all(not bracket(a, b) for i, a in enumerate(cur) for b in cur[i + 1:]):
            return len(cur)
        # centralize a generic element of the current space
        coeffs = _seeded_rationals(seed + 7919 * attempt, len(cur))
        if not any(coeffs):
            coeffs[0] = QQ(1)
        x = LieElement.zero()
        for c, b in zip(coeffs, cur):
            if c:
                x = x + b.scale(c)
        if not x:
            attempt += 1
            continue
        nxt = [b for b in centralizer(cur, [x]) if b]
        if len(nxt) == len(cur):
            # x was central in cur but cur is not abelian: perturb
            attempt += 1
            if attempt > 64:
                raise RuntimeError("real_rank iteration failed to descend")
            continue
        cur = nxt
        attempt += 1


# -- named generators of the paper model -----------------------------------

def generators():
    """Canonical generators: h1..h4, e1..e4, f1..f4 plus the extra g0
    factor (h0, e0, f0)."""
    e = {
        1: LieElement.root_vector(ALPHA[1]),
        2: LieElement.root_vector(ALPHA[2]),
        3: LieElement.root_vector(ALPHA[3]),
        4: LieElement.root_vector(ALPHA[4]),
        0: LieElement.root_vector(ALPHA[0]),
    }
    f = {i: LieElement.root_vector(_neg(ALPHA[i])) for i in e}
    h = {i: LieElement.coroot(ALPHA[i]) for i in e}
    return h, e, f


class AlgebraModel:
    """Immutable bundle of the model data; construction re-verifies the
    canonical relations, involution properties and dimensions."""

    def __init__(self):
        self.h, self.e, self.f = generators()
        self.dim_g0 = len(G0_IDX)
        self.dim_g1 = len(G1_IDX)
        self.cartan_matrix = CARTAN_MATRIX
        self._verify()

    # the four sl2(R) factors of g0, indexed by their root label
    FACTOR_LABELS = (0, 1, 3, 4)

    def factor(self, i):
        return (self.h[i], self.e[i], self.f[i])

    def _verify(self):
        h, e, f = self.h, self.e, self.f
        two = QQ(2)
        for i in range(1, 5):
            for j in range(1, 5):
                if bracket(h[i], h[j]):
                    raise AssertionError("[h,h] != 0")
                cji = QQ(pairing(ALPHA[j], ALPHA[i]))
                if bracket(h[i], e[j]) != e[j].scale(cji):
                    raise AssertionError("[h_i, e_j] relation fails")
                if bracket(h[i], f[j]) != f[j].scale(-cji):
                    raise AssertionError("[h_i, f_j] relation fails")
                expect = h[i] if i == j else LieElement.zero()
                if bracket(e[i], f[j]) != expect:
                    raise AssertionError("[e_i, f_j] relation fails")
        if self.dim_g0 != DIM_G0 or self.dim_g1 != DIM_G1:
            raise AssertionError("graded dimensions are wrong")
        for i in (0, 1, 3, 4):
            if phi(e[i]) != e[i]:
                raise AssertionError("phi must fix e_i for i != 2")
        if phi(e[2]) != -e[2]:
            raise AssertionError("phi(e2) = -e2 fails")
        for i in (0, 1, 2, 3, 4):
            if theta(e[i]) != -f[i] or theta(h[i]) != -h[i]:
                raise AssertionError("theta action on generators fails")
        # theta, phi commute and are bracket automorphisms of order 2
        for k in range(DIM):
            b = LieElement.basis(k)
            if theta(phi(b)) != phi(theta(b)):
                raise AssertionError("theta and phi do not commute")
            if theta(theta(b)) != b or phi(phi(b)) != b:
                raise AssertionError("involutions are not of order 2")


_MODEL = None


def build_model():
    """The shared immutable model instance."""
    global _MODEL
    if _MODEL is None:
        _MODEL = AlgebraModel()
    return _MODEL
