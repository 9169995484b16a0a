"""The module V2 x V2 x V2 x V2: sign-tuple basis, the sign-expression
notation of the orbit tables, the (SL2)^4 action, and the equivariant
identification sigma with g1.

A sign tuple (s1,s2,s3,s4) denotes v1 x v2 x v3 x v4 where v_k is the
weight +-1 vector of the k-th factor.  sigma sends it to a multiple of
the g1 root vector whose root beta satisfies

    s1 = beta(h_alpha1),  s2 = beta(h_alpha0),
    s3 = -beta(h_alpha4), s4 = -beta(h_alpha3),

the unique factor assignment compatible with the diagonal-action weights
of the printed basis dictionaries; the per-tuple scalars are forced by
equivariance once one anchor scalar is fixed.
"""

import re

from .scalar import QQ, ZERO, ONE, rat
from . import kernels
from .liealg import (
    LieElement, ROOT_INDEX, ROOTS, ALPHA, G1_IDX, G1_ROOTS, DIM,
    bracket, _neg, in_g1,
)

SIGN_TUPLES = tuple(
    (s1, s2, s3, s4)
    for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1) for s4 in (1, -1)
)
TUPLE_INDEX = {t: i for i, t in enumerate(SIGN_TUPLES)}


def tuple_to_root(t):
    """The g1 root whose factor weights match the sign tuple."""
    s1, s2, s3, s4 = t
    b1 = QQ(s2 + s1, 2)
    b2 = QQ(s2 - s1, 2)
    b3 = QQ(-(s4 + s3), 2)
    b4 = QQ(s3 - s4, 2)
    beta = tuple(int(x) for x in (b1, b2, b3, b4))
    if beta not in ROOT_INDEX:
        raise AssertionError("sign tuple %s has no matching root" % (t,))
    return beta


def root_to_tuple(beta):
    b1, b2, b3, b4 = beta
    return (b1 - b2, b1 + b2, -(b3 - b4), -(b3 + b4))


class TensorElement:
    """Element of V2^(x4) as a map from sign tuples to rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for t, c in coeffs.items():
                c = QQ(c)
                if c:
                    t = tuple(t)
                    if t not in TUPLE_INDEX:
                        raise ValueError("bad sign tuple %r" % (t,))
                    self.coeffs[t] = self.coeffs.get(t, ZERO) + c
            self.coeffs = {t: c for t, c in self.coeffs.items() if c}

    @classmethod
    def basis(cls, t, scale=1):
        return cls({tuple(t): QQ(scale)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            s = out.get(t, ZERO) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        r = TensorElement.__new__(TensorElement)
        r.coeffs = out
        return r

    def __sub__(self, other):
        return self + other.scale(QQ(-1))

    def scale(self, c):
        c = QQ(c)
        r = TensorElement.__new__(TensorElement)
        r.coeffs = {} if not c else {t: c * v for t, v in self.coeffs.items()}
        return r

    def __neg__(self):
        return self.scale(QQ(-1))

    def component(self, t):
        return self.coeffs.get(tuple(t), ZERO)

    def support(self):
        return sorted(self.coeffs, key=_tuple_sort_key)

    def as_vector(self):
        v = [ZERO] * 16
        for t, c in self.coeffs.items():
            v[TUPLE_INDEX[t]] = c
        return v

    @classmethod
    def from_vector(cls, v):
        return cls({SIGN_TUPLES[i]: c for i, c in enumerate(v) if c})

    def text(self):
        """Canonical serialization: tuples in lexicographic (+ before -)
        order, reduced-fraction coefficients."""
        if not self.coeffs:
            return "0"
        bits = []
        for t in self.support():
            c = self.coeffs[t]
            tup = "(" + "".join("+" if s > 0 else "-" for s in t) + ")"
            if c == 1:
                bits.append(("+", tup))
            elif c == -1:
                bits.append(("-", tup))
            else:
                sign = "+" if c > 0 else "-"
                bits.append((sign, "%s*%s" % (_fmt_q(abs(c)), tup)))
        out = ("" if bits[0][0] == "+" else "-") + bits[0][1]
        for sign, body in bits[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "TensorElement(%s)" % self.text()


def _fmt_q(c):
    c = QQ(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%s/%s" % (c.numerator, c.denominator)


def _tuple_sort_key(t):
    return tuple(0 if s > 0 else 1 for s in t)


# ---------------------------------------------------------------------------
# Sign-expression grammar.
#
#   expr   := ws? term (ws? ('+'|'-') ws? term)* ws?
#   term   := (coeff ws? '*'? ws?)? '(' ws? sign (ws? ','? ws? sign){3} ws? ')'
#   coeff  := integer | integer '/' integer
#   sign   := '+' | '-'
# ---------------------------------------------------------------------------

class SignExprError(ValueError):
    pass


_TERM_RE = re.compile(
    r"\s*(?P<coeff>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*\(\s*(?P<signs>(?:[+-]\s*,?\s*)+)\)"
)


def parse_sign_expr(s):
    """Parse the orbit-table notation into a TensorElement."""
    if not isinstance(s, str):
        raise SignExprError("expected a string")
    pos = 0
    total = {}
    nterms = 0
    pending_sign = 1
    first = True
    text = s
    while True:
        rest = text[pos:]
        if not rest.strip():
            break
        stripped = rest.lstrip()
        offset = pos + (len(rest) - len(stripped))
        if not first:
            if stripped[0] == "+":
                pending_sign = 1
            elif stripped[0] == "-":
                pending_sign = -1
            else:
                raise SignExprError("expected '+' or '-' at %r" % stripped[:12])
            pos = offset + 1
        else:
            if stripped[0] == "-":
                pending_sign = -1
                pos = offset + 1
            elif stripped[0] == "+":
                pending_sign = 1
                pos = offset + 1
        m = _TERM_RE.match(text, pos)
        if not m:
            raise SignExprError("malformed term at %r" % text[pos:pos + 24])
        coeff = ONE
        if m.group("coeff"):
            num = m.group("coeff").replace(" ", "")
            coeff = rat(num)
        signs = [c for c in m.group("signs") if c in "+-"]
        if len(signs) != 4:
            raise SignExprError("sign tuple must have exactly 4 signs, got %d"
                                % len(signs))
        t = tuple(1 if c == "+" else -1 for c in signs)
        c = coeff * pending_sign
        total[t] = total.get(t, ZERO) + c
        pos = m.end()
        first = False
        pending_sign = 1
        nterms += 1
    if nterms == 0:
        raise SignExprError("empty sign expression")
    return TensorElement(total)


# ---------------------------------------------------------------------------
# Group elements and the action.
# ---------------------------------------------------------------------------

class GroupElement4:
    """Element of SL2(R)^4 as four exact 2x2 matrices."""

    __slots__ = ("mats",)

    def __init__(self, mats):
        mats = tuple(tuple(tuple(QQ(x) for x in row) for row in m) for m in mats)
        if len(mats) != 4:
            raise ValueError("need four 2x2 matrices")
        for m in mats:
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            if det != 1:
                raise ValueError("factor determinant must be 1, got %s" % det)
        self.mats = mats

    @classmethod
    def identity(cls):
        eye = ((1, 0), (0, 1))
        return cls((eye, eye, eye, eye))

    @classmethod
    def diagonal(cls, a):
        """diag(a_k, 1/a_k) in each factor."""
        return cls(tuple(((QQ(x), 0), (0, QQ(1) / QQ(x))) for x in a))

    @classmethod
    def rotation(cls, k, c, s):
        """Rotation block ((c, s), (-s, c)) in factor k (c^2 + s^2 = 1),
        identity elsewhere."""
        if QQ(c) ** 2 + QQ(s) ** 2 != 1:
            raise ValueError("(c, s) must be a rational circle point")
        mats = [((1, 0), (0, 1))] * 4
        mats[k] = ((c, s), (-QQ(s), c))
        return cls(mats)

    @classmethod
    def unipotent(cls, k, t, lower=False):
        mats = [((1, 0), (0, 1))] * 4
        mats[k] = ((1, 0), (t, 1)) if lower else ((1, t), (0, 1))
        return cls(mats)

    def __mul__(self, other):
        out = []
        for a, b in zip(self.mats, other.mats):
            out.append(tuple(
                tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2))
                for i in range(2)))
        return GroupElement4(out)

    def inverse(self):
        out = []
        for m in self.mats:
            out.append(((m[1][1], -m[0][1]), (-m[1][0], m[0][0])))
        return GroupElement4(out)

    def __eq__(self, other):
        return self.mats == other.mats

    def __hash__(self):
        return hash(self.mats)

    def __repr__(self):
        return "GroupElement4(%s)" % (self.mats,)


def act(g, v):
    """Factor-wise action of g in SL2(R)^4 on a tensor element.

    Index convention: the weight +1 vector of a factor is (1,0), so the
    image of tuple component s under the 2x2 matrix m contributes
    m[t][s] with index 0 for '+'."""
    out = {}
    for t, c in v.coeffs.items():
        src = tuple(0 if s > 0 else 1 for s in t)
        # distribute over the 2^4 target tuples
        for mask in range(16):
            dst = []
            coeff = c
            dead = False
            for k in range(4):
                tk = (mask >> k) & 1
                mk = g.mats[k][tk][src[k]]
                if not mk:
                    dead = True
                    break
                coeff = coeff * mk
                dst.append(1 if tk == 0 else -1)
            if dead:
                continue
            key = tuple(dst)
            s = out.get(key, ZERO) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return TensorElement(out)


# ---------------------------------------------------------------------------
# sigma: the equivariant identification with g1.
# ---------------------------------------------------------------------------

# raising operator of tensor factor k corresponds to ad of these elements
_FACTOR_RAISE = (ALPHA[1], ALPHA[0], _neg(ALPHA[4]), _neg(ALPHA[3]))


def _build_sigma_scalars():
    """Scalar c_t per sign tuple with sigma(t) = c_t * x_{root(t)}, fixed
    by equivariance from the anchor tuple (-,-,-,-) with scalar 1."""
    anchor = (-1, -1, -1, -1)
    scalars = {anchor: ONE}
    raise_vecs = [LieElement.root_vector(r) for r in _FACTOR_RAISE]
    frontier = [anchor]
    while frontier:
        new = []
        for t in frontier:
            for k in range(4):
                if t[k] == 1:
                    continue
                t2 = t[:k] + (1,) + t[k + 1:]
                if t2 in scalars:
                    continue
                beta = tuple_to_root(t)
                beta2 = tuple_to_root(t2)
                img = bracket(raise_vecs[k], LieElement.root_vector(beta))
                coeff = img.coords[4 + ROOT_INDEX[beta2]]
                if not coeff or any(
                        c for i, c in enumerate(img.coords) if i != 4 + ROOT_INDEX[beta2]):
                    raise AssertionError("raising operator is not a ladder step")
                scalars[t2] = scalars[t] * coeff
                new.append(t2)
        frontier = new
    if len(scalars) != 16:
        raise AssertionError("sigma ladder did not reach all tuples")
    return scalars


_SIGMA_SCALARS = None


def _sigma_scalars():
    global _SIGMA_SCALARS
    if _SIGMA_SCALARS is None:
        _SIGMA_SCALARS = _build_sigma_scalars()
        _verify_sigma(_SIGMA_SCALARS)
    return _SIGMA_SCALARS


def _verify_sigma(scalars):
    """Equivariance check for all eight ladder generators on all tuples."""
    for k in range(4):
        for name, vec, delta in (
            ("raise", LieElement.root_vector(_FACTOR_RAISE[k]), 1),
            ("lower", LieElement.root_vector(_neg(_FACTOR_RAISE[k])), -1),
        ):
            for t in SIGN_TUPLES:
                if t[k] == delta:
                    expect = LieElement.zero()
                else:
                    t2 = t[:k] + (delta,) + t[k + 1:]
                    expect = LieElement.root_vector(tuple_to_root(t2),
                                                    scalars[t2])
                got = bracket(vec, LieElement.root_vector(tuple_to_root(t),
                                                          scalars[t]))
                if got != expect:
                    raise AssertionError(
                        "sigma fails equivariance at factor %d (%s)" % (k, name))


def sigma(v):
    """The equivariant isomorphism V2^(x4) -> g1."""
    scal = _sigma_scalars()
    out = LieElement.zero()
    for t, c in v.coeffs.items():
        out = out + LieElement.root_vector(tuple_to_root(t), c * scal[t])
    return out


def sigma_inverse(x):
    if not in_g1(x):
        raise ValueError("element is not in g1")
    return TensorElement(sigma_inverse_components(x))


def sigma_inverse_components(x):
    """Raw tuple -> coefficient map of sigma^{-1}(x); unlike
    TensorElement this supports coefficients in a quadratic tower."""
    scal = _sigma_scalars()
    coeffs = {}
    for k in G1_IDX:
        c = x.coords[k]
        if c:
            t = root_to_tuple(ROOTS[k - 4])
            coeffs[t] = c / scal[t]
    return coeffs


def build_sigma():
    """(sigma, sigma_inverse) after the calibration self-check."""
    _sigma_scalars()
    return sigma, sigma_inverse


def lift_to_g0_action(g):
    """The automorphism of g1 induced by g, as a 16x16 rational matrix in
    the sign-tuple coordinate order (= sigma . act(g) . sigma^{-1})."""
    cols = []
    for t in SIGN_TUPLES:
        img = act(g, TensorElement.basis(t))
        cols.append(img.as_vector())
    return [[cols[j][i] for j in range(16)] for i in range(16)]


def act_on_g1(g, x):
    """Action of g on a g1 element through sigma."""
    return sigma(act(g, sigma_inverse(x)))
