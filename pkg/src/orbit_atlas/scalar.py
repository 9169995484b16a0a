"""Exact scalar arithmetic: rationals, Gaussian rationals, multivariate
polynomials under pure lexicographic order, and inertia of symmetric
matrices.

Everything here is exact; no floating point anywhere.  The rational
backend is gmpy2.mpq when available (much faster), with
fractions.Fraction as the pure-Python fallback.  Set ORBIT_ATLAS_PURE=1
to force the fallback.
"""

import os
from fractions import Fraction

_FORCE_PURE = os.environ.get("ORBIT_ATLAS_PURE", "") not in ("", "0")

if not _FORCE_PURE:
    try:
        from gmpy2 import mpq as QQ
        RATIONAL_BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover
        QQ = Fraction
        RATIONAL_BACKEND = "fractions"
else:
    QQ = Fraction
    RATIONAL_BACKEND = "fractions"

ZERO = QQ(0)
ONE = QQ(1)


def rat(x, y=None):
    """Build an exact rational; accepts ints, strings like '3/5', rationals."""
    if y is not None:
        return QQ(x) / QQ(y)
    if isinstance(x, str):
        if "/" in x:
            n, d = x.split("/")
            return QQ(int(n)) / QQ(int(d))
        return QQ(int(x))
    return QQ(x)


def is_rational(x):
    return isinstance(x, (int, type(ZERO), Fraction))


def rat_sqrt(x):
    """Exact square root of a non-negative rational, or None if irrational."""
    x = QQ(x)
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn = _isqrt(num)
    rd = _isqrt(den)
    if rn * rn == num and rd * rd == den:
        return QQ(rn) / QQ(rd)
    return None


def _isqrt(n):
    import math
    return math.isqrt(n)


class Ext:
    """Element a + b*sqrt(d) of a real quadratic tower over Q.

    d is always a squarefree integer > 1 and radicals are nested by
    ascending d (sqrt(15) is entered as sqrt(3)*sqrt(5)), which makes
    the representation unique: a and b lie in the subfield generated by
    strictly smaller radicands.  ext() collapses a zero b-part to the
    subfield, so exact equality, hashing and zero tests are structural.
    The field is ordered; sign() is exact and recursive."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = a
        self.b = b
        self.d = d

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, Ext):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return not self.b and self.a == other

    def __hash__(self):
        # collapse-normalized: a pure rational never reaches here
        return hash((self.a, self.b, self.d))

    def __add__(self, other):
        if isinstance(other, Ext):
            if other.d == self.d:
                return ext(self.a + other.a, self.b + other.b, self.d)
            if other.d > self.d:
                return other + self
        return ext(self.a + other, self.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Ext(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Ext):
            if other.d == self.d:
                return ext(self.a * other.a + self.b * other.b * self.d,
                           self.a * other.b + self.b * other.a, self.d)
            if other.d > self.d:
                return other * self
        return ext(self.a * other, self.b * other, self.d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.d
        if not n:
            raise ZeroDivisionError("tower element with zero norm")
        ninv = _inv(n)
        return ext(self.a * ninv, -self.b * ninv, self.d)

    def __truediv__(self, other):
        if isinstance(other, Ext):
            if other.d == self.d:
                return self * other.inverse()
            if other.d > self.d:
                return other.inverse() * self
            return ext(self.a / other, self.b / other, self.d)
        return ext(self.a / other, self.b / other, self.d)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def sign(self):
        sa = ext_sign(self.a)
        sb = ext_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        n = self.a * self.a - self.b * self.b * self.d
        sn = ext_sign(n)
        if sn == 0:
            raise AssertionError("radicand is a square in the subfield")
        return sa * sn

    def __lt__(self, other):
        return ext_sign(self - other) < 0

    def __le__(self, other):
        return ext_sign(self - other) <= 0

    def __gt__(self, other):
        return ext_sign(self - other) > 0

    def __ge__(self, other):
        return ext_sign(self - other) >= 0

    def __abs__(self):
        return self if self.sign() >= 0 else -self

    def __repr__(self):
        return "(%s+%s*r%s)" % (self.a, self.b, self.d)


def _inv(x):
    if isinstance(x, Ext):
        return x.inverse()
    return ONE / QQ(x)


def ext_sign(x):
    if isinstance(x, Ext):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def ext(a, b, d):
    """Normalized tower element a + b*sqrt(d)."""
    if not b:
        return a
    return Ext(a, b, d)


def _squarefree_split(n):
    """n = s^2 * c with c squarefree; returns (s, c) for n > 0."""
    s = 1
    c = 1
    p = 2
    while p * p <= n:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            s *= p ** (k // 2)
            if k % 2:
                c *= p
        p += 1 if p == 2 else 2
    c *= n
    return s, c


def make_sqrt(q):
    """Exact sqrt(q) for a rational q >= 0, as a rational or a tower
    element with prime radicands (None for q < 0)."""
    q = QQ(q)
    if q < 0:
        return None
    if not q:
        return ZERO
    num, den = int(q.numerator), int(q.denominator)
    s, c = _squarefree_split(num * den)
    coeff = QQ(s, den)
    if c == 1:
        return coeff
    val = coeff
    p = 2
    rest = c
    primes = []
    while p * p <= rest:
        if rest % p == 0:
            primes.append(p)
            rest //= p
        else:
            p += 1 if p == 2 else 2
    if rest > 1:
        primes.append(rest)
    for p in sorted(primes):
        val = val * Ext(ZERO, ONE, p)
    return val


def is_rational_scalar(x):
    return not isinstance(x, Ext)


class GaussianRational:
    """Element of Q(i), stored as an exact (re, im) pair.  The real and
    imaginary parts may lie in a real quadratic tower (Ext)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Ext) else QQ(re)
        self.im = im if isinstance(im, Ext) else QQ(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = gauss(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = gauss(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = gauss(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return gauss(other) - self

    def __mul__(self, other):
        other = gauss(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = gauss(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return gauss(other) / self

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """Field norm re^2 + im^2, a rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self):
        return not self.im

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im
        return "(%s%s%s*i)" % (self.re, "+" if self.im > 0 else "-", abs(self.im))


I_UNIT = GaussianRational(0, 1)


def gauss(x):
    """Coerce ints / rationals / tower elements / GaussianRational into
    Q(i) (possibly over a real quadratic tower)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, Ext):
        return GaussianRational(x, ZERO)
    return GaussianRational(QQ(x), ZERO)


class Signature:
    """Exact inertia (n_plus, n_minus) of a symmetric matrix; zero
    eigenvalues are counted in neither component."""

    __slots__ = ("n_plus", "n_minus")

    def __init__(self, n_plus, n_minus):
        if n_plus < 0 or n_minus < 0:
            raise ValueError("signature components must be non-negative")
        self.n_plus = n_plus
        self.n_minus = n_minus

    def __eq__(self, other):
        return (self.n_plus, self.n_minus) == (other.n_plus, other.n_minus)

    def __hash__(self):
        return hash((self.n_plus, self.n_minus))

    def __iter__(self):
        return iter((self.n_plus, self.n_minus))

    def astuple(self):
        return (self.n_plus, self.n_minus)

    def __repr__(self):
        return "(%d,%d)" % (self.n_plus, self.n_minus)


def symmetric_signature(m):
    """Exact inertia of a symmetric matrix over Q or a real quadratic
    tower, by congruence diagonalization (symmetric pivoting; hyperbolic
    2x2 blocks handle a zero diagonal)."""
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    a = [[m[i][j] if isinstance(m[i][j], Ext) else QQ(m[i][j])
          for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    from .kernels import congruence_inertia
    npos, nneg = congruence_inertia(a)
    if npos + nneg > n:
        raise AssertionError("inertia exceeds dimension")
    return Signature(npos, nneg)


# ---------------------------------------------------------------------------
# Multivariate polynomials, pure lexicographic order.
# ---------------------------------------------------------------------------

class MultiPoly:
    """Multivariate polynomial over Q with a fixed ordered variable list.

    Terms are stored as {exponent tuple: coefficient}; zero coefficients
    are never stored.  Monomials compare under pure lex in the declared
    variable order (needed downstream for Groebner bases).
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = QQ(c)
                if c:
                    e = tuple(e)
                    if len(e) != len(self.vars):
                        raise ValueError("exponent arity mismatch")
                    self.terms[e] = self.terms.get(e, ZERO) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): QQ(c)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): ONE})

    @classmethod
    def gens(cls, variables):
        return [cls.variable(variables, v) for v in variables]

    # -- ring structure -----------------------------------------------
    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("variable lists differ: %r vs %r"
                                 % (self.vars, other.vars))
            return other
        return MultiPoly.constant(self.vars, other)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.vars, other)
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, ZERO) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return self._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, ZERO) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return self._raw(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _raw(self, terms):
        p = MultiPoly.__new__(MultiPoly)
        p.vars = self.vars
        p.terms = terms
        return p

    # -- lex order utilities --------------------------------------------
    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * len(self.vars)}

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), ZERO)

    def monic(self):
        if not self.terms:
            return self
        lc = self.lead_coeff()
        return self._raw({e: c / lc for e, c in self.terms.items()})

    def evaluate(self, values):
        """Evaluate at a point given as a mapping var -> rational."""
        vals = [QQ(values[v]) for v in self.vars]
        acc = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                for _ in range(k):
                    t = t * x
            acc = acc + t
        return acc

    def substitute_signs(self, signs):
        """Map each variable v -> signs[v] * v (signs in {1,-1})."""
        t = {}
        for e, c in self.terms.items():
            s = 1
            for v, k in zip(self.vars, e):
                if signs.get(v, 1) < 0 and k % 2:
                    s = -s
            t[e] = c * s
        return self._raw(t)

    def proportional_to(self, other):
        """True when self = c * other for a nonzero rational constant."""
        other = self._check(other)
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        if set(self.terms) != set(other.terms):
            return False
        lm = self.lead_monomial()
        ratio = self.terms[lm] / other.terms[lm]
        return all(c == ratio * other.terms[e] for e, c in self.terms.items())

    def divide_exact(self, divisor):
        """Exact quotient self / divisor, or None when not divisible."""
        divisor = self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self.terms)
        quot = {}
        dlm = divisor.lead_monomial()
        dlc = divisor.terms[dlm]
        while rem:
            lm = max(rem)
            if any(a < b for a, b in zip(lm, dlm)):
                return None
            q = tuple(a - b for a, b in zip(lm, dlm))
            qc = rem[lm] / dlc
            quot[q] = qc
            for e, c in divisor.terms.items():
                t = tuple(a + b for a, b in zip(q, e))
                s = rem.get(t, ZERO) - qc * c
                if s:
                    rem[t] = s
                else:
                    rem.pop(t, None)
        return self._raw(quot)

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                "%s^%d" % (v, k) if k > 1 else v
                for v, k in zip(self.vars, e) if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (c, mono))
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


def poly_arith(p, q, op):
    """Ring operation on two polynomials over the same variable list."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError("unknown op %r" % (op,))
