"""Exact coefficient arithmetic.

Everything downstream works over the Gaussian rationals Q(i), Laurent
polynomials in the deformation parameter kappa, and (for zero-testing on the
Lorentz group) multivariate polynomials / rational functions in the three
boost-rotation parameters.  No floating point anywhere; gmpy2 rationals are
used as the exact base field for speed.
"""

from fractions import Fraction

from gmpy2 import mpq as _Q

_F0 = _Q(0)
_F1 = _Q(1)


class QQi:
    """Gaussian rational re + i*im with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_F0) else _Q(re)
        self.im = im if type(im) is type(_F0) else _Q(im)

    def __add__(self, other):
        return QQi(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QQi(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __mul__(self, other):
        return QQi(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    def __truediv__(self, other):
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * other.re + self.im * other.im) / n,
                   (self.im * other.re - self.re * other.im) / n)

    def conj(self):
        return QQi(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        return isinstance(other, QQi) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "QQi(%s, %s)" % (self.re, self.im)


QI_ZERO = QQi(0)
QI_ONE = QQi(1)
QI_I = QQi(0, 1)


class K:
    """Laurent polynomial in kappa over QQi.

    Immutable by convention: `terms` maps integer kappa-exponent (may be
    negative) to a nonzero QQi coefficient.  The star operation conjugates
    coefficients and fixes kappa (kappa is a real parameter).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return _K_ZERO

    @staticmethod
    def one():
        return _K_ONE

    @staticmethod
    def scalar(q):
        """Embed a QQi / Fraction / int as a kappa-degree-0 element."""
        if not isinstance(q, QQi):
            q = QQi(q)
        if q.is_zero():
            return _K_ZERO
        return K({0: q}, _clean=True)

    @staticmethod
    def of(re, im=0, kpow=0):
        q = QQi(re, im)
        if q.is_zero():
            return _K_ZERO
        return K({kpow: q}, _clean=True)

    @staticmethod
    def i(kpow=0):
        return K({kpow: QI_I}, _clean=True)

    @staticmethod
    def kappa(n=1):
        return K({n: QI_ONE}, _clean=True)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del t[e]
                else:
                    t[e] = s
        return K(t, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return K({e: -c for e, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return _K_ZERO
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                s = t.get(e)
                if s is None:
                    t[e] = p
                else:
                    t[e] = s + p
        return K(t)

    def scale(self, q):
        """Multiply by a QQi scalar."""
        if q.is_zero() or not self.terms:
            return _K_ZERO
        return K({e: c * q for e, c in self.terms.items()}, _clean=True)

    def star(self):
        """Complex conjugation; kappa is fixed (real deformation parameter)."""
        return K({e: c.conj() for e, c in self.terms.items()}, _clean=True)

    def divmono(self, other):
        """Exact division by a monomial c*kappa^n; rejects other divisors."""
        if len(other.terms) != 1:
            raise ZeroDivisionError("kappa-scalar division only by a nonzero monomial")
        (e, c), = other.terms.items()
        return K({e1 - e: c1 / c for e1, c1 in self.terms.items()}, _clean=True)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, K) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def eval(self, kval):
        """Evaluate at an exact rational kappa value (QQi); for screening."""
        acc = QI_ZERO
        for e, c in self.terms.items():
            p = QQi(kval.re ** e) if kval.im == 0 else _qqi_pow(kval, e)
            acc = acc + c * p
        return acc

    def __repr__(self):
        return "K(%s)" % (k_str(self),)


def _qqi_pow(q, e):
    if e < 0:
        return QI_ONE / _qqi_pow(q, -e)
    acc = QI_ONE
    for _ in range(e):
        acc = acc * q
    return acc


_K_ZERO = K({}, _clean=True)
_K_ONE = K({0: QI_ONE}, _clean=True)

K_I = K.i()
K_ONE = _K_ONE
K_ZERO = _K_ZERO


def _frac_str(f):
    return str(f.numerator) if f.denominator == 1 else "%s/%s" % (f.numerator, f.denominator)


def _qqi_str(q):
    if q.im == 0:
        return _frac_str(q.re)
    if q.re == 0:
        if q.im == 1:
            return "I"
        if q.im == -1:
            return "-I"
        return "%s*I" % _frac_str(q.im)
    sign = "+" if q.im > 0 else "-"
    a = abs(q.im)
    istr = "I" if a == 1 else "%s*I" % _frac_str(a)
    return "%s %s %s" % (_frac_str(q.re), sign, istr)


def k_str(x):
    """Readable form of a kappa-scalar, e.g. '1 - (I)*k^-1'."""
    if not x.terms:
        return "0"
    bits = []
    for e in sorted(x.terms, reverse=True):
        c = x.terms[e]
        cs = _qqi_str(c)
        if "+" in cs[1:] or "-" in cs[1:] or "*" in cs:
            cs = "(%s)" % cs
        if e == 0:
            bits.append(cs)
        else:
            kp = "k" if e == 1 else "k^%d" % e
            bits.append(kp if cs == "1" else "-" + kp if cs == "-1" else "%s*%s" % (cs, kp))
    out = bits[0]
    for b in bits[1:]:
        out += " - " + b[1:] if b.startswith("-") else " + " + b
    return out


# -- univariate gcd machinery for the fraction field -------------------------

def _k_shift(x, n):
    return K({e + n: c for e, c in x.terms.items()}, _clean=True)


def _k_minexp(x):
    return min(x.terms)


def _k_maxexp(x):
    return max(x.terms)


def _poly_divmod(a, b):
    """Division with remainder in QQi[kappa]; a, b are K with min exponent >= 0."""
    q = {}
    r = dict(a.terms)
    db = _k_maxexp(b)
    lb = b.terms[db]
    while r:
        dr = max(r)
        if dr < db:
            break
        coef = r[dr] / lb
        q[dr - db] = coef
        for e, c in b.terms.items():
            e2 = e + dr - db
            s = r.get(e2, QI_ZERO) - c * coef
            if s.is_zero():
                r.pop(e2, None)
            else:
                r[e2] = s
    return K(q), K(r)


def _poly_gcd(a, b):
    while b.terms:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a.terms:
        return _K_ONE
    lead = a.terms[_k_maxexp(a)]
    return K({e: c / lead for e, c in a.terms.items()}, _clean=True)


class FracK:
    """Rational function in kappa: num/den, gcd-reduced, den monic poly."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _norm=False):
        if den is None:
            den = _K_ONE
        if _norm:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = _K_ZERO
            self.den = _K_ONE
            return
        if den is _K_ONE or den == _K_ONE:
            self.num = num
            self.den = _K_ONE
            return
        if len(den.terms) == 1:
            # monomial denominator divides exactly
            (e, c), = den.terms.items()
            self.num = K({e1 - e: c1 / c for e1, c1 in num.terms.items()}, _clean=True)
            self.den = _K_ONE
            return
        # clear kappa powers so den is an honest polynomial with den(0) != 0
        s = _k_minexp(den)
        if s:
            num = _k_shift(num, -s)
            den = _k_shift(den, -s)
        s = _k_minexp(num)
        nump = _k_shift(num, -s) if s < 0 else num
        if len(nump.terms) > 1:
            g = _poly_gcd(nump, den)
            if len(g.terms) > 1 or 0 not in g.terms or g.terms[0] != QI_ONE:
                nump, _ = _poly_divmod(nump, g)
                den, _ = _poly_divmod(den, g)
        if s < 0:
            nump = _k_shift(nump, s)
        lead = den.terms[_k_maxexp(den)]
        if lead != QI_ONE:
            den = K({e: c / lead for e, c in den.terms.items()}, _clean=True)
            nump = K({e: c / lead for e, c in nump.terms.items()}, _clean=True)
        self.num = nump
        self.den = den

    @staticmethod
    def from_k(x):
        return FracK(x, _K_ONE, _norm=True)

    @staticmethod
    def zero():
        return _FK_ZERO

    @staticmethod
    def one():
        return _FK_ONE

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return FracK(self.num + other.num, self.den)
        return FracK(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FracK(-self.num, self.den, _norm=True)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return _FK_ZERO
        return FracK(self.num * other.num, self.den * other.den)

    def scale_q(self, q):
        """Multiply by an exact Fraction."""
        if not q:
            return _FK_ZERO
        qq = QQi(q)
        return FracK(K({e: c * qq for e, c in self.num.terms.items()}, _clean=True),
                     self.den, _norm=True)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return FracK(self.num * other.den, self.den * other.num)

    def inv(self):
        return _FK_ONE / self

    def __eq__(self, other):
        return isinstance(other, FracK) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_k(self):
        """Convert back to a Laurent polynomial; raises if the denominator survived."""
        if self.den == _K_ONE:
            return self.num
        raise ValueError("not a Laurent polynomial: den = %s" % k_str(self.den))

    def __repr__(self):
        if self.den == _K_ONE:
            return "FracK(%s)" % k_str(self.num)
        return "FracK((%s)/(%s))" % (k_str(self.num), k_str(self.den))


_FK_ZERO = FracK(_K_ZERO, _K_ONE, _norm=True)
_FK_ONE = FracK(_K_ONE, _K_ONE, _norm=True)


class PolyN:
    """Sparse multivariate polynomial; keys are exponent tuples.

    Coefficient-agnostic: works over K or FracK (anything with +, *, neg,
    is_zero).  Used with 3 variables for the Lorentz parametrization and with
    3n variables for per-leg tensor zero tests.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None, _clean=False):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @staticmethod
    def const(nvars, c):
        if c.is_zero():
            return PolyN(nvars, {}, _clean=True)
        return PolyN(nvars, {(0,) * nvars: c}, _clean=True)

    @staticmethod
    def var(nvars, idx, c):
        m = tuple(1 if j == idx else 0 for j in range(nvars))
        return PolyN(nvars, {m: c}, _clean=True)

    def __add__(self, other):
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s.is_zero():
                    del t[m]
                else:
                    t[m] = s
        return PolyN(self.nvars, t, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyN(self.nvars, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return PolyN(self.nvars, {}, _clean=True)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                p = c1 * c2
                s = t.get(m)
                if s is None:
                    t[m] = p
                else:
                    t[m] = s + p
        return PolyN(self.nvars, t)

    def scale(self, c):
        if c.is_zero():
            return PolyN(self.nvars, {}, _clean=True)
        return PolyN(self.nvars, {m: v * c for m, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, PolyN) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __repr__(self):
        return "PolyN(%d, %d terms)" % (self.nvars, len(self.terms))


def _lex_lead(p):
    return max(p.terms)


def poly_div_exact(num, den):
    """Exact multivariate division over FracK coefficients; None if not exact."""
    if num.is_zero():
        return num
    rem = dict(num.terms)
    q = {}
    dlead = _lex_lead(den)
    dc = den.terms[dlead]
    while rem:
        m = max(rem)
        e = tuple(a - b for a, b in zip(m, dlead))
        if any(x < 0 for x in e):
            return None
        coef = rem[m] / dc
        q[e] = coef
        for m2, c2 in den.terms.items():
            m3 = tuple(a + b for a, b in zip(e, m2))
            s = rem.get(m3)
            s = (-c2 * coef) if s is None else s - c2 * coef
            if s.is_zero():
                rem.pop(m3, None)
            else:
                rem[m3] = s
    return PolyN(num.nvars, q)


class ParamRational:
    """Rational function in the three group parameters over FracK coefficients.

    Denominator nonzero; reduction cancels the denominator when it divides the
    numerator exactly.  Equality and is_zero go through cross-multiplication,
    which is exact regardless of the stored representative.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = PolyN.const(num.nvars, _FK_ONE)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = PolyN.const(num.nvars, _FK_ONE)
            return
        q = poly_div_exact(num, den)
        if q is not None:
            num, den = q, PolyN.const(num.nvars, _FK_ONE)
        else:
            lead = den.terms[_lex_lead(den)]
            if lead != _FK_ONE:
                inv = lead.inv()
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p):
        return ParamRational(p)

    @staticmethod
    def const(nvars, c):
        return ParamRational(PolyN.const(nvars, c))

    def __add__(self, other):
        if self.den == other.den:
            return ParamRational(self.num + other.num, self.den)
        return ParamRational(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ParamRational(-self.num, self.den)

    def __mul__(self, other):
        return ParamRational(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return ParamRational(self.num * other.den, self.den * other.num)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (self.num * other.den - other.num * self.den).is_zero()

    def __repr__(self):
        return "ParamRational(%r / %r)" % (self.num, self.den)
