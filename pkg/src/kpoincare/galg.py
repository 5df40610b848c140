"""The deformed Poincare group algebra in 2+1 dimensions.

Generators x^mu (mu = 0,1,2) and Lorentz matrix entries L^mu_nu, subject to

    [x^mu, x^nu]   = (i/kappa) (d0^mu x^nu - d0^nu x^mu)
    [L^mu_nu, x^r] = -(i/kappa) ((L^mu_0 - d^mu_0) L^r_nu + (L^0_nu - d^0_nu) g^{mu r})

with metric g = diag(+,-,-); the L entries commute among themselves.  Normal
order puts all x factors left of all L factors, x^0 leftmost, and the L word
sorted.  Equality is tested modulo the Lorentz orthogonality relations via an
exact rational parametrization of both connected components of the group.
"""

from fractions import Fraction

from .scalars import (K, K_ONE, K_ZERO, QQi, QI_ONE, QI_ZERO, FracK, PolyN)

G = (1, -1, -1)  # metric diag(+,-,-); equal to its inverse

ZERO_X = (0, 0, 0)
ONE_MONO = (ZERO_X, ())


def eps3(a, b, c):
    """Totally antisymmetric symbol, eps(0,1,2) = +1.

    Numerically equal with all indices up or down for this metric."""
    if (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        return 1
    if (a, b, c) in ((0, 2, 1), (2, 1, 0), (1, 0, 2)):
        return -1
    return 0


def xgen(mu):
    return ("x", mu)


def lgen(mu, nu):
    return ("L", mu, nu)


# -- monomial arithmetic ------------------------------------------------------
#
# A monomial is (xexp, lword): xexp = (a0,a1,a2) for (x^0)^a0 (x^1)^a1 (x^2)^a2,
# lword a sorted tuple of (mu,nu) pairs.

_I_OVER_K = K.i(-1)          # i/kappa
_MINUS_I_OVER_K = -_I_OVER_K


def _comm_L_x(mu, nu, rho):
    """[L^mu_nu, x^rho] as a pure-L term dict {lword: K}."""
    t = {}
    def put(word, c):
        word = tuple(sorted(word))
        s = t.get(word, K_ZERO) + c
        if s.is_zero():
            t.pop(word, None)
        else:
            t[word] = s
    put(((mu, 0), (rho, nu)), _MINUS_I_OVER_K)
    if mu == 0:
        put(((rho, nu),), _I_OVER_K)
    gmr = G[mu] if mu == rho else 0
    if gmr:
        put(((0, nu),), _MINUS_I_OVER_K.scale(QQi(gmr)))
        if nu == 0:
            put((), _I_OVER_K.scale(QQi(gmr)))
    return t


_COMM_LX = {(mu, nu, rho): _comm_L_x(mu, nu, rho)
            for mu in range(3) for nu in range(3) for rho in range(3)}

_LWORD_X_MEMO = {}


def _lword_x(lword, rho):
    """Normal order lword * x^rho; returns {(xexp, lword): K}."""
    key = (lword, rho)
    hit = _LWORD_X_MEMO.get(key)
    if hit is not None:
        return hit
    if not lword:
        xe = tuple(1 if j == rho else 0 for j in range(3))
        out = {(xe, ()): K_ONE}
        _LWORD_X_MEMO[key] = out
        return out
    head, rest = lword[0], lword[1:]
    out = {}
    sub = _lword_x(rest, rho)
    comm = _COMM_LX[(head[0], head[1], rho)]
    for (xe, w), c in sub.items():
        w2 = tuple(sorted((head,) + w))
        _acc(out, (xe, w2), c)
        if any(xe):
            # head still crosses x^rho: head x^rho = x^rho head + [head, x^rho]
            for cw, cc in comm.items():
                w3 = tuple(sorted(cw + w))
                _acc(out, (ZERO_X, w3), c * cc)
    _LWORD_X_MEMO[key] = out
    return out


def _acc(d, key, c):
    s = d.get(key)
    if s is None:
        if not c.is_zero():
            d[key] = c
    else:
        s = s + c
        if s.is_zero():
            del d[key]
        else:
            d[key] = s


def _xblock_mul(a, e):
    """Product of two normal x blocks: x^a * x^e, as {xexp: K}.

    Uses the shift rule u f(x^0) = f(x^0 - i*deg(u)/kappa) u for u a monomial
    in x^1, x^2."""
    d = a[1] + a[2]
    out = {}
    if e[0] == 0 or d == 0:
        out[(a[0] + e[0], a[1] + e[1], a[2] + e[2])] = K_ONE
        return out
    # (x^1 x^2 block of a) * (x^0)^{e0} = sum_j C(e0,j) (-i d/k)^j (x^0)^{e0-j} * block
    shift = K.of(0, -d, -1)  # -i*d/kappa
    c = K_ONE
    binom = 1
    for j in range(e[0] + 1):
        coeff = c.scale(QQi(binom))
        out[(a[0] + e[0] - j, a[1] + e[1], a[2] + e[2])] = coeff
        c = c * shift
        binom = binom * (e[0] - j) // (j + 1)
    return out


_MUL_MEMO = {}


def mono_mul(m1, m2):
    """Normal-ordered product of two monomials, as {mono: K}."""
    key = (m1, m2)
    hit = _MUL_MEMO.get(key)
    if hit is not None:
        return hit
    (xa, wa), (xb, wb) = m1, m2
    # move x^xb through wa, one generator power at a time
    cur = {(ZERO_X, wa): K_ONE}
    for rho in range(3):
        for _ in range(xb[rho]):
            nxt = {}
            for (xe, w), c in cur.items():
                for (xe2, w2), c2 in _lword_x(w, rho).items():
                    cc = c * c2
                    for xen, c3 in _xblock_mul(xe, xe2).items():
                        _acc(nxt, (xen, w2), cc * c3)
            cur = nxt
    out = {}
    for (xe, w), c in cur.items():
        for xen, c2 in _xblock_mul(xa, xe).items():
            wn = tuple(sorted(w + wb))
            _acc(out, (xen, wn), c * c2)
    _MUL_MEMO[key] = out
    return out


def mono_deg(m):
    return sum(m[0]) + len(m[1])


# -- elements -----------------------------------------------------------------

class GroupElement:
    """Element of the group algebra: normal-ordered monomials with K coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    # constructors
    @staticmethod
    def zero():
        return GroupElement({}, _clean=True)

    @staticmethod
    def one():
        return GroupElement({ONE_MONO: K_ONE}, _clean=True)

    @staticmethod
    def scalar(c):
        if c.is_zero():
            return GroupElement({}, _clean=True)
        return GroupElement({ONE_MONO: c}, _clean=True)

    @staticmethod
    def from_mono(m, c=K_ONE):
        if c.is_zero():
            return GroupElement({}, _clean=True)
        return GroupElement({m: c}, _clean=True)

    @staticmethod
    def x(mu):
        xe = tuple(1 if j == mu else 0 for j in range(3))
        return GroupElement({(xe, ()): K_ONE}, _clean=True)

    @staticmethod
    def L(mu, nu):
        return GroupElement({(ZERO_X, ((mu, nu),)): K_ONE}, _clean=True)

    @staticmethod
    def gen(g):
        return GroupElement.x(g[1]) if g[0] == "x" else GroupElement.L(g[1], g[2])

    # ring structure
    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            _acc(t, m, c)
        return GroupElement(t, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GroupElement({m: -c for m, c in self.terms.items()}, _clean=True)

    def scale(self, c):
        if c.is_zero():
            return GroupElement({}, _clean=True)
        return GroupElement({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, cm in mono_mul(m1, m2).items():
                    _acc(out, m, c * cm)
        return GroupElement(out, _clean=True)

    def xdeg(self):
        return max((sum(m[0]) for m in self.terms), default=0)

    def deg(self):
        return max((mono_deg(m) for m in self.terms), default=0)

    # Hopf structure
    def coproduct(self):
        out = TensorElement(2)
        for m, c in self.terms.items():
            out = out.add(_mono_coproduct(m).scale(c))
        return out

    def antipode(self):
        out = GroupElement.zero()
        for m, c in self.terms.items():
            out = out + _mono_antipode(m).scale(c)
        return out

    def counit(self):
        acc = K_ZERO
        for m, c in self.terms.items():
            e = _mono_counit(m)
            if e:
                acc = acc + c
        return acc

    def star(self):
        """Antilinear anti-automorphism fixing the generators."""
        out = GroupElement.zero()
        for m, c in self.terms.items():
            out = out + _mono_star(m).scale(c.star())
        return out

    def is_zero(self):
        return element_is_zero(self)

    def equals(self, other):
        """Equality modulo the Lorentz orthogonality relations."""
        return (self - other).is_zero()

    def __repr__(self):
        from .printer import g_str
        return "GroupElement(%s)" % g_str(self)


def normal_form(word):
    """Normal form of sum of words; word = iterable of (K, [generators])."""
    out = GroupElement.zero()
    for c, gens in word:
        acc = GroupElement.scalar(c)
        for g in gens:
            acc = acc * GroupElement.gen(g)
        out = out + acc
    return out


# -- Hopf maps on monomials (memoized) ----------------------------------------

_COPROD_MEMO = {}
_ANTIPODE_MEMO = {}
_STAR_MEMO = {}


def _mono_factors(m):
    """Generator sequence of a monomial, in normal order."""
    xe, w = m
    seq = []
    for mu in range(3):
        seq.extend([xgen(mu)] * xe[mu])
    seq.extend(lgen(mu, nu) for (mu, nu) in w)
    return seq


def _gen_coproduct(g):
    t = TensorElement(2)
    if g[0] == "x":
        mu = g[1]
        for nu in range(3):
            t.put((GroupElement.L(mu, nu), GroupElement.x(nu)))
        t.put((GroupElement.x(mu), GroupElement.one()))
    else:
        mu, nu = g[1], g[2]
        for rho in range(3):
            t.put((GroupElement.L(mu, rho), GroupElement.L(rho, nu)))
    return t


def _mono_coproduct(m):
    hit = _COPROD_MEMO.get(m)
    if hit is not None:
        return hit
    out = TensorElement.unit(2)
    for g in _mono_factors(m):
        out = out.mul(_gen_coproduct(g))
    _COPROD_MEMO[m] = out
    return out


def _gen_antipode(g):
    if g[0] == "x":
        mu = g[1]
        out = GroupElement.zero()
        for nu in range(3):
            out = out + (GroupElement.L(nu, mu) * GroupElement.x(nu)).scale(
                K.of(-G[nu] * G[mu]))
        return out
    mu, nu = g[1], g[2]
    return GroupElement.L(nu, mu).scale(K.of(G[nu] * G[mu]))


def _mono_antipode(m):
    hit = _ANTIPODE_MEMO.get(m)
    if hit is not None:
        return hit
    out = GroupElement.one()
    for g in reversed(_mono_factors(m)):
        out = out * _gen_antipode(g)
    _ANTIPODE_MEMO[m] = out
    return out


def _mono_counit(m):
    xe, w = m
    if any(xe):
        return False
    return all(mu == nu for (mu, nu) in w)


def _mono_star(m):
    """Star of a monomial: reverse factor order (generators are selfadjoint)."""
    hit = _STAR_MEMO.get(m)
    if hit is not None:
        return hit
    out = GroupElement.one()
    for g in reversed(_mono_factors(m)):
        out = out * GroupElement.gen(g)
    _STAR_MEMO[m] = out
    return out


# -- tensors ------------------------------------------------------------------

class TensorElement:
    """Rank-n tensor over the group algebra: {(mono,...,mono): K}."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        self.terms = terms if terms is not None else {}

    @staticmethod
    def unit(rank):
        return TensorElement(rank, {(ONE_MONO,) * rank: K_ONE})

    def put(self, legs, c=K_ONE):
        """Accumulate a pure tensor of GroupElements (or monomials)."""
        legs = [l if isinstance(l, GroupElement) else GroupElement.from_mono(l)
                for l in legs]
        def rec(i, key, coeff):
            if i == len(legs):
                _acc(self.terms, tuple(key), coeff)
                return
            for m, cm in legs[i].terms.items():
                key.append(m)
                rec(i + 1, key, coeff * cm)
                key.pop()
        rec(0, [], c)
        return self

    def add(self, other):
        t = dict(self.terms)
        for ms, c in other.terms.items():
            _acc(t, ms, c)
        return TensorElement(self.rank, t)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        return TensorElement(self.rank, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        if c.is_zero():
            return TensorElement(self.rank)
        return TensorElement(self.rank, {m: v * c for m, v in self.terms.items()})

    def mul(self, other):
        """Componentwise product, normal ordering each leg."""
        out = TensorElement(self.rank)
        for ms1, c1 in self.terms.items():
            for ms2, c2 in other.terms.items():
                legpieces = [mono_mul(a, b) for a, b in zip(ms1, ms2)]
                c = c1 * c2
                def rec(i, key, coeff):
                    if i == self.rank:
                        _acc(out.terms, tuple(key), coeff)
                        return
                    for m, cm in legpieces[i].items():
                        key.append(m)
                        rec(i + 1, key, coeff * cm)
                        key.pop()
                rec(0, [], c)
        return out

    def apply_leg(self, i, f):
        """Apply mono -> GroupElement map to leg i, keeping the rest."""
        out = TensorElement(self.rank)
        for ms, c in self.terms.items():
            img = f(ms[i])
            for m2, c2 in img.terms.items():
                key = ms[:i] + (m2,) + ms[i + 1:]
                _acc(out.terms, key, c * c2)
        return out

    def coproduct_leg(self, i):
        """Replace leg i by its coproduct, raising the rank by one."""
        out = TensorElement(self.rank + 1)
        for ms, c in self.terms.items():
            for (m1, m2), c2 in _mono_coproduct(ms[i]).terms.items():
                key = ms[:i] + (m1, m2) + ms[i + 1:]
                _acc(out.terms, key, c * c2)
        return out

    def leg_group(self, i):
        """Group terms by the monomials of all legs except i: {rest: GroupElement}."""
        out = {}
        for ms, c in self.terms.items():
            rest = ms[:i] + ms[i + 1:]
            d = out.setdefault(rest, {})
            _acc(d, ms[i], c)
        return {k: GroupElement(v, _clean=True) for k, v in out.items()}

    def flatten(self):
        """Multiply all legs together (rank-1 collapse)."""
        out = GroupElement.zero()
        for ms, c in self.terms.items():
            acc = GroupElement.from_mono(ms[0], c)
            for m in ms[1:]:
                acc = acc * GroupElement.from_mono(m)
            out = out + acc
        return out

    def is_zero(self):
        return tensor_is_zero(self)

    def equals(self, other):
        return self.sub(other).is_zero()

    def __repr__(self):
        return "TensorElement(rank=%d, %d terms)" % (self.rank, len(self.terms))


# -- Lorentz parametrization and zero testing ---------------------------------
#
# Lambda(t1,t2,s) = R(s) B1(t1) B2(t2) with rational rotation and boosts covers
# a dense subset of the identity component; diag(-1,-1,1) * Lambda covers the
# other component of the special group.  A normal-form element is zero iff
# every x-monomial coefficient vanishes on both components.

def _mk_param_matrices():
    one = PolyN.const(3, K_ONE)
    zero = PolyN(3)
    def var(i, c=1):
        return PolyN.var(3, i, K.of(c))
    t1, t2, s = var(0), var(1), var(2)
    t1sq = t1 * t1
    t2sq = t2 * t2
    ssq = s * s
    qs = one + ssq            # 1 + s^2
    q1 = one - t1sq           # 1 - t1^2
    q2 = one - t2sq
    # numerators over the indicated denominators
    R = [[qs, zero, zero],
         [zero, one - ssq, var(2, -2)],
         [zero, var(2, 2), one - ssq]]
    B1 = [[one + t1sq, var(0, 2), zero],
          [var(0, 2), one + t1sq, zero],
          [zero, zero, q1]]
    B2 = [[one + t2sq, zero, var(1, 2)],
          [zero, q2, zero],
          [var(1, 2), zero, one + t2sq]]
    def matmul(A, B):
        return [[sum((A[i][k] * B[k][j] for k in range(3)), PolyN(3))
                 for j in range(3)] for i in range(3)]
    N = matmul(matmul(R, B1), B2)
    den = qs * q1 * q2
    N2 = [[(-N[i][j] if i < 2 else N[i][j]) for j in range(3)] for i in range(3)]
    return (N, N2), den


(_PARAM_N, _PARAM_N2), _PARAM_DEN = _mk_param_matrices()
_DEN_POWERS = [PolyN.const(3, K_ONE)]


def _den_power(n):
    while len(_DEN_POWERS) <= n:
        _DEN_POWERS.append(_DEN_POWERS[-1] * _PARAM_DEN)
    return _DEN_POWERS[n]


_SUBST_MEMO = ({}, {})


def subst_word(lword, comp):
    """Numerator polynomial of an L word on component comp (0 or 1)."""
    memo = _SUBST_MEMO[comp]
    hit = memo.get(lword)
    if hit is not None:
        return hit
    mats = _PARAM_N if comp == 0 else _PARAM_N2
    if not lword:
        out = PolyN.const(3, K_ONE)
    else:
        out = subst_word(lword[:-1], comp) * mats[lword[-1][0]][lword[-1][1]]
    memo[lword] = out
    return out


# Sample points for fast nonzero detection: (t1, t2, s) with t != +-1,
# plus an exact rational kappa value.  Evaluation at a valid group point being
# nonzero proves the element nonzero; the symbolic path proves zero.
_SAMPLES = [
    (Fraction(1, 2), Fraction(1, 3), Fraction(2)),
    (Fraction(-2, 5), Fraction(3, 7), Fraction(-1, 2)),
    (Fraction(4, 9), Fraction(-5, 8), Fraction(3, 5)),
]
_KAPPA_SAMPLE = QQi(Fraction(19, 7))

_EVAL_MEMO = {}


def _eval_word(lword, comp, si):
    key = (lword, comp, si)
    hit = _EVAL_MEMO.get(key)
    if hit is not None:
        return hit
    t1, t2, s = _SAMPLES[si]
    if not lword:
        out = QI_ONE
    else:
        num = QI_ZERO
        # evaluate entry numerator / den at the sample point
        mats = _PARAM_N if comp == 0 else _PARAM_N2
        entry = mats[lword[-1][0]][lword[-1][1]]
        for (e1, e2, e3), c in entry.terms.items():
            num = num + c.eval(_KAPPA_SAMPLE) * QQi(t1 ** e1 * t2 ** e2 * s ** e3)
        den = QQi((1 + s * s) * (1 - t1 * t1) * (1 - t2 * t2))
        out = _eval_word(lword[:-1], comp, si) * (num / den)
    _EVAL_MEMO[key] = out
    return out


def _lpoly_screen_nonzero(lpoly):
    """True if a {lword: K} polynomial is provably nonzero at a sample point."""
    for comp in (0, 1):
        for si in range(len(_SAMPLES)):
            acc = QI_ZERO
            for w, c in lpoly.items():
                cv = c.eval(_KAPPA_SAMPLE) if isinstance(c, K) else _frack_eval(c)
                acc = acc + cv * _eval_word(w, comp, si)
            if not acc.is_zero():
                return True
    return False


def _frack_eval(c):
    return c.num.eval(_KAPPA_SAMPLE) / c.den.eval(_KAPPA_SAMPLE)


def lpoly_is_zero(lpoly):
    """Exact zero test of {lword: K-or-FracK} on both group components."""
    if not lpoly:
        return True
    if _lpoly_screen_nonzero(lpoly):
        return False
    dmax = max(len(w) for w in lpoly)
    for comp in (0, 1):
        acc = PolyN(3)
        for w, c in lpoly.items():
            p = subst_word(w, comp)
            if len(w) < dmax:
                p = p * _den_power(dmax - len(w))
            if isinstance(c, FracK):
                # clear to K by multiplying through; zero-test is unaffected
                # as long as all coefficients are cleared consistently.
                raise TypeError("FracK coefficients must be cleared before lpoly_is_zero")
            acc = acc + p.scale(c)
        if not acc.is_zero():
            return False
    return True


def element_is_zero(e):
    """Zero test modulo Lorentz orthogonality, per x-monomial."""
    if not e.terms:
        return True
    byx = {}
    for (xe, w), c in e.terms.items():
        byx.setdefault(xe, {})[w] = c
    for lpoly in byx.values():
        if not lpoly_is_zero(lpoly):
            return False
    return True


# -- tensor zero test ----------------------------------------------------------
#
# A rank-n tensor is zero iff it vanishes with the group relations imposed
# independently in every leg.  The x monomials are a free module basis, and
# the Lorentz sector is canonicalized through the (kappa-free) Groebner normal
# form of the coordinate ring, so rewriting every leg onto (xexp, standard
# monomial) keys produces honest free coordinates.

def _nf_expand_leg(terms, leg):
    """Rewrite one leg of a tensor onto canonical quotient coordinates.

    Keys in that leg become (xexp, standard monomial) pairs; distinct keys are
    honest free-module coordinates of the leg, so per-key statements about the
    remaining legs are exact."""
    from .lgroeb import word_nf
    out = {}
    for ms, c in terms.items():
        xe, w = ms[leg]
        for std, q in word_nf(w).items():
            key = ms[:leg] + ((xe, std),) + ms[leg + 1:]
            s = out.get(key)
            cc = c.scale_q(q) if isinstance(c, FracK) else c.scale(QQi(q))
            if s is None:
                if not cc.is_zero():
                    out[key] = cc
            else:
                s = s + cc
                if s.is_zero():
                    del out[key]
                else:
                    out[key] = s
    return out


def _multilin_zero(terms, rank):
    """Exact zero test of a tensor with the group relations in every leg."""
    for leg in range(rank):
        terms = _nf_expand_leg(terms, leg)
        if not terms:
            return True
    return not terms


def split_against_leg(t, leg):
    """Decompose a rank-2 tensor over canonical coordinates of one leg.

    Returns {(xexp, standard monomial): {othermono: FracK}}; the tags index a
    free-module basis of the chosen leg modulo the group relations, so the
    tensor lies in (ideal) (x) (algebra) iff every component does."""
    if t.rank != 2:
        raise ValueError("rank-2 tensors only")
    from .lgroeb import word_nf
    other = 1 - leg
    out = {}
    for ms, c in t.terms.items():
        fc = c if isinstance(c, FracK) else FracK.from_k(c)
        xe, w = ms[leg]
        for std, q in word_nf(w).items():
            d = out.setdefault((xe, std), {})
            s = d.get(ms[other], FK_ZERO) + fc.scale_q(q)
            if s.is_zero():
                d.pop(ms[other], None)
            else:
                d[ms[other]] = s
    return {tag: vec for tag, vec in out.items() if vec}


FK_ZERO = FracK.zero()


def tensor_is_zero(t):
    if not t.terms:
        return True
    return _multilin_zero(t.terms, t.rank)
