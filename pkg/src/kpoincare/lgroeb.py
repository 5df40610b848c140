"""Canonical normal forms for polynomials in the Lorentz matrix entries.

The coordinate ring of the special pseudo-orthogonal group is the polynomial
ring in the nine entries modulo both orthogonality families and det = 1; the
relations are kappa-free, so a one-time Groebner basis over the rationals
(degrevlex) yields exact canonical coordinates.  Used to canonicalize tensor
legs; element-level zero testing goes through the rational parametrization.
"""

from gmpy2 import mpq as Fraction

_N = 9  # entries L[mu][nu] flattened as 3*mu + nu

_F0 = Fraction(0)
_F1 = Fraction(1)

_G = (1, -1, -1)


def _key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a, b):
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _lead(p):
    return max(p, key=_key)


def _addmul(p, mono, coef, q):
    """p += coef * x^mono * q, in place."""
    for m, c in q.items():
        mm = _mono_mul(m, mono)
        s = p.get(mm, _F0) + coef * c
        if s:
            p[mm] = s
        else:
            p.pop(mm, None)


def _reduce(p, basis):
    """Full normal form of p against the basis (list of (lead, poly))."""
    p = dict(p)
    out = {}
    while p:
        lm = _lead(p)
        lc = p[lm]
        hit = None
        for bl, bp in basis:
            q = _mono_div(lm, bl)
            if q is not None:
                hit = (q, bp, bl)
                break
        if hit is None:
            out[lm] = lc
            del p[lm]
            continue
        q, bp, bl = hit
        factor = lc / bp[bl]
        _addmul(p, q, -factor, bp)
        p.pop(lm, None)
    return out


def _e(mu, nu):
    m = [0] * _N
    m[3 * mu + nu] = 1
    return tuple(m)


def _relations():
    rels = []
    for mu in range(3):
        for nu in range(mu, 3):
            a, b = {}, {}
            for r in range(3):
                _addmul(a, (0,) * _N, Fraction(_G[r]), {_mono_mul(_e(mu, r), _e(nu, r)): _F1})
                _addmul(b, (0,) * _N, Fraction(_G[r]), {_mono_mul(_e(r, mu), _e(r, nu)): _F1})
            if mu == nu:
                for p in (a, b):
                    s = p.get((0,) * _N, _F0) - Fraction(_G[mu])
                    if s:
                        p[(0,) * _N] = s
                    else:
                        p.pop((0,) * _N, None)
            rels.append(a)
            rels.append(b)
    det = {}
    import itertools
    for perm in itertools.permutations(range(3)):
        sign = 1
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
        sign = -1 if inv % 2 else 1
        m = (0,) * _N
        for i in range(3):
            m = _mono_mul(m, _e(i, perm[i]))
        det[m] = det.get(m, _F0) + Fraction(sign)
    det[(0,) * _N] = det.get((0,) * _N, _F0) - _F1
    rels.append({m: c for m, c in det.items() if c})
    return rels


def _buchberger(gens):
    import heapq
    basis = []
    for g in gens:
        g = _reduce(g, basis)
        if g:
            lc = g[_lead(g)]
            g = {m: c / lc for m, c in g.items()}
            basis.append((_lead(g), g))
    pairs = [(_key(_mono_lcm(basis[i][0], basis[j][0])), i, j)
             for i in range(len(basis)) for j in range(i)]
    heapq.heapify(pairs)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        li, pi = basis[i]
        lj, pj = basis[j]
        lcm = _mono_lcm(li, lj)
        if _mono_mul(li, lj) == lcm:  # coprime leads: s-poly reduces to zero
            continue
        s = {}
        _addmul(s, _mono_div(lcm, li), _F1, pi)
        _addmul(s, _mono_div(lcm, lj), -_F1, pj)
        s = _reduce(s, basis)
        if s:
            lc = s[_lead(s)]
            s = {m: c / lc for m, c in s.items()}
            k = len(basis)
            basis.append((_lead(s), s))
            for t in range(k):
                heapq.heappush(pairs, (_key(_mono_lcm(basis[k][0], basis[t][0])), k, t))
    # interreduce
    final = []
    for idx, (l, p) in enumerate(basis):
        others = [basis[t] for t in range(len(basis)) if t != idx]
        if any(_mono_div(l, ol) is not None for ol, _ in others):
            continue
        p = _reduce(p, others)
        if p:
            lc = p[_lead(p)]
            p = {m: c / lc for m, c in p.items()}
            final.append((_lead(p), p))
    final.sort(key=lambda lp: _key(lp[0]))
    return final


_GB = None


def groebner_basis():
    global _GB
    if _GB is None:
        _GB = _buchberger(_relations())
    return _GB


_NF_MEMO = {}


def word_nf(word):
    """Canonical form of an L word: {standard 9-tuple monomial: Fraction}."""
    hit = _NF_MEMO.get(word)
    if hit is not None:
        return hit
    if not word:
        out = {(0,) * _N: _F1}
    else:
        head = word[:-1]
        mu, nu = word[-1]
        prev = word_nf(head)
        p = {}
        em = _e(mu, nu)
        for m, c in prev.items():
            p[_mono_mul(m, em)] = c
        out = _reduce(p, groebner_basis())
    _NF_MEMO[word] = out
    return out
