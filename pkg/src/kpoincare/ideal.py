"""The ad-invariant right ideal determining the eight-dimensional calculus.

Generators: quadratic products of the off-unit Lorentz entries, an improved
three-index family (with its totally antisymmetric part subtracted), and the
symmetrized x-quadratic family with its trace subtracted.  Reduction of any
counit-free element modulo the ideal is done by exact linear algebra on a
graded slice: degree-bounded right multiples of the generators together with
commutative multiples of the orthogonality relations.
"""

import itertools
from dataclasses import dataclass

from .scalars import K, K_ONE, K_ZERO, QQi, FracK, Fraction
from .galg import (G, GroupElement, TensorElement, ZERO_X, ONE_MONO, eps3,
                   mono_deg, element_is_zero, tensor_is_zero)
from .hopftools import ad
from .linalg import Echelon, solve_exact, FK0, FK1

L_INDICES = [(m, n) for m in range(3) for n in range(3)]


def delta_entry(mu, nu):
    """L^mu_nu - d^mu_nu."""
    e = GroupElement.L(mu, nu)
    if mu == nu:
        e = e - GroupElement.one()
    return e


def phi_element():
    """The invariant scalar x^2 + (2i/kappa) x^0 spanning the extra dimension."""
    out = GroupElement.zero()
    for mu in range(3):
        out = out + (GroupElement.x(mu) * GroupElement.x(mu)).scale(K.of(G[mu]))
    return out + GroupElement.x(0).scale(K.of(0, 2, -1))


def dmix(mu, nu, alpha, variant="corrected"):
    """Three-index generator with mixed indices (up, down, up).

    variant selects the trailing Kronecker delta: the as-printed index
    placement d^mu_nu (which fails to be counit-free) or the corrected
    d^alpha_nu."""
    out = GroupElement.x(alpha) * delta_entry(mu, nu)
    corr = GroupElement.zero()
    if nu == 0:
        # L^{mu alpha} - g^{mu alpha}
        corr = corr + GroupElement.L(mu, alpha).scale(K.of(G[alpha]))
        if mu == alpha:
            corr = corr - GroupElement.scalar(K.of(G[mu]))
    tail = delta_entry(alpha, nu) if variant == "corrected" else (
        GroupElement.L(alpha, nu) - (GroupElement.one() if mu == nu else GroupElement.zero()))
    corr = corr + GroupElement.L(mu, 0) * tail
    return out - corr.scale(K.i(-1))


def t_upper(mu, nu, alpha, variant="corrected"):
    """All-up three-index generator (middle index raised with the metric)."""
    return dmix(mu, nu, alpha, variant).scale(K.of(G[nu]))


def scalar_delta(variant="corrected"):
    """The antisymmetric scalar eps_{mu nu a} T^{mu nu a}."""
    out = GroupElement.zero()
    for mu, nu, al in itertools.permutations(range(3)):
        out = out + t_upper(mu, nu, al, variant).scale(K.of(eps3(mu, nu, al)))
    return out


def x_upper(mu, nu):
    """Symmetric x-quadratic x^mu x^nu + (i/k)(g^{mu nu} x^0 - g^{0 mu} x^nu)."""
    out = GroupElement.x(mu) * GroupElement.x(nu)
    if mu == nu:
        out = out + GroupElement.x(0).scale(K.of(0, G[mu], -1))
    if mu == 0:
        out = out - GroupElement.x(nu).scale(K.i(-1))
    return out


def ttilde(mu, nu, alpha, variant="corrected"):
    """Three-index generator with the antisymmetric part subtracted."""
    t = t_upper(mu, nu, alpha, variant)
    s = scalar_delta(variant).scale(K.of(Fraction(-1, 6)))
    if variant == "corrected":
        e = eps3(mu, nu, alpha)
        return t + s.scale(K.of(e)) if e else t
    return t + s


def xtilde(mu, nu):
    """x-quadratic with the trace subtracted."""
    out = x_upper(mu, nu)
    if mu == nu:
        out = out - phi_element().scale(K.of(Fraction(G[mu], 3)))
    return out


@dataclass(frozen=True)
class IdealGenerator:
    kind: str          # "QUAD" | "TTILDE" | "XTILDE"
    indices: tuple
    element: GroupElement


def generators(variant="corrected"):
    """Spanning set of ideal generators (counit-free for the corrected variant)."""
    gens = []
    for i, p1 in enumerate(L_INDICES):
        for p2 in L_INDICES[i:]:
            gens.append(IdealGenerator("QUAD", (p1, p2),
                                       delta_entry(*p1) * delta_entry(*p2)))
    for mu in range(3):
        for nu in range(3):
            for al in range(3):
                gens.append(IdealGenerator("TTILDE", (mu, nu, al),
                                           ttilde(mu, nu, al, variant)))
    for mu in range(3):
        for nu in range(mu, 3):
            gens.append(IdealGenerator("XTILDE", (mu, nu), xtilde(mu, nu)))
    return gens


def orth_relations():
    """Both Lorentz orthogonality families, as pure-L elements."""
    rels = []
    for mu in range(3):
        for nu in range(mu, 3):
            a = GroupElement.zero()
            b = GroupElement.zero()
            for r in range(3):
                a = a + (GroupElement.L(mu, r) * GroupElement.L(nu, r)).scale(K.of(G[r]))
                b = b + (GroupElement.L(r, mu) * GroupElement.L(r, nu)).scale(K.of(G[r]))
            if mu == nu:
                a = a - GroupElement.scalar(K.of(G[mu]))
                b = b - GroupElement.scalar(K.of(G[mu]))
            rels.append(a)
            rels.append(b)
    return rels


def monomials_upto(dmax, dx_max=None, dl_max=None):
    """All normal-ordered monomials with the given degree bounds."""
    if dx_max is None:
        dx_max = dmax
    if dl_max is None:
        dl_max = dmax
    out = []
    for dx in range(min(dx_max, dmax) + 1):
        xes = [xe for xe in itertools.product(range(dx + 1), repeat=3) if sum(xe) == dx]
        for dl in range(min(dl_max, dmax - dx) + 1):
            for w in itertools.combinations_with_replacement(L_INDICES, dl):
                for xe in xes:
                    out.append((xe, tuple(sorted(w))))
    return out


def _to_vec(e):
    if isinstance(e, GroupElement):
        return {m: FracK.from_k(c) for m, c in e.terms.items()}
    return {m: (c if isinstance(c, FracK) else FracK.from_k(c)) for m, c in e.items()}


@dataclass
class QuotientCoords:
    """Coordinates on the eight-dimensional quotient basis."""
    cx: tuple       # x^0, x^1, x^2
    cL: tuple       # L^0_1, L^0_2, L^1_2
    cphi: object    # the scalar phi
    cdelta: object  # the antisymmetric scalar

    def aslist(self):
        return list(self.cx) + list(self.cL) + [self.cphi, self.cdelta]

    def is_zero(self):
        return all(c.is_zero() for c in self.aslist())


class ReduceError(Exception):
    pass


BASIS_LABELS = ("x0", "x1", "x2", "L[0,1]", "L[0,2]", "L[1,2]", "phi", "delta")


def quotient_basis(variant="corrected"):
    return [GroupElement.x(0), GroupElement.x(1), GroupElement.x(2),
            GroupElement.L(0, 1), GroupElement.L(0, 2), GroupElement.L(1, 2),
            phi_element(), scalar_delta(variant)]


class _Slice:
    def __init__(self, echelon, nmono, basis_residuals):
        self.echelon = echelon
        self.nmono = nmono
        self.basis_residuals = basis_residuals


class QuotientContext:
    """Graded-slice reduction machinery for a fixed generator variant."""

    def __init__(self, variant="corrected"):
        self.variant = variant
        self.generators = generators(variant)
        self.basis = quotient_basis(variant)
        self.orth = orth_relations()
        self._slices = {}

    def slice(self, dmax):
        s = self._slices.get(dmax)
        if s is not None:
            return s
        ech = Echelon()
        count = 0
        mults = monomials_upto(dmax - 2)
        for g in self.generators:
            ge = g.element
            for m in mults:
                col = ge * GroupElement.from_mono(m)
                if ech.add(_to_vec(col)) is not None:
                    count += 1
        for o in self.orth:
            for m in mults:
                col = GroupElement.from_mono(m) * o
                if ech.add(_to_vec(col)) is not None:
                    count += 1
        nmono = len(monomials_upto(dmax))
        residuals = [ech.reduce(_to_vec(b)) for b in self.basis]
        s = _Slice(ech, nmono, residuals)
        self._slices[dmax] = s
        return s

    def quotient_dim(self, dmax):
        """dim(ker counit up to degree dmax) minus the rank of the ideal slice."""
        s = self.slice(dmax)
        return (s.nmono - 1) - s.echelon.rank

    def reduce(self, a, dmax=None, check_counit=True):
        """Quotient coordinates of a counit-free element modulo the ideal slice."""
        if isinstance(a, GroupElement):
            if check_counit and not a.counit().is_zero():
                raise ReduceError("input has nonzero counit")
            if dmax is None:
                dmax = max(2, a.deg())
        elif dmax is None:
            dmax = max(2, max((mono_deg(m) for m in a), default=0))
        s = self.slice(dmax)
        res = s.echelon.reduce(_to_vec(a))
        coords, ok = solve_exact(s.basis_residuals, res)
        if not ok:
            raise ReduceError("not reducible at degree %d" % dmax)
        ks = [c.to_k() for c in coords]
        return QuotientCoords(cx=tuple(ks[0:3]), cL=tuple(ks[3:6]),
                              cphi=ks[6], cdelta=ks[7])

    def member(self, a, dmax=None):
        """True iff the element certifies as an ideal member at the bound."""
        try:
            coords = self.reduce(a, dmax)
        except ReduceError:
            return False
        return all(c.is_zero() for c in coords.aslist())

    # -- verification reports ------------------------------------------------

    def counit_check(self):
        out = []
        for g in self.generators:
            ok = g.element.counit().is_zero()
            out.append(("kereps/%s%s" % (g.kind, list(g.indices)), ok, ""))
        return out

    def ad_invariance_check(self, dmax=3):
        """First legs of ad(generator) reduce to zero quotient coordinates.

        The tensor is decomposed against linearly independent second-leg
        functions, so the per-component reductions certify membership of the
        whole tensor in (ideal) (x) algebra."""
        from .galg import split_against_leg
        out = []
        for g in self.generators:
            t = ad(g.element)
            comps = split_against_leg(t, 1)
            bad = None
            for tag, vec in comps.items():
                eps = FK0
                for m, c in vec.items():
                    if all(p == q for (p, q) in m[1]) and not any(m[0]):
                        eps = eps + c
                if not eps.is_zero():
                    bad = "counit leak at %r" % (tag,)
                    break
                vec = {m: c for m, c in vec.items()}
                try:
                    coords, ok = self._reduce_vec(vec, dmax)
                except ReduceError as exc:
                    bad = str(exc)
                    break
                if not ok:
                    bad = "component not reducible at degree %d" % dmax
                    break
                if any(not c.is_zero() for c in coords):
                    bad = "nonzero quotient coordinates at %r" % (tag,)
                    break
            out.append(("adinv/%s%s" % (g.kind, list(g.indices)), bad is None,
                        bad or ""))
        return out

    def _reduce_vec(self, vec, dmax):
        s = self.slice(dmax)
        res = s.echelon.reduce(dict(vec))
        return solve_exact(s.basis_residuals, res)

    def star_closure_check(self):
        """S(g)* is an ideal member for every generator (bounded degree)."""
        out = []
        for g in self.generators:
            e = g.element.antipode().star()
            d = max(2, e.deg())
            ok = self.member(e, d)
            out.append(("starclose/%s%s" % (g.kind, list(g.indices)), ok,
                        "" if ok else "S(g)* not certified at degree %d" % d))
        return out
