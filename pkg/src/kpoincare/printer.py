"""Deterministic, re-parsable string forms for algebra elements.

The output is valid input for the expression DSL in `dsl`: generators x0..x2,
L[m,n], P0..P2, E, Einv, M, N1, N2, w[m,n], w0..w2, w, Om; scalars are
rationals, I and k with integer powers.
"""

from .scalars import k_str


def coeff_str(c):
    """Kappa-scalar as a DSL factor, parenthesized when needed."""
    s = k_str(c)
    if " + " in s or " - " in s:
        return "(%s)" % s
    if s.startswith("-") and ("*" in s or "/" in s or s[1:] not in ("I",) and not s[1:].isdigit()):
        return "(%s)" % s
    if "/" in s and "*" in s:
        return "(%s)" % s
    return s


def mono_str(m):
    xe, w = m
    bits = []
    for mu in range(3):
        if xe[mu] == 1:
            bits.append("x%d" % mu)
        elif xe[mu] > 1:
            bits.append("x%d^%d" % (mu, xe[mu]))
    for (mu, nu) in w:
        bits.append("L[%d,%d]" % (mu, nu))
    return "*".join(bits) if bits else "1"


def _join(parts):
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _term_str(cs, ms):
    if ms == "1":
        return cs
    if cs == "1":
        return ms
    if cs == "-1":
        return "-" + ms
    return "%s*%s" % (cs, ms)


def g_str(e):
    """Group algebra element as a DSL expression string."""
    if not e.terms:
        return "0"
    keys = sorted(e.terms, key=lambda m: (sum(m[0]) + len(m[1]), m))
    return _join([_term_str(coeff_str(e.terms[m]), mono_str(m)) for m in keys])


def dual_mono_str(m):
    k, a, b, c, mm, n1, n2 = m
    bits = []
    if k == 1:
        bits.append("E")
    elif k == -1:
        bits.append("Einv")
    elif k > 1:
        bits.append("E^%d" % k)
    elif k < -1:
        bits.append("Einv^%d" % (-k))
    for name, p in (("P0", a), ("P1", b), ("P2", c), ("M", mm), ("N1", n1), ("N2", n2)):
        if p == 1:
            bits.append(name)
        elif p > 1:
            bits.append("%s^%d" % (name, p))
    return "*".join(bits) if bits else "1"


def d_str(e):
    """Dual algebra element as a DSL expression string."""
    if not e.terms:
        return "0"
    keys = sorted(e.terms, key=lambda m: (sum(abs(x) for x in m), m))
    return _join([_term_str(coeff_str(e.terms[m]), dual_mono_str(m)) for m in keys])


FORM_NAMES = ("w[0,1]", "w[0,2]", "w[1,2]", "w0", "w1", "w2", "w", "Om")


def form1_str(f):
    bits = []
    for i in range(8):
        a = f.coeffs.get(i)
        if a is None or not a.terms:
            continue
        cs = g_str(a)
        if " + " in cs or " - " in cs or "*" in cs or cs.startswith("-"):
            cs = "(%s)" % cs
        bits.append(FORM_NAMES[i] if cs == "1" else "%s*%s" % (cs, FORM_NAMES[i]))
    return _join(bits)


def form2_str(f):
    bits = []
    for (i, j) in sorted(f.coeffs):
        a = f.coeffs[(i, j)]
        if not a.terms:
            continue
        cs = g_str(a)
        if " + " in cs or " - " in cs or "*" in cs or cs.startswith("-"):
            cs = "(%s)" % cs
        pair = "wedge(%s,%s)" % (FORM_NAMES[i], FORM_NAMES[j])
        bits.append(pair if cs == "1" else "%s*%s" % (cs, pair))
    return _join(bits)
