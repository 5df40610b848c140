"""Tensor utilities on the group algebra: iterated coproducts, the adjoint
action, and the r / r^{-1} maps used to build invariant forms."""

from .galg import GroupElement, TensorElement, _mono_antipode, _mono_coproduct


def delta_n(a, n):
    """Iterated coproduct of rank n+1 (left iteration); n >= 1."""
    if n < 1:
        raise ValueError("delta_n needs n >= 1")
    t = a.coproduct()
    for _ in range(n - 1):
        t = t.coproduct_leg(0)
    return t


def ad(a):
    """Right adjoint action as a rank-2 tensor: sum b_k (x) S(a_k) c_k."""
    t3 = delta_n(a, 2)
    out = TensorElement(2)
    for (m1, m2, m3), c in t3.terms.items():
        sa = _mono_antipode(m1) * GroupElement.from_mono(m3)
        for ms, cs in sa.terms.items():
            key = (m2, ms)
            cur = out.terms.get(key)
            v = c * cs
            if cur is None:
                if not v.is_zero():
                    out.terms[key] = v
            else:
                cur = cur + v
                if cur.is_zero():
                    del out.terms[key]
                else:
                    out.terms[key] = cur
    return out


def r_map(t):
    """r(a (x) b) = (a (x) I) Delta(b) on rank-2 tensors."""
    out = TensorElement(2)
    for (m1, m2), c in t.terms.items():
        for (n1, n2), c2 in _mono_coproduct(m2).terms.items():
            piece = TensorElement(2)
            piece.put((GroupElement.from_mono(m1) * GroupElement.from_mono(n1),
                       GroupElement.from_mono(n2)), c * c2)
            out = out.add(piece)
    return out


def r_inv(t):
    """r^{-1}(a (x) b) = (a (x) I)(S (x) I) Delta(b) on rank-2 tensors."""
    out = TensorElement(2)
    for (m1, m2), c in t.terms.items():
        for (n1, n2), c2 in _mono_coproduct(m2).terms.items():
            piece = TensorElement(2)
            piece.put((GroupElement.from_mono(m1) * _mono_antipode(n1),
                       GroupElement.from_mono(n2)), c * c2)
            out = out.add(piece)
    return out
