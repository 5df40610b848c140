"""Sparse exact linear algebra over the kappa rational-function field."""

from .scalars import FracK

FK0 = FracK.zero()
FK1 = FracK.one()

_MARK = "__c__"


def _is_marker(k):
    return type(k) is tuple and len(k) == 2 and k[0] is _MARK


class Echelon:
    """Row space in reduced echelon form over FracK.

    Rows are dicts key -> FracK with a designated pivot key of coefficient 1;
    every row is fully reduced against all other pivots, so reduction of a new
    vector is a single pass.  Marker keys (used for coordinate tracking) are
    only chosen as pivots when a row has nothing else.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> row dict

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return vec modulo the row space (vec is consumed)."""
        for pk in list(vec):
            row = self.rows.get(pk)
            if row is None:
                continue
            c = vec.get(pk)
            if c is None or c.is_zero():
                vec.pop(pk, None)
                continue
            for k2, v2 in row.items():
                s = vec.get(k2, FK0) - c * v2
                if s.is_zero():
                    vec.pop(k2, None)
                else:
                    vec[k2] = s
        return {k: v for k, v in vec.items() if not v.is_zero()}

    def add(self, vec):
        """Insert a vector; returns the new pivot key or None if dependent."""
        vec = self.reduce(dict(vec))
        if not vec:
            return None
        real = [k for k in vec if not _is_marker(k)]
        pool = real if real else list(vec)
        pk = min(pool, key=lambda k: (len(vec[k].num.terms) + len(vec[k].den.terms), repr(k)))
        piv = vec[pk]
        if piv != FK1:
            inv = piv.inv()
            vec = {k: v * inv for k, v in vec.items()}
        for opk, orow in self.rows.items():
            c = orow.get(pk)
            if c is None or c.is_zero():
                continue
            for k2, v2 in vec.items():
                s = orow.get(k2, FK0) - c * v2
                if s.is_zero():
                    orow.pop(k2, None)
                else:
                    orow[k2] = s
        self.rows[pk] = vec
        return pk


def solve_exact(columns, target):
    """Solve sum_i c_i * columns[i] = target exactly over FracK.

    columns: list of dicts; target: dict.  Returns (coords, ok): coords is a
    list of FracK with ok True iff the system is consistent; any column
    dependencies resolve deterministically."""
    ech = Echelon()
    for i, col in enumerate(columns):
        v = dict(col)
        v[(_MARK, i)] = FK1
        ech.add(v)
    res = ech.reduce(dict(target))
    coords = [FK0] * len(columns)
    ok = True
    for k, val in res.items():
        if _is_marker(k):
            coords[k[1]] = -val
        elif not val.is_zero():
            ok = False
    return coords, ok
