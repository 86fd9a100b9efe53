"""Exact linear algebra over the rationals, prime fields and the integers.

Everything downstream (cochain differentials, normalizer systems, torsion
extraction) reduces to four primitives on exact matrices:

    rank            -- over a field, by sparse elimination
    kernel_basis    -- over a field, reduced-echelon normalized
    solve           -- over a field, leftmost-pivot particular solution
    smith_normal_form -- over the integers, invariant factors d1 | d2 | ...

Matrices are stored sparsely as a map (row, col) -> nonzero scalar.  Scalars
are `Fraction` over Q, plain `int` over Z, and residues in [0, p) over F_p.
Elimination over Q is fraction-free: rows are scaled to integers and updated
by two-term integer combinations with gcd stripping, so intermediate swell
stays bounded by minors of the input.

Pivot choices are deterministic.  Echelon-producing routines (kernel_basis,
solve) sweep pivot columns left to right taking the smallest usable row
index; the rank and Smith routines pick sparsity-friendly pivots with fixed
tie-breaking, which affects speed only, never the answer.

>>> m = Mat.from_rows([[1, 1]], QQ)
>>> kernel_basis(m)
[(Fraction(-1, 1), Fraction(1, 1))]
>>> smith_normal_form(Mat.from_rows([[2, 4], [6, 8]], ZZ)).invariant_factors
(2, 4)
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class DomainNotField(TypeError):
    """Raised when a field-only operation is applied over the integers."""


class _NoSolution:
    """Sentinel returned by solve() for inconsistent systems."""

    def __repr__(self):
        return "NoSolution"

    def __bool__(self):
        return False


NoSolution = _NoSolution()


# ---------------------------------------------------------------------------
# coefficient domains


class _Rationals:
    is_field = True
    characteristic = 0
    name = "Q"

    def normalize(self, x):
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "QQ"


class _Integers:
    is_field = False
    characteristic = 0
    name = "Z"

    def normalize(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError("non-integer value %r over Z" % (x,))
            return x.numerator
        return int(x)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        raise DomainNotField("Z is not a field")

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "ZZ"


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class GF:
    """The prime field F_p; values are residues in [0, p)."""

    is_field = True
    name = "Fp"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        self.p = p
        self.characteristic = p

    def normalize(self, x):
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = _Rationals()
ZZ = _Integers()


# ---------------------------------------------------------------------------
# matrices


class Mat:
    """Immutable-by-convention sparse matrix over one coefficient domain."""

    __slots__ = ("rows", "cols", "domain", "_d")

    def __init__(self, rows, cols, domain, entries=None):
        self.rows = rows
        self.cols = cols
        self.domain = domain
        self._d = {}
        if entries:
            for (i, j), v in entries.items():
                v = domain.normalize(v)
                if not domain.is_zero(v):
                    if not (0 <= i < rows and 0 <= j < cols):
                        raise IndexError((i, j))
                    self._d[(i, j)] = v

    @classmethod
    def from_rows(cls, data, domain):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        ent = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                ent[(i, j)] = v
        return cls(rows, cols, domain, ent)

    @classmethod
    def zeros(cls, rows, cols, domain):
        return cls(rows, cols, domain)

    @classmethod
    def identity(cls, n, domain):
        return cls(n, n, domain, {(i, i): 1 for i in range(n)})

    def entry(self, i, j):
        return self._d.get((i, j), self.domain.zero())

    def iter_entries(self):
        return iter(sorted(self._d.items()))

    def nnz(self):
        return len(self._d)

    def is_zero(self):
        return not self._d

    def to_rows(self):
        out = [[self.domain.zero()] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._d.items():
            out[i][j] = v
        return out

    def transpose(self):
        return Mat(self.cols, self.rows, self.domain,
                   {(j, i): v for (i, j), v in self._d.items()})

    def change_domain(self, domain):
        return Mat(self.rows, self.cols, domain, dict(self._d))

    def add(self, other):
        self._check_compatible(other)
        ent = dict(self._d)
        dom = self.domain
        for k, v in other._d.items():
            ent[k] = dom.add(ent.get(k, dom.zero()), v)
        return Mat(self.rows, self.cols, dom, ent)

    def neg(self):
        dom = self.domain
        return Mat(self.rows, self.cols, dom,
                   {k: dom.neg(v) for k, v in self._d.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        dom = self.domain
        c = dom.normalize(c)
        return Mat(self.rows, self.cols, dom,
                   {k: dom.mul(v, c) for k, v in self._d.items()})

    def mul(self, other):
        if self.cols != other.rows or self.domain != other.domain:
            raise ValueError("incompatible shapes/domains for product")
        dom = self.domain
        by_row = {}
        for (i, k), v in other._d.items():
            by_row.setdefault(i, []).append((k, v))
        acc = {}
        for (i, j), v in self._d.items():
            for k, w in by_row.get(j, ()):
                key = (i, k)
                acc[key] = dom.add(acc.get(key, dom.zero()), dom.mul(v, w))
        return Mat(self.rows, other.cols, dom, acc)

    def apply(self, vec):
        """Matrix-vector product; vec is a sequence of length self.cols."""
        dom = self.domain
        out = [dom.zero()] * self.rows
        for (i, j), v in self._d.items():
            out[i] = dom.add(out[i], dom.mul(v, dom.normalize(vec[j])))
        return tuple(out)

    def _check_compatible(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        if self.domain != other.domain:
            raise ValueError("domain mismatch")

    def __eq__(self, other):
        return (isinstance(other, Mat)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.domain == other.domain
                and self._d == other._d)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._d.items())))

    def __repr__(self):
        return "Mat(%dx%d over %r, %d nonzero)" % (
            self.rows, self.cols, self.domain, len(self._d))


# ---------------------------------------------------------------------------
# dense reduced row echelon form (workhorse for kernel_basis / solve)


def _rref_dense(rows, ncols, domain):
    """In-place RREF on a list of dense rows; returns list of pivot columns.

    Pivot sweep is left to right over the columns; within a column the
    surviving row with the smallest index is the pivot row.
    """
    pivots = []
    prow = 0
    nrows = len(rows)
    for col in range(ncols):
        sel = None
        for r in range(prow, nrows):
            if not domain.is_zero(rows[r][col]):
                sel = r
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        inv = domain.inv(rows[prow][col])
        if inv != domain.one():
            rows[prow] = [domain.mul(inv, v) for v in rows[prow]]
        for r in range(nrows):
            if r != prow and not domain.is_zero(rows[r][col]):
                f = rows[r][col]
                rowp = rows[prow]
                rows[r] = [domain.sub(rows[r][j], domain.mul(f, rowp[j]))
                           for j in range(ncols)]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return pivots


def _require_field(m):
    if not m.domain.is_field:
        raise DomainNotField(
            "operation needs a field; use smith_normal_form over Z")


# ---------------------------------------------------------------------------
# rank


def _strip_row_gcd(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _int_rows_from_fractions(m):
    """Per-row integer scaling of a Q-matrix (rank is scaling-invariant)."""
    rows = {}
    for (i, j), v in m._d.items():
        rows.setdefault(i, {})[j] = v
    out = []
    for i in sorted(rows):
        row = rows[i]
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        irow = {j: int(v * den) for j, v in row.items()}
        out.append(_strip_row_gcd(irow))
    return out


def _rank_sparse_int(rows):
    """Rank over Q of integer sparse rows by fraction-free elimination."""
    live = {i: r for i, r in enumerate(rows) if r}
    col_index = {}
    for i, r in live.items():
        for j in r.keys():
            col_index.setdefault(j, set()).add(i)
    rank = 0
    while live:
        # cheapest surviving row; ties broken by original index
        pi = min(live, key=lambda i: (len(live[i]), i))
        prow = live.pop(pi)
        rank += 1
        # pivot entry: smallest magnitude, then smallest column
        pj = min(prow, key=lambda j: (abs(prow[j]), j))
        pv = prow[pj]
        for j in prow:
            col_index[j].discard(pi)
        targets = [t for t in col_index.get(pj, ()) if t in live]
        for t in targets:
            trow = live[t]
            tv = trow[pj]
            for j in trow:
                col_index[j].discard(t)
            # integer two-term update: pv*trow - tv*prow
            new = {}
            for j, v in trow.items():
                new[j] = pv * v
            for j, v in prow.items():
                w = new.get(j, 0) - tv * v
                if w:
                    new[j] = w
                elif j in new:
                    del new[j]
            if new:
                _strip_row_gcd(new)
                live[t] = new
                for j in new:
                    col_index.setdefault(j, set()).add(t)
            else:
                del live[t]
    return rank


def _rank_sparse_mod(rows, p):
    live = {i: r for i, r in enumerate(rows) if r}
    col_index = {}
    for i, r in live.items():
        for j in r.keys():
            col_index.setdefault(j, set()).add(i)
    rank = 0
    while live:
        pi = min(live, key=lambda i: (len(live[i]), i))
        prow = live.pop(pi)
        rank += 1
        pj = min(prow)
        inv = pow(prow[pj], p - 2, p)
        for j in prow:
            col_index[j].discard(pi)
        targets = [t for t in col_index.get(pj, ()) if t in live]
        for t in targets:
            trow = live[t]
            f = trow[pj] * inv % p
            for j in trow:
                col_index[j].discard(t)
            new = dict(trow)
            for j, v in prow.items():
                w = (new.get(j, 0) - f * v) % p
                if w:
                    new[j] = w
                elif j in new:
                    del new[j]
            if new:
                live[t] = new
                for j in new:
                    col_index.setdefault(j, set()).add(t)
            else:
                del live[t]
    return rank


def _rank_gf2_bits(rowints):
    """Rank over F_2 of rows packed as python-int bitmasks."""
    pivots = {}
    rk = 0
    for cur in rowints:
        while cur:
            low = cur & -cur
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = cur
                rk += 1
                break
            cur ^= piv
    return rk


def _gf3_add(a1, a2, b1, b2):
    # positionwise sum mod 3 of rows encoded as (bits with value 1, value 2)
    na = ~(b1 | b2)
    nb = ~(a1 | a2)
    return ((a1 & na) | (b1 & nb) | (a2 & b2),
            (a2 & na) | (b2 & nb) | (a1 & b1))


def _rank_gf3_bits(rows):
    """Rank over F_3 of rows encoded as (ones-mask, twos-mask) pairs."""
    pivots = {}
    rk = 0
    for r1, r2 in rows:
        while r1 | r2:
            mask = r1 | r2
            low = mask & -mask
            piv = pivots.get(low)
            if piv is None:
                if r2 & low:   # scale by 2 so the pivot entry is 1
                    r1, r2 = r2, r1
                pivots[low] = (r1, r2)
                rk += 1
                break
            p1, p2 = piv
            if r1 & low:       # subtract pivot (add its negation)
                r1, r2 = _gf3_add(r1, r2, p2, p1)
            else:              # entry is 2: add pivot once
                r1, r2 = _gf3_add(r1, r2, p1, p2)
    return rk


_BITSET_CUTOVER = 16384  # cells; below this the dict path is plenty


def _rank_gf_bits(m):
    """Bit-packed elimination for F_2/F_3; row loop over the short side."""
    work = m if m.rows <= m.cols else m.transpose()
    rows = {}
    if work.domain.p == 2:
        for (i, j), _ in work._d.items():
            rows[i] = rows.get(i, 0) | (1 << j)
        return _rank_gf2_bits([rows[i] for i in sorted(rows)])
    packed = {}
    for (i, j), v in work._d.items():
        r1, r2 = packed.get(i, (0, 0))
        if v == 1:
            r1 |= 1 << j
        else:
            r2 |= 1 << j
        packed[i] = (r1, r2)
    return _rank_gf3_bits([packed[i] for i in sorted(packed)])


def rank(m):
    """Rank of a matrix over Q or F_p (DomainNotField over Z)."""
    _require_field(m)
    if m.is_zero():
        return 0
    if (isinstance(m.domain, GF) and m.domain.p in (2, 3)
            and m.rows * m.cols >= _BITSET_CUTOVER):
        return _rank_gf_bits(m)
    # eliminate over the smaller dimension
    work = m.transpose() if m.rows < m.cols else m
    if isinstance(work.domain, GF):
        p = work.domain.p
        rows = {}
        for (i, j), v in work._d.items():
            rows.setdefault(i, {})[j] = v
        return _rank_sparse_mod([rows[i] for i in sorted(rows)], p)
    return _rank_sparse_int(_int_rows_from_fractions(work))


# ---------------------------------------------------------------------------
# kernel and solve


def kernel_basis(m):
    """Basis of the right kernel {v : m v = 0}.

    Over a field the basis is RREF-normalized.  Over Z the result is a
    basis of the (always saturated) kernel lattice, read off the column
    transform of the Smith normal form.
    """
    if m.domain == ZZ:
        sf = smith_normal_form(m, want_transforms=True)
        V = sf.right
        return [tuple(V.entry(i, j) for i in range(m.cols))
                for j in range(sf.rank, m.cols)]
    _require_field(m)
    dom = m.domain
    rows = m.to_rows()
    pivots = _rref_dense(rows, m.cols, dom)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [dom.zero()] * m.cols
        v[f] = dom.one()
        for r, pc in enumerate(pivots):
            v[pc] = dom.neg(rows[r][f])
        basis.append(tuple(v))
    return basis


def solve(m, rhs):
    """One solution of m x = rhs (free variables set to 0), or NoSolution."""
    _require_field(m)
    dom = m.domain
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    rows = m.to_rows()
    for i, b in enumerate(rhs):
        rows[i].append(dom.normalize(b))
    pivots = _rref_dense(rows, m.cols + 1, dom)
    if m.cols in pivots:
        return NoSolution
    x = [dom.zero()] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple
    rank: int
    left: object = None   # Mat over Z, rows transform
    right: object = None  # Mat over Z, cols transform

    @property
    def diagonal(self):
        return self.invariant_factors


def _snf_unit_phase(rows_map):
    """Eliminate +-1 pivots sparsely; returns number eliminated.

    A unit pivot has minimal absolute value among all nonzero entries, so
    taking these first is consistent with the minimal-pivot rule.
    """
    col_index = {}
    for i, r in rows_map.items():
        for j in r.keys():
            col_index.setdefault(j, set()).add(i)
    ones = 0
    # queue of candidate unit positions
    while True:
        cand = None
        best = None
        for i, r in rows_map.items():
            for j, v in r.items():
                if v == 1 or v == -1:
                    cost = (len(r) + len(col_index[j]), i, j)
                    if best is None or cost < best:
                        best = cost
                        cand = (i, j)
        if cand is None:
            return ones, rows_map
        pi, pj = cand
        prow = rows_map.pop(pi)
        pv = prow[pj]
        for j in prow:
            col_index[j].discard(pi)
        for t in [t for t in col_index.get(pj, ()) if t in rows_map]:
            trow = rows_map[t]
            f = trow[pj] * pv  # pv in {1,-1}: f/pv = f*pv
            for j in trow:
                col_index[j].discard(t)
            new = dict(trow)
            for j, v in prow.items():
                w = new.get(j, 0) - f * v
                if w:
                    new[j] = w
                elif j in new:
                    del new[j]
            if new:
                rows_map[t] = new
                for j in new:
                    col_index.setdefault(j, set()).add(t)
            else:
                del rows_map[t]
        ones += 1


def _snf_core(rows):
    """Classic elementary-operation SNF on a small dense core.

    Pivot = nonzero entry of minimal absolute value (ties: smallest row,
    then column).  The pivot is grown to divide everything that remains
    before being recorded, so the divisibility chain holds by construction.
    """
    m = [list(r) for r in rows]
    factors = []
    top = 0
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    while True:
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = m[i][j]
                if v and (best is None or (abs(v), i, j) < best):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        while True:
            piv = m[top][top]
            # clear the pivot column
            dirty = False
            for i in range(top + 1, nrows):
                if m[i][top]:
                    q = m[i][top] // piv
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
                        break
            if dirty:
                continue
            # clear the pivot row
            for j in range(top + 1, ncols):
                if m[top][j]:
                    q = m[top][j] // piv
                    if q:
                        for row in m:
                            row[j] -= q * row[top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the remaining block
            off = None
            for i in range(top + 1, nrows):
                for j in range(top + 1, ncols):
                    if m[i][j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            m[top] = [a + b for a, b in zip(m[top], m[off])]
        factors.append(abs(m[top][top]))
        top += 1
        if top == min(nrows, ncols):
            break
    return factors


def _snf_with_transforms(mat):
    """Dense SNF tracking unimodular U, V with U * mat * V diagonal."""
    m = [list(r) for r in _dense_int_rows(mat)]
    nrows, ncols = mat.rows, mat.cols
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(a, b):
        m[a], m[b] = m[b], m[a]
        U[a], U[b] = U[b], U[a]

    def addmul_row(dst, src, q):
        m[dst] = [x - q * y for x, y in zip(m[dst], m[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def swap_cols(a, b):
        for row in m:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def addmul_col(dst, src, q):
        for row in m:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    factors = []
    top = 0
    while True:
        best = None
        for i in range(top, nrows):
            for j in range(top, ncols):
                v = m[i][j]
                if v and (best is None or (abs(v), i, j) < best):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != top:
            swap_rows(top, bi)
        if bj != top:
            swap_cols(top, bj)
        while True:
            piv = m[top][top]
            dirty = False
            for i in range(top + 1, nrows):
                if m[i][top]:
                    q = m[i][top] // piv
                    if q:
                        addmul_row(i, top, q)
                    if m[i][top]:
                        swap_rows(top, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, ncols):
                if m[top][j]:
                    q = m[top][j] // piv
                    if q:
                        addmul_col(j, top, q)
                    if m[top][j]:
                        swap_cols(top, j)
                        dirty = True
                        break
            if dirty:
                continue
            off = None
            for i in range(top + 1, nrows):
                for j in range(top + 1, ncols):
                    if m[i][j] % piv:
                        off = i
                        break
                if off is not None:
                    break
            if off is None:
                break
            addmul_row(top, off, -1)
        if m[top][top] < 0:
            m[top] = [-x for x in m[top]]
            U[top] = [-x for x in U[top]]
        factors.append(m[top][top])
        top += 1
        if top == min(nrows, ncols):
            break
    left = Mat.from_rows(U, ZZ) if nrows else Mat.zeros(0, 0, ZZ)
    right = Mat.from_rows(V, ZZ) if ncols else Mat.zeros(0, 0, ZZ)
    return factors, left, right


def _dense_int_rows(m):
    out = [[0] * m.cols for _ in range(m.rows)]
    for (i, j), v in m._d.items():
        out[i][j] = v
    return out


def smith_normal_form(m, want_transforms=False):
    """Invariant factors of an integer matrix; optionally the transforms."""
    if m.domain != ZZ:
        raise DomainNotField("smith_normal_form expects a Z matrix")
    if want_transforms:
        factors, left, right = _snf_with_transforms(m)
        return SmithForm(tuple(factors), len(factors), left, right)
    rows_map = {}
    for (i, j), v in m._d.items():
        rows_map.setdefault(i, {})[j] = v
    ones, residual = _snf_unit_phase(rows_map)
    factors = [1] * ones
    if residual:
        # compact the residual block densely
        rkeys = sorted(residual)
        ckeys = sorted({j for r in residual.values() for j in r})
        cmap = {j: k for k, j in enumerate(ckeys)}
        dense = [[0] * len(ckeys) for _ in rkeys]
        for a, i in enumerate(rkeys):
            for j, v in residual[i].items():
                dense[a][cmap[j]] = v
        factors.extend(_snf_core(dense))
    return SmithForm(tuple(factors), len(factors))
