"""Subalgebras of matrix rings and their quotient bimodules.

An algebra here is a unital subalgebra A of M_n given by an explicit basis
of n x n matrices over Q, F_p or Z.  Validation derives the structure
constants c[i][j] (coordinates of a_i * a_j in the basis) and the
coordinates of the identity; over Z it additionally checks that the span is
a direct summand of M_n(Z), so the quotient is a free module.

The module also builds the coefficient bimodules used by the cochain
complexes:

    quotient_bimodule   -- M_n / A with a deterministic matrix-unit basis
    regular_bimodule    -- A acting on itself (used for cup-product tests)
    ideal_quotient_bimodule -- A / J for a spanned two-sided ideal J
    sandwich_bimodule   -- span(A, units) / span(A, units), for the
                           intermediate coefficient modules of the rank-3
                           worked examples

plus `detect_splitting`, which finds the idempotent/radical decomposition
feeding the small complex of `complexes.cibils_complex`, and a catalog of
the named subalgebras of M_2 and M_3 together with the classical families
(full, upper triangular, diagonal, scalar, block parabolic, truncated
polynomial).
"""

from fractions import Fraction

from .exactla import (GF, Mat, NoSolution, QQ, ZZ, kernel_basis, rank,
                      smith_normal_form, solve)


class AlgebraError(ValueError):
    pass


class NotIndependent(AlgebraError):
    pass


class NoUnit(AlgebraError):
    pass


class NotSaturated(AlgebraError):
    pass


class NotInvertible(AlgebraError):
    pass


class UnknownName(AlgebraError):
    pass


class BadParams(AlgebraError):
    pass


class NotSplit(AlgebraError):
    pass


class NotClosed(AlgebraError):
    """Product a_i * a_j (1-based indices) left the span."""

    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__("product a%d * a%d is not in the span" % (i, j))


def _vec(m):
    """Row-major flattening of an n x n matrix to a length-n^2 tuple."""
    n = m.rows
    out = [m.domain.zero()] * (n * n)
    for (i, j), v in m._d.items():
        out[i * n + j] = v
    return tuple(out)


def _unit_matrix(n, i, j, domain):
    return Mat(n, n, domain, {(i, j): 1})


def _coerce_basis(n, domain, basis):
    mats = []
    for b in basis:
        if isinstance(b, Mat):
            if (b.rows, b.cols) != (n, n):
                raise AlgebraError("basis matrix is not %dx%d" % (n, n))
            mats.append(b if b.domain == domain else b.change_domain(domain))
        else:
            mats.append(Mat.from_rows(b, domain))
            if mats[-1].cols != n or mats[-1].rows != n:
                raise AlgebraError("basis matrix is not %dx%d" % (n, n))
    return mats


class Algebra:
    """A validated subalgebra presentation; construct via verify_subalgebra."""

    def __init__(self, n, domain, basis, name, mult, unit_coords, meta=None):
        self.n = n
        self.domain = domain
        self.basis = tuple(basis)
        self.dim = len(basis)
        self.name = name
        self.mult = mult          # mult[i][j] = coords of basis[i]*basis[j]
        self.unit_coords = unit_coords
        self.meta = dict(meta or {})
        self.coord = Mat(self.dim, n * n, domain,
                         {(k, t): v
                          for k, b in enumerate(basis)
                          for t, v in enumerate(_vec(b)) if v})
        self._span_t = None

    def _span_transpose(self):
        if self._span_t is None:
            self._span_t = self.coord.transpose()
        return self._span_t

    def member_coords(self, m):
        """Coordinates of a matrix in the basis, or NoSolution."""
        if self.domain == ZZ:
            sol = solve(self._span_transpose().change_domain(QQ),
                        [Fraction(v) for v in _vec(m)])
            if sol is NoSolution:
                return NoSolution
            if any(v.denominator != 1 for v in sol):
                return NoSolution
            return tuple(int(v) for v in sol)
        return solve(self._span_transpose(), _vec(m))

    def unit_matrix(self):
        return Mat.identity(self.n, self.domain)

    def with_unit_first(self):
        """The same algebra re-based so the first basis vector is I_n."""
        if self.meta.get("unit_first"):
            return self
        dom = self.domain
        ident = Mat.identity(self.n, dom)
        if dom == ZZ:
            rows = _unimodular_with_first_row(self.unit_coords)
            new_basis = []
            for row in rows:
                acc = Mat.zeros(self.n, self.n, dom)
                for j, c in enumerate(row):
                    if c:
                        acc = acc.add(self.basis[j].scale(c))
                new_basis.append(acc)
        else:
            new_basis = [ident]
            dense = [list(_vec(ident))]
            pivots = {}
            _reduce_and_record(dense[0], pivots, dom, 0)
            for b in self.basis:
                row = list(_vec(b))
                if _reduce_and_record(row, pivots, dom, len(new_basis)):
                    new_basis.append(b)
        out = verify_subalgebra(self.n, dom, new_basis, name=self.name)
        out.meta = dict(self.meta)
        out.meta["unit_first"] = True
        return out

    def __repr__(self):
        return "Algebra(%s, n=%d, d=%d over %r)" % (
            self.name or "?", self.n, self.dim, self.domain)


def _reduce_and_record(row, pivots, dom, tag):
    """Reduce `row` against recorded pivot rows; record it if nonzero.

    pivots maps pivot column -> (normalized dense row, tag).  Returns True
    when the row was independent (and is now recorded).
    """
    for col, (prow, _) in sorted(pivots.items()):
        if not dom.is_zero(row[col]):
            f = row[col]
            for j in range(len(row)):
                row[j] = dom.sub(row[j], dom.mul(f, prow[j]))
    lead = next((j for j, v in enumerate(row) if not dom.is_zero(v)), None)
    if lead is None:
        return False
    inv = dom.inv(row[lead])
    normalized = [dom.mul(inv, v) for v in row]
    pivots[lead] = (normalized, tag)
    return True


def _unimodular_with_first_row(r):
    """A unimodular integer matrix whose first row is the primitive r."""
    d = len(r)
    sf = smith_normal_form(Mat.from_rows([list(r)], ZZ), want_transforms=True)
    if sf.invariant_factors != (1,):
        raise AlgebraError("unit coordinates are not primitive")
    vinv = _integer_inverse(sf.right)
    rows = vinv.to_rows()
    sign = sf.left.entry(0, 0)  # +-1; sign * first row of V^-1 == r
    rows[0] = [sign * v for v in rows[0]]
    return rows


def _integer_inverse(m):
    inv = mat_inverse(m.change_domain(QQ))
    ent = {}
    for (i, j), v in inv._d.items():
        if v.denominator != 1:
            raise NotInvertible("matrix is not unimodular")
        ent[(i, j)] = int(v)
    return Mat(m.rows, m.cols, ZZ, ent)


def mat_inverse(m):
    """Inverse of a square matrix over a field (NotInvertible otherwise)."""
    if m.rows != m.cols:
        raise NotInvertible("not square")
    dom = m.domain
    if not dom.is_field:
        if dom == ZZ:
            return _integer_inverse(m)
        raise NotInvertible("unsupported domain")
    n = m.rows
    rows = m.to_rows()
    for i in range(n):
        rows[i].extend(dom.one() if j == i else dom.zero() for j in range(n))
    from .exactla import _rref_dense
    pivots = _rref_dense(rows, 2 * n, dom)
    if pivots[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return Mat.from_rows([row[n:] for row in rows], dom)


def verify_subalgebra(n, domain, basis, name=None):
    """Validate a basis as a unital subalgebra of M_n; see module docstring."""
    mats = _coerce_basis(n, domain, basis)
    if not mats:
        raise AlgebraError("empty basis")
    d = len(mats)
    coord = Mat(d, n * n, domain,
                {(k, t): v for k, b in enumerate(mats)
                 for t, v in enumerate(_vec(b)) if v})
    field_coord = coord.change_domain(QQ) if domain == ZZ else coord
    if rank(field_coord) != d:
        raise NotIndependent("basis matrices are linearly dependent")
    if domain == ZZ:
        sf = smith_normal_form(coord)
        if any(f != 1 for f in sf.invariant_factors):
            raise NotSaturated(
                "span is not a direct summand of M_n(Z): invariant factors %r"
                % (sf.invariant_factors,))
    span_t = field_coord.transpose()

    def coords_of(mat):
        target = _vec(mat)
        if domain == ZZ:
            sol = solve(span_t, [Fraction(v) for v in target])
            if sol is NoSolution:
                return NoSolution
            # saturation makes integer coordinates automatic
            return tuple(int(v) for v in sol)
        return solve(span_t, target)

    unit = coords_of(Mat.identity(n, domain))
    if unit is NoSolution:
        raise NoUnit("identity matrix is not in the span")
    mult = []
    for i, a in enumerate(mats):
        row = []
        for j, b in enumerate(mats):
            c = coords_of(a.mul(b))
            if c is NoSolution:
                raise NotClosed(i + 1, j + 1)
            row.append(c)
        mult.append(tuple(row))
    return Algebra(n, domain, mats, name, tuple(mult), unit)


def structure_constants_ok(A):
    """Direct associativity and unit-law assertions over all index triples."""
    d = A.dim
    dom = A.domain
    c = A.mult
    for i in range(d):
        for j in range(d):
            for l in range(d):
                for t in range(d):
                    lhs = sum(c[i][j][s] * c[s][l][t] for s in range(d))
                    rhs = sum(c[j][l][s] * c[i][s][t] for s in range(d))
                    if not dom.is_zero(dom.sub(dom.normalize(lhs),
                                               dom.normalize(rhs))):
                        return False
    e = A.unit_coords
    for j in range(d):
        for k in range(d):
            left = sum(e[i] * c[i][j][k] for i in range(d))
            right = sum(e[i] * c[j][i][k] for i in range(d))
            want = 1 if j == k else 0
            if (not dom.is_zero(dom.sub(dom.normalize(left), dom.normalize(want)))
                    or not dom.is_zero(dom.sub(dom.normalize(right),
                                               dom.normalize(want)))):
                return False
    return True


# ---------------------------------------------------------------------------
# bimodules


class Bimodule:
    """A finitely generated coefficient bimodule in a chosen basis.

    left[i] / right[i] are the m x m action matrices of the i-th algebra
    basis vector.  tags name the basis vectors; a matrix-unit class is
    tagged ("unit", i, j).
    """

    def __init__(self, algebra, tags, left, right, name=None):
        self.algebra = algebra
        self.tags = tuple(tags)
        self.dim = len(self.tags)
        self.left = tuple(left)
        self.right = tuple(right)
        self.name = name

    def act_left(self, i, vec):
        return self.left[i].apply(vec)

    def act_right(self, i, vec):
        return self.right[i].apply(vec)

    def __repr__(self):
        return "Bimodule(%s, dim=%d)" % (self.name or "?", self.dim)


def _span_reducer(rows, dom):
    """Record a list of spanning rows; returns (pivots, reduce) helpers."""
    pivots = {}
    for k, row in enumerate(rows):
        _reduce_and_record(list(row), pivots, dom, k)
    return pivots


def _class_is_new(vecrow, pivots, dom):
    row = list(vecrow)
    for col, (prow, _) in sorted(pivots.items()):
        if not dom.is_zero(row[col]):
            f = row[col]
            for j in range(len(row)):
                row[j] = dom.sub(row[j], dom.mul(f, prow[j]))
    return any(not dom.is_zero(v) for v in row)


def quotient_bimodule(A):
    """M_n / A with basis chosen by a row-major greedy scan of matrix units."""
    n, dom = A.n, A.domain
    fdom = QQ if dom == ZZ else dom
    pivots = {}
    for k in range(A.dim):
        _reduce_and_record([fdom.normalize(v) for v in _vec(A.basis[k])],
                           pivots, fdom, k)
    kept = []
    for i in range(n):
        for j in range(n):
            row = [fdom.zero()] * (n * n)
            row[i * n + j] = fdom.one()
            if _reduce_and_record(row, pivots, fdom, ("unit", i, j)):
                kept.append((i, j))
    m = n * n - A.dim
    assert len(kept) == m
    return _bimodule_from_units(A, kept, name="M%d/%s" % (n, A.name or "A"))


def _bimodule_from_units(A, kept, name):
    n, dom = A.n, A.domain
    full_rows = [list(_vec(b)) for b in A.basis]
    full_rows += [list(_vec(_unit_matrix(n, i, j, dom))) for (i, j) in kept]
    F = Mat.from_rows(full_rows, dom).transpose()  # columns = chosen basis
    if dom == ZZ:
        sf = smith_normal_form(Mat.from_rows(full_rows, ZZ))
        if any(f != 1 for f in sf.invariant_factors) or sf.rank != len(full_rows):
            raise NotSaturated("unit classes do not span the quotient lattice")
    Finv = mat_inverse(F)
    m = len(kept)
    proj = Mat(m, n * n, dom,
               {(r - A.dim, c): v for (r, c), v in Finv._d.items()
                if r >= A.dim})
    lifts = [_unit_matrix(n, i, j, dom) for (i, j) in kept]
    left, right = [], []
    for a in A.basis:
        lent, rent = {}, {}
        for q, u in enumerate(lifts):
            lcol = proj.apply(_vec(a.mul(u)))
            rcol = proj.apply(_vec(u.mul(a)))
            for p, v in enumerate(lcol):
                if not dom.is_zero(v):
                    lent[(p, q)] = v
            for p, v in enumerate(rcol):
                if not dom.is_zero(v):
                    rent[(p, q)] = v
        left.append(Mat(m, m, dom, lent))
        right.append(Mat(m, m, dom, rent))
    bm = Bimodule(A, [("unit", i, j) for (i, j) in kept], left, right, name)
    bm.proj = proj
    return bm


def regular_bimodule(A):
    """A as a bimodule over itself, with its multiplication pairing."""
    d, dom = A.dim, A.domain
    left, right = [], []
    for i in range(d):
        lent = {(k, j): v for j in range(d)
                for k, v in enumerate(A.mult[i][j]) if not dom.is_zero(v)}
        rent = {(k, j): v for j in range(d)
                for k, v in enumerate(A.mult[j][i]) if not dom.is_zero(v)}
        left.append(Mat(d, d, dom, lent))
        right.append(Mat(d, d, dom, rent))
    bm = Bimodule(A, [("alg", j) for j in range(d)], left, right,
                  name="%s as bimodule" % (A.name or "A"))
    pairing = tuple(tuple(A.mult[i][j] for j in range(d)) for i in range(d))
    return bm, pairing


def ideal_quotient_bimodule(A, ideal_indices):
    """A / J for J spanned by the given basis indices (must be an ideal).

    Returns (bimodule, pairing) where the pairing is the multiplication of
    the quotient algebra A/J on itself.
    """
    dom = A.domain
    ideal = sorted(set(ideal_indices))
    iset = set(ideal)
    kept = [j for j in range(A.dim) if j not in iset]
    for i in range(A.dim):
        for j in ideal:
            for side in (A.mult[i][j], A.mult[j][i]):
                if any(not dom.is_zero(dom.normalize(side[k])) for k in kept):
                    raise AlgebraError(
                        "spanned subspace is not a two-sided ideal")
    pos = {j: q for q, j in enumerate(kept)}
    m = len(kept)
    left, right = [], []
    for i in range(A.dim):
        lent, rent = {}, {}
        for q, j in enumerate(kept):
            for k in kept:
                v = A.mult[i][j][k]
                if not dom.is_zero(dom.normalize(v)):
                    lent[(pos[k], q)] = v
                w = A.mult[j][i][k]
                if not dom.is_zero(dom.normalize(w)):
                    rent[(pos[k], q)] = w
        left.append(Mat(m, m, dom, lent))
        right.append(Mat(m, m, dom, rent))
    bm = Bimodule(A, [("class", j) for j in kept], left, right,
                  name="%s mod ideal" % (A.name or "A"))
    pairing = tuple(tuple(tuple(A.mult[kept[s]][kept[t]][k] for k in kept)
                          for t in range(m)) for s in range(m))
    return bm, pairing


def sandwich_bimodule(A, numerator_units, denominator_units=(), name=None):
    """span(A, numerator units) / span(A, denominator units) as an A-bimodule.

    The unit lists are (row, col) pairs, 1-based to match the usual E_ij
    notation.  Both spans must be stable under multiplication by A on both
    sides, and the denominator span must sit inside the numerator span.
    """
    n, dom = A.n, A.domain
    fdom = QQ if dom == ZZ else dom

    def unit(ij):
        i, j = ij
        return _unit_matrix(n, i - 1, j - 1, dom)

    num = [unit(t) for t in numerator_units]
    den = [unit(t) for t in denominator_units]

    den_rows = [[fdom.normalize(v) for v in _vec(b)] for b in A.basis]
    den_rows += [[fdom.normalize(v) for v in _vec(u)] for u in den]
    pivots = {}
    den_basis = []
    for k, row in enumerate(den_rows):
        if _reduce_and_record(list(row), pivots, fdom, k):
            den_basis.append(row)
    kept = []
    for t, u in zip(numerator_units, num):
        row = [fdom.normalize(v) for v in _vec(u)]
        if _reduce_and_record(row, pivots, fdom, ("unit",) + tuple(t)):
            kept.append((t, u))
    m = len(kept)
    # numerator space basis: denominator space basis followed by kept units
    space_rows = den_basis + [[fdom.normalize(v) for v in _vec(u)]
                              for _, u in kept]
    S = Mat.from_rows(space_rows, fdom).transpose()
    dden = len(den_basis)

    def cls(mat):
        sol = solve(S, [fdom.normalize(v) for v in _vec(mat)])
        if sol is NoSolution:
            raise AlgebraError("span is not stable under the algebra action")
        return sol[dden:]

    left, right = [], []
    for a in A.basis:
        lent, rent = {}, {}
        for q, (_, u) in enumerate(kept):
            for p, v in enumerate(cls(a.mul(u))):
                if not fdom.is_zero(v):
                    lent[(p, q)] = v
            for p, v in enumerate(cls(u.mul(a))):
                if not fdom.is_zero(v):
                    rent[(p, q)] = v
        left.append(Mat(m, m, dom, {k: v for k, v in lent.items()}))
        right.append(Mat(m, m, dom, {k: v for k, v in rent.items()}))
    # stability of the denominator span on its own
    for a in A.basis:
        for u in den:
            for prod in (a.mul(u), u.mul(a)):
                row = [fdom.normalize(v) for v in _vec(prod)]
                if _class_is_new(row, _span_reducer(den_basis, fdom), fdom):
                    raise AlgebraError(
                        "denominator span is not a sub-bimodule")
    tags = [("unit", t[0] - 1, t[1] - 1) for t, _ in kept]
    return Bimodule(A, tags, left, right,
                    name or "sandwich over %s" % (A.name or "A"))


# ---------------------------------------------------------------------------
# idempotent / radical splittings


class Splitting:
    """Orthogonal 0/1 diagonal idempotents plus a bigraded radical basis."""

    def __init__(self, idempotents, blocks, radical, radical_indices,
                 bigrading, block_of_row):
        self.idempotents = tuple(idempotents)  # Mat, one per block
        self.blocks = tuple(blocks)            # tuple of sorted row tuples
        self.radical = tuple(radical)          # Mat
        self.radical_indices = tuple(radical_indices)  # into A.basis
        self.bigrading = tuple(bigrading)      # (t, u) block ids, 0-based
        self.block_of_row = tuple(block_of_row)

    @property
    def num_idempotents(self):
        return len(self.idempotents)

    def __repr__(self):
        return "Splitting(%d idempotents, radical rank %d)" % (
            len(self.idempotents), len(self.radical))


def _is_zero_one(A, m):
    dom = A.domain
    one = dom.one()
    return all(v == one for v in m._d.values())


def detect_splitting(A):
    """Split A into diagonal 0/1 idempotents plus a nilpotent radical ideal.

    Succeeds exactly when the basis is aligned with such a decomposition:
    every basis matrix is a 0/1 sum of matrix units that is purely diagonal
    or purely off-diagonal, the diagonal ones are orthogonal idempotents
    summing to I_n, each off-diagonal one is homogeneous for the block
    bigrading, and the off-diagonal span is a nilpotent two-sided ideal.
    Raises NotSplit otherwise.
    """
    n, dom = A.n, A.domain
    diag, offd, offd_idx = [], [], []
    for k, b in enumerate(A.basis):
        if not _is_zero_one(A, b):
            raise NotSplit("basis entry %d is not a 0/1 matrix" % (k + 1))
        positions = set(b._d.keys())
        if not positions:
            raise NotSplit("zero basis matrix")
        on_diag = {p for p in positions if p[0] == p[1]}
        if on_diag == positions:
            diag.append((k, b))
        elif not on_diag:
            offd.append(b)
            offd_idx.append(k)
        else:
            raise NotSplit(
                "basis entry %d mixes diagonal and off-diagonal units" % (k + 1))
    if not diag:
        raise NotSplit("no diagonal idempotent candidates")
    covered = {}
    blocks = []
    idempotents = []
    for t, (k, b) in enumerate(diag):
        rows = sorted(i for (i, _) in b._d.keys())
        for i in rows:
            if i in covered:
                raise NotSplit("diagonal supports are not orthogonal")
            covered[i] = t
        blocks.append(tuple(rows))
        idempotents.append(b)
    if len(covered) != n:
        raise NotSplit("diagonal idempotents do not sum to the identity")
    block_of_row = tuple(covered[i] for i in range(n))
    bigrading = []
    for x in offd:
        grades = {(block_of_row[i], block_of_row[j]) for (i, j) in x._d.keys()}
        if len(grades) != 1:
            raise NotSplit("radical basis element is not bigraded")
        bigrading.append(grades.pop())
    # radical span must be a two-sided nilpotent ideal
    rad_span = Mat(len(offd), n * n, dom,
                   {(k, t): v for k, x in enumerate(offd)
                    for t, v in enumerate(_vec(x)) if v})
    rad_t = (rad_span.change_domain(QQ) if dom == ZZ else rad_span).transpose()
    fdom = QQ if dom == ZZ else dom

    def radical_coords(mat):
        if mat.is_zero():
            return tuple(dom.zero() for _ in offd)
        sol = solve(rad_t, [fdom.normalize(v) for v in _vec(mat)])
        if sol is NoSolution:
            return NoSolution
        try:
            return tuple(dom.normalize(v) for v in sol)
        except (ValueError, TypeError):
            raise NotSplit("radical products need non-integral coordinates")

    products = {}
    for i, x in enumerate(offd):
        for j, y in enumerate(offd):
            c = radical_coords(x.mul(y))
            if c is NoSolution:
                raise NotSplit("radical span is not an ideal")
            products[(i, j)] = c
    # nilpotency: iterate the span of products of k factors
    layer = [x for x in offd]
    for _ in range(n):
        if all(x.is_zero() for x in layer):
            break
        layer = [x.mul(y) for x in layer for y in offd if not x.is_zero()]
    else:
        if not all(x.is_zero() for x in layer):
            raise NotSplit("radical is not nilpotent")
    sp = Splitting(idempotents, blocks, offd, offd_idx, bigrading,
                   block_of_row)
    sp.radical_products = products
    return sp


def validate_splitting(A, idempotent_mats, radical_mats):
    """Validate externally supplied splitting data against A (or NotSplit)."""
    n, dom = A.n, A.domain
    idem = _coerce_basis(n, dom, idempotent_mats)
    rad = _coerce_basis(n, dom, radical_mats)
    for e in idem:
        if not e.mul(e).__eq__(e):
            raise NotSplit("idempotent candidate is not idempotent")
    total = Mat.zeros(n, n, dom)
    for e in idem:
        total = total.add(e)
    if total != Mat.identity(n, dom):
        raise NotSplit("idempotents do not sum to the identity")
    for i, e in enumerate(idem):
        for j, f in enumerate(idem):
            if i != j and not e.mul(f).is_zero():
                raise NotSplit("idempotents are not orthogonal")
    # must re-span A
    sub = verify_subalgebra(n, dom, list(idem) + list(rad), name=A.name)
    if sub.dim != A.dim:
        raise NotSplit("splitting does not span the algebra")
    for b in A.basis:
        if sub.member_coords(b) is NoSolution:
            raise NotSplit("splitting does not span the algebra")
    return detect_splitting(sub)


# ---------------------------------------------------------------------------
# constructions


def transpose_algebra(A):
    basis = [b.transpose() for b in A.basis]
    name = None
    if A.name:
        name = "t(%s)" % A.name
    out = verify_subalgebra(A.n, A.domain, basis, name=name)
    return out


def conjugate_algebra(A, P):
    if not isinstance(P, Mat):
        P = Mat.from_rows(P, A.domain)
    if P.domain != A.domain:
        P = P.change_domain(A.domain)
    Pinv = mat_inverse(P)
    basis = [Pinv.mul(b).mul(P) for b in A.basis]
    name = "conj(%s)" % A.name if A.name else None
    return verify_subalgebra(A.n, A.domain, basis, name=name)


def direct_product(A, B):
    if A.domain != B.domain:
        raise AlgebraError("factors live over different domains")
    n = A.n + B.n
    dom = A.domain
    basis = []
    for a in A.basis:
        basis.append(Mat(n, n, dom, dict(a._d)))
    for b in B.basis:
        basis.append(Mat(n, n, dom,
                         {(i + A.n, j + A.n): v for (i, j), v in b._d.items()}))
    name = None
    if A.name and B.name:
        name = "%sx%s" % (A.name, B.name)
    return verify_subalgebra(n, dom, basis, name=name)


# ---------------------------------------------------------------------------
# catalog

_SHAPES_DEG2 = {
    "M2": ["* *", "* *"],
    "B2": ["* *", "0 *"],
    "D2": ["* 0", "0 *"],
    "N2": ["a b", "0 a"],
    "C2": ["a 0", "0 a"],
}

_SHAPES_DEG3 = {
    "M3": ["* * *", "* * *", "* * *"],
    "P21": ["* * *", "* * *", "0 0 *"],
    "P12": ["* * *", "0 * *", "0 * *"],
    "B3": ["* * *", "0 * *", "0 0 *"],
    "M2xD1": ["* * 0", "* * 0", "0 0 *"],
    "S10": ["a b c", "0 a d", "0 0 e"],
    "S11": ["a b c", "0 e d", "0 0 a"],
    "S12": ["a b c", "0 e d", "0 0 e"],
    "S13": ["* * *", "0 * 0", "0 0 *"],
    "S14": ["* 0 *", "0 * *", "0 0 *"],
    "B2xD1": ["* * 0", "0 * 0", "0 0 *"],
    "N3": ["a b c", "0 a d", "0 0 a"],
    "S6": ["a c d", "0 a 0", "0 0 b"],
    "S7": ["a 0 c", "0 a d", "0 0 b"],
    "S8": ["a c d", "0 b 0", "0 0 b"],
    "S9": ["a 0 c", "0 b d", "0 0 b"],
    "D3": ["* 0 0", "0 * 0", "0 0 *"],
    "N2xD1": ["a c 0", "0 a 0", "0 0 b"],
    "J3": ["a b c", "0 a b", "0 0 a"],
    "S2": ["a 0 0", "0 a c", "0 0 b"],
    "S3": ["a 0 c", "0 b 0", "0 0 b"],
    "S4": ["a b c", "0 a 0", "0 0 a"],
    "S5": ["a 0 b", "0 a c", "0 0 a"],
    "C2xD1": ["a 0 0", "0 a 0", "0 0 b"],
    "S1": ["a b 0", "0 a 0", "0 0 a"],
    "C3": ["a 0 0", "0 a 0", "0 0 a"],
}

CATALOG_DEG2 = ("M2", "B2", "D2", "N2", "C2")
CATALOG_DEG3 = ("M3", "P21", "P12", "B3", "M2xD1", "S10", "S11", "S12",
                "S13", "S14", "B2xD1", "N3", "S6", "S7", "S8", "S9", "D3",
                "N2xD1", "J3", "S2", "S3", "S4", "S5", "C2xD1", "S1", "C3")

TRANSPOSE_PARTNER = {
    "M2": "M2", "B2": "B2", "D2": "D2", "N2": "N2", "C2": "C2",
    "M3": "M3", "P21": "P12", "P12": "P21", "B3": "B3", "M2xD1": "M2xD1",
    "S10": "S12", "S12": "S10", "S11": "S11", "S13": "S14", "S14": "S13",
    "B2xD1": "B2xD1", "N3": "N3", "S6": "S9", "S9": "S6", "S7": "S8",
    "S8": "S7", "D3": "D3", "N2xD1": "N2xD1", "J3": "J3", "S2": "S3",
    "S3": "S2", "S4": "S5", "S5": "S4", "C2xD1": "C2xD1", "S1": "S1",
    "C3": "C3",
}


def _shape_basis(rows, domain):
    n = len(rows)
    grid = [r.split() for r in rows]
    if any(len(g) != n for g in grid):
        raise BadParams("shape rows must have %d entries" % n)
    groups = {}
    order = []
    for i in range(n):
        for j in range(n):
            sym = grid[i][j]
            if sym == "0":
                continue
            key = ("*", i, j) if sym == "*" else sym
            if key not in groups:
                groups[key] = []
                order.append(key)
            groups[key].append((i, j))
    return [Mat(n, n, domain, {p: 1 for p in groups[k]}) for k in order]


def _jn_basis(n, domain):
    x = Mat(n, n, domain, {(i, i + 1): 1 for i in range(n - 1)})
    basis = [Mat.identity(n, domain)]
    cur = x
    for _ in range(n - 1):
        basis.append(cur)
        cur = cur.mul(x)
    return basis


def _parabolic_basis(parts, domain):
    n = sum(parts)
    if n <= 0 or any(p <= 0 for p in parts):
        raise BadParams("block sizes must be positive")
    block = []
    for b, p in enumerate(parts):
        block.extend([b] * p)
    basis = []
    for i in range(n):
        for j in range(n):
            if block[i] <= block[j]:
                basis.append(_unit_matrix(n, i, j, domain))
    return basis, n


def catalog(name, domain, params=None):
    """A named subalgebra (table entries and the classical families)."""
    key = str(name).strip().upper().replace(",", "").replace("_", "")
    key = key.replace("X", "x").replace("xD1", "xD1")
    # normalize product names like "M2XD1"
    if "x" in key:
        key = "x".join(s.upper() for s in key.split("x"))
    if key in _SHAPES_DEG2 or key in _SHAPES_DEG3:
        shapes = _SHAPES_DEG2.get(key) or _SHAPES_DEG3.get(key)
        A = verify_subalgebra(len(shapes), domain,
                              _shape_basis(shapes, domain), name=key)
        A.meta["catalog"] = key
        A.meta["degree"] = 2 if key in _SHAPES_DEG2 else 3
        if key == "J3":
            A.meta["family"] = ("J", 3)
        return A
    fam = key
    if params is None and len(key) > 1 and key[0] in "MBDCJ" and key[1:].isdigit():
        fam, params = key[0], int(key[1:])
    if fam == "P" and params is None and key[1:].isdigit():
        fam, params = "P", tuple(int(c) for c in key[1:])
    if params is None:
        raise UnknownName("unknown catalog name %r" % (name,))
    if fam == "J":
        n = int(params)
        if n < 2:
            raise BadParams("J_n needs n >= 2")
        A = verify_subalgebra(n, domain, _jn_basis(n, domain), name="J%d" % n)
        A.meta["family"] = ("J", n)
        if n == 3:
            A.meta["catalog"] = "J3"
            A.meta["degree"] = 3
        return A
    if fam == "M":
        n = int(params)
        basis = [_unit_matrix(n, i, j, domain)
                 for i in range(n) for j in range(n)]
        return verify_subalgebra(n, domain, basis, name="M%d" % n)
    if fam == "B":
        n = int(params)
        basis = [_unit_matrix(n, i, j, domain)
                 for i in range(n) for j in range(i, n)]
        return verify_subalgebra(n, domain, basis, name="B%d" % n)
    if fam == "D":
        n = int(params)
        basis = [_unit_matrix(n, i, i, domain) for i in range(n)]
        return verify_subalgebra(n, domain, basis, name="D%d" % n)
    if fam == "C":
        n = int(params)
        return verify_subalgebra(n, domain, [Mat.identity(n, domain)],
                                 name="C%d" % n)
    if fam == "P":
        parts = tuple(int(p) for p in (params if hasattr(params, "__iter__")
                                       else (params,)))
        basis, n = _parabolic_basis(parts, domain)
        return verify_subalgebra(
            n, domain, basis, name="P" + "".join(str(p) for p in parts))
    raise UnknownName("unknown catalog name %r" % (name,))


def catalog_info(name):
    """Static facts recorded for a fixed catalog entry."""
    key = str(name).strip().upper()
    if "X" in key:
        key = "x".join(s.upper() for s in key.split("X"))
    table = {}
    table.update({k: 2 for k in CATALOG_DEG2})
    table.update({k: 3 for k in CATALOG_DEG3})
    if key not in table:
        raise UnknownName("no table entry named %r" % (name,))
    d = {"M2": 4, "B2": 3, "D2": 2, "N2": 2, "C2": 1,
         "M3": 9, "P21": 7, "P12": 7, "B3": 6, "M2xD1": 5, "S10": 5,
         "S11": 5, "S12": 5, "S13": 5, "S14": 5, "B2xD1": 4, "N3": 4,
         "S6": 4, "S7": 4, "S8": 4, "S9": 4, "D3": 3, "N2xD1": 3, "J3": 3,
         "S2": 3, "S3": 3, "S4": 3, "S5": 3, "C2xD1": 2, "S1": 2, "C3": 1}
    return {"name": key, "degree": table[key], "d": d[key],
            "transpose": TRANSPOSE_PARTNER[key]}
