"""Deformation-theoretic quantities attached to a matrix subalgebra.

For a d-dimensional subalgebra A of the n-by-n matrices this module
computes:

- the normalizer N(A) = { X : [X, a] lies in A for every a in A },
  as the kernel of a stacked linear system over the coefficient domain;
- the space of derivations A -> M_n/A (the 1-cocycles of the bar
  complex with quotient coefficients);
- the tangent dimension  dim H^1 + n^2 - dim N(A), cross-checked
  against the derivation dimension;
- two one-sided certificates: H^2 = 0 certifies smoothness of the
  deformation problem at A, and H^1 = 0 certifies that the conjugation
  orbit of A is open.  Nonvanishing proves nothing, so the negative
  answer is reported as "inconclusive", never "no".
"""

from .algebra import quotient_bimodule
from .cohomology import cohomology_of
from .complexes import DEFAULT_SIZE_BUDGET, bar_complex
from .exactla import QQ, ZZ, Mat, kernel_basis, rank

YES = "yes"
INCONCLUSIVE = "inconclusive"

_SMOOTH_CAVEAT = (
    "H^2 is nonzero, so the smoothness test is inconclusive: the "
    "vanishing criterion is sufficient but not necessary, and the "
    "deformation problem may still be smooth at this point.")


def normalizer(A):
    """Basis and dimension of N(A) = { X : [X, a] in span(A) for all a }.

    Over a field the dimension is the kernel dimension of the stacked
    system  proj([X, a_i]) = 0;  over the integers the same system is
    solved with a saturated integer kernel basis, so the count is the
    rank of N(A) as a lattice (which equals the rational dimension).
    The returned basis always spans a space containing A itself.
    """
    n, d, dom = A.n, A.dim, A.domain
    proj = quotient_bimodule(A).proj
    m = proj.rows
    stacked = {}
    for i, a in enumerate(A.basis):
        # commutator-with-a as a matrix on vec(X), X row-major:
        # [X, a](r, c) = sum_s X(r, s) a(s, c) - sum_s a(r, s) X(s, c)
        K = {}
        for (s, c), v in a._d.items():
            for r in range(n):
                key = (r * n + c, r * n + s)
                K[key] = dom.add(K.get(key, dom.zero()), v)
        for (r, s), v in a._d.items():
            for c in range(n):
                key = (r * n + c, s * n + c)
                K[key] = dom.sub(K.get(key, dom.zero()), v)
        pk = proj.mul(Mat(n * n, n * n, dom, K))
        for (rr, cc), v in pk._d.items():
            stacked[(i * m + rr, cc)] = v
    system = Mat(d * m, n * n, dom, stacked)
    vecs = kernel_basis(system)
    basis = [Mat(n, n, dom, {(r, c): vec[r * n + c]
                             for r in range(n) for c in range(n)})
             for vec in vecs]
    return basis, len(basis)


def normalizer_dim(A):
    return normalizer(A)[1]


def derivation_space(A, M=None, budget=DEFAULT_SIZE_BUDGET):
    """Dimension of the derivations A -> M (default M = M_n/A).

    These are exactly the 1-cocycles of the bar complex, so the count
    is rank C^1 minus rank of the degree-1 differential.
    """
    cx = bar_complex(A, M=M if M is not None else quotient_bimodule(A),
                     top_degree=2, budget=budget)
    return cx.ranks[1] - rank(cx.diffs[1].change_domain(QQ)
                              if A.domain == ZZ else cx.diffs[1])


def _h_dim(record):
    """Field dimension, or free rank over the integers."""
    return record["dim"] if "dim" in record else record["free_rank"]


def _h_is_zero(record):
    if "dim" in record:
        return record["dim"] == 0
    return record["free_rank"] == 0 and not record["torsion"]


def tangent_dimension(A, h1=None, ndim=None, budget=DEFAULT_SIZE_BUDGET):
    """dim H^1 + n^2 - dim N(A), cross-checked against derivation_space."""
    if h1 is None:
        h1 = _h_dim(cohomology_of(A, degrees=[1], budget=budget)[1])
    if ndim is None:
        ndim = normalizer(A)[1]
    tangent = h1 + A.n * A.n - ndim
    der = derivation_space(A, budget=budget)
    if der != tangent:
        raise RuntimeError(
            "internal check failed: derivation dimension %d != tangent "
            "dimension %d" % (der, tangent))
    return tangent


def certificates(A, method="auto", budget=DEFAULT_SIZE_BUDGET):
    """(smooth_certificate, orbit_open_certificate), each yes|inconclusive."""
    res = cohomology_of(A, method=method, degrees=[1, 2], budget=budget)
    smooth = YES if _h_is_zero(res[2]) else INCONCLUSIVE
    orbit = YES if _h_is_zero(res[1]) else INCONCLUSIVE
    return smooth, orbit


class ModuliReport:
    """Bundle of normalizer, cohomology (degrees 0..2) and certificates."""

    __slots__ = ("normalizer_dim", "normalizer_basis", "derivation_dim",
                 "h0", "h1", "h2", "tangent_dim", "smooth_certificate",
                 "orbit_open_certificate", "caveat", "method_tag")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw[k])

    def to_dict(self):
        return {
            "normalizer_dim": self.normalizer_dim,
            "h0": dict(self.h0),
            "h1": dict(self.h1),
            "h2": dict(self.h2),
            "tangent_dim": self.tangent_dim,
            "smooth": self.smooth_certificate,
            "orbit_open": self.orbit_open_certificate,
            **({"caveat": self.caveat} if self.caveat else {}),
        }

    def __repr__(self):
        return ("ModuliReport(N=%d, tangent=%d, smooth=%s, orbit_open=%s)"
                % (self.normalizer_dim, self.tangent_dim,
                   self.smooth_certificate, self.orbit_open_certificate))


def moduli_report(A, method="auto", budget=DEFAULT_SIZE_BUDGET):
    """Full report at A.  Over the integers the dimension formulas use
    free ranks (the saturated kernels make them agree with the rational
    fiber), while the certificates demand full vanishing including
    torsion."""
    res = cohomology_of(A, method=method, degrees=[0, 1, 2], budget=budget)
    h0, h1, h2 = res[0], res[1], res[2]
    basis, ndim = normalizer(A)
    if _h_dim(h0) != ndim - A.dim:
        raise RuntimeError(
            "internal check failed: dim H^0 = %d but dim N(A) - d = %d"
            % (_h_dim(h0), ndim - A.dim))
    tangent = tangent_dimension(A, h1=_h_dim(h1), ndim=ndim, budget=budget)
    smooth = YES if _h_is_zero(h2) else INCONCLUSIVE
    orbit = YES if _h_is_zero(h1) else INCONCLUSIVE
    return ModuliReport(
        normalizer_dim=ndim,
        normalizer_basis=tuple(basis),
        derivation_dim=tangent,
        h0=h0, h1=h1, h2=h2,
        tangent_dim=tangent,
        smooth_certificate=smooth,
        orbit_open_certificate=orbit,
        caveat=_SMOOTH_CAVEAT if smooth == INCONCLUSIVE else None,
        method_tag=res.method_tag,
    )
