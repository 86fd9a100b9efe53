"""Cohomology extraction: H^p = ker d^p / im d^{p-1} from a cochain complex.

Over a field the answer per degree is a dimension, computed from two
differential ranks.  Over the integers the free rank comes from rational
ranks and the torsion subgroup from the Smith normal form of the incoming
differential: since kernels of integer matrices are saturated, the nonunit
invariant factors of d^{p-1} are exactly the torsion invariants of H^p.

Rational dimensions use a certificate shortcut when the matrices are
integral: ranks can only drop under reduction mod a prime, so a vanishing
mod-p upper bound for dim H^p proves the rational dimension is zero
without exact elimination.  Nonzero dimensions always fall back to exact
fraction-free elimination.
"""

from .algebra import NotSplit, detect_splitting, quotient_bimodule
from .complexes import (DEFAULT_SIZE_BUDGET, bar_complex, cibils_complex,
                        jn_periodic_complex, reduced_bar_complex)
from .exactla import GF, QQ, ZZ, rank, smith_normal_form


class DegreeOutOfRange(ValueError):
    pass


class CohomologyResult:
    """Per-degree cohomology data plus the method that produced it."""

    def __init__(self, domain, method_tag, records):
        self.domain = domain
        self.method_tag = method_tag
        self.records = tuple(records)  # dicts with "degree" and data keys

    @property
    def degrees(self):
        return tuple(r["degree"] for r in self.records)

    def dims(self):
        return tuple(r["dim"] for r in self.records)

    def free_ranks(self):
        return tuple(r["free_rank"] for r in self.records)

    def torsions(self):
        return tuple(tuple(r["torsion"]) for r in self.records)

    def __getitem__(self, degree):
        for r in self.records:
            if r["degree"] == degree:
                return r
        raise KeyError(degree)

    def __repr__(self):
        if self.domain == ZZ:
            body = ", ".join("H^%d=Z^%d%s" % (
                r["degree"], r["free_rank"],
                "+" + "+".join("Z/%d" % t for t in r["torsion"])
                if r["torsion"] else "") for r in self.records)
        else:
            body = ", ".join("h^%d=%d" % (r["degree"], r["dim"])
                             for r in self.records)
        return "CohomologyResult(%s; %s)" % (self.method_tag, body)


def _normalize_degrees(cx, degrees):
    degs = sorted(set(int(p) for p in degrees))
    if not degs:
        raise DegreeOutOfRange("no degrees requested")
    if degs[0] < 0:
        raise DegreeOutOfRange("negative degree %d" % degs[0])
    if degs[-1] > cx.top_degree - 1:
        raise DegreeOutOfRange(
            "degree %d needs d^%d, but the complex only carries degrees "
            "0..%d" % (degs[-1], degs[-1], cx.top_degree - 1))
    return degs


def _all_integer(mat):
    if mat.domain != QQ:
        return False
    return all(v.denominator == 1 for v in mat._d.values())


def _rational_dims(cx, degs):
    diffs = cx.diffs
    certificates = all(_all_integer(diffs[q])
                       for p in degs for q in (p - 1, p) if q >= 0)
    mod_cache = {}
    exact_cache = {-1: 0}

    def mod_rank(q, pp):
        if q < 0:
            return 0
        key = (q, pp)
        if key not in mod_cache:
            mod_cache[key] = rank(diffs[q].change_domain(GF(pp)))
        return mod_cache[key]

    def exact_rank(q):
        if q not in exact_cache:
            exact_cache[q] = rank(diffs[q])
        return exact_cache[q]

    dims = {}
    for p in degs:
        if certificates:
            settled = False
            for pp in (2, 3):
                if cx.ranks[p] - mod_rank(p, pp) - mod_rank(p - 1, pp) == 0:
                    dims[p] = 0
                    settled = True
                    break
            if settled:
                continue
        dims[p] = cx.ranks[p] - exact_rank(p) - exact_rank(p - 1)
    return dims


def compute_cohomology(cx, degrees=None):
    """CohomologyResult for the requested degrees (default 0..D-1)."""
    if degrees is None:
        degrees = range(cx.top_degree)
    degs = _normalize_degrees(cx, degrees)
    dom = cx.domain
    if dom == QQ:
        dims = _rational_dims(cx, degs)
        records = [{"degree": p, "dim": dims[p]} for p in degs]
    elif isinstance(dom, GF):
        cache = {-1: 0}

        def rk(q):
            if q not in cache:
                cache[q] = rank(cx.diffs[q])
            return cache[q]

        records = [{"degree": p,
                    "dim": cx.ranks[p] - rk(p) - rk(p - 1)} for p in degs]
    elif dom == ZZ:
        qdiffs = [d.change_domain(QQ) for d in cx.diffs]
        qcx = _RationalView(cx, qdiffs)
        free = _rational_dims(qcx, degs)
        records = []
        snf_cache = {}
        for p in degs:
            if p == 0:
                tors = ()
            else:
                if p - 1 not in snf_cache:
                    snf_cache[p - 1] = smith_normal_form(cx.diffs[p - 1])
                tors = tuple(f for f in snf_cache[p - 1].invariant_factors
                             if f != 1)
            records.append({"degree": p, "free_rank": free[p],
                            "torsion": tors})
    else:
        raise TypeError("unsupported coefficient domain %r" % (dom,))
    return CohomologyResult(dom, cx.method_tag, records)


class _RationalView:
    """Minimal complex facade: integer complex seen with Q coefficients."""

    def __init__(self, cx, qdiffs):
        self.ranks = cx.ranks
        self.diffs = qdiffs
        self.top_degree = cx.top_degree


def pick_method(A):
    """The automatic method choice: jn > cibils > reduced."""
    fam = A.meta.get("family")
    if fam and fam[0] == "J":
        return "jn", None
    try:
        return "cibils", detect_splitting(A)
    except NotSplit:
        return "reduced", None


def cohomology_of(A, method="auto", degrees=range(0, 5), top_degree=None,
                  budget=DEFAULT_SIZE_BUDGET, splitting=None):
    """Cohomology of A with coefficients in the canonical quotient bimodule.

    method: auto | bar | reduced | cibils | jn.  Returns a CohomologyResult
    whose method_tag names the complex actually used; the built complex is
    attached as result.complex.
    """
    degs = sorted(set(int(p) for p in degrees))
    need_top = degs[-1] + 1
    if top_degree is not None:
        need_top = max(need_top, top_degree)
    sp = splitting
    if method == "auto":
        method, auto_sp = pick_method(A)
        sp = sp if sp is not None else auto_sp
    if method == "jn":
        fam = A.meta.get("family")
        if not fam or fam[0] != "J":
            raise ValueError(
                "the periodic method applies only to the Jordan-block "
                "truncated polynomial family")
        cx = jn_periodic_complex(fam[1], A.domain, top_degree=need_top,
                                 budget=budget)
    elif method == "cibils":
        if sp is None:
            sp = detect_splitting(A)
        cx = cibils_complex(A, splitting=sp, M=quotient_bimodule(A),
                            top_degree=need_top, budget=budget)
    elif method == "reduced":
        A1 = A.with_unit_first()
        cx = reduced_bar_complex(A1, M=quotient_bimodule(A1),
                                 top_degree=need_top, budget=budget)
    elif method == "bar":
        cx = bar_complex(A, M=quotient_bimodule(A), top_degree=need_top,
                         budget=budget)
    else:
        raise ValueError("unknown method %r" % (method,))
    result = compute_cohomology(cx, degs)
    result.complex = cx
    return result
