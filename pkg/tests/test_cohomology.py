"""Cohomology extraction: examples, method agreement, UCT bookkeeping."""

import itertools
import random

import pytest

from hochschild.algebra import catalog, conjugate_algebra, detect_splitting
from hochschild.cohomology import (CohomologyResult, DegreeOutOfRange,
                                   cohomology_of, compute_cohomology,
                                   pick_method)
from hochschild.complexes import bar_complex, jn_periodic_complex
from hochschild.exactla import GF, QQ, ZZ, Mat, rank

from _tabledata import ALL_NAMES, field_dims, z_data

NOT_SPLITTABLE = {"M2", "M3", "P21", "P12", "M2xD1"}


# ---------------------------------------------------------------------------
# headline examples

def test_triangular_algebra_vanishes():
    r = cohomology_of(catalog("B2", QQ), degrees=range(5))
    assert r.dims() == (0, 0, 0, 0, 0)
    assert r.method_tag == "cibils"


def test_nilpotent_size2_over_z():
    r = cohomology_of(catalog("N2", ZZ), degrees=range(5))
    assert r.free_ranks() == (1, 1, 1, 1, 1)
    assert r.torsions() == ((), (2,), (), (2,), ())


def test_jordan3_f3_periodic():
    r = cohomology_of(catalog("J3", GF(3)), degrees=range(6))
    assert r.method_tag == "jn_periodic"
    assert r.dims() == (3, 3, 3, 3, 3, 3)


def test_auto_method_examples():
    r = cohomology_of(catalog("N3", QQ), degrees=range(6))
    assert r.dims() == (2, 2, 3, 4, 5, 6)
    assert r.method_tag == "cibils"
    r = cohomology_of(catalog("S4", QQ), degrees=range(5))
    assert r.dims() == (4, 6, 12, 24, 48)
    r = cohomology_of(catalog("S11", QQ), degrees=range(5))
    assert r.dims() == (1, 1, 0, 0, 0)
    r = cohomology_of(catalog("P21", QQ), degrees=range(4))
    assert r.method_tag == "reduced"


def test_pick_method():
    assert pick_method(catalog("J", QQ, 4))[0] == "jn"
    assert pick_method(catalog("S6", QQ))[0] == "cibils"
    assert pick_method(catalog("M2", QQ))[0] == "reduced"


def test_degree_guards():
    cx = jn_periodic_complex(3, QQ, top_degree=4)
    with pytest.raises(DegreeOutOfRange):
        compute_cohomology(cx, degrees=[4])
    with pytest.raises(DegreeOutOfRange):
        compute_cohomology(cx, degrees=[-1])
    with pytest.raises(DegreeOutOfRange):
        compute_cohomology(cx, degrees=[])
    with pytest.raises(ValueError):
        cohomology_of(catalog("N2", QQ), method="nonsense", degrees=[0])
    with pytest.raises(ValueError):
        cohomology_of(catalog("N2", QQ), method="jn", degrees=[0])


# ---------------------------------------------------------------------------
# cross-method agreement (representative subset; the acceptance suite
# runs the full catalog)

@pytest.mark.parametrize("name", ["B2", "N2", "C2", "S6", "S11", "N3",
                                  "S2", "D3"])
def test_method_agreement(name):
    for dom in (QQ, GF(2)):
        A = catalog(name, dom)
        base = cohomology_of(A, method="bar", degrees=range(4)).dims()
        assert cohomology_of(A, method="reduced",
                             degrees=range(4)).dims() == base
        if name not in NOT_SPLITTABLE:
            assert cohomology_of(A, method="cibils",
                                 degrees=range(4)).dims() == base


def test_agreement_with_frozen_tables():
    for name in ("N2", "J3", "S11", "S4", "N3", "S1", "C3", "S10"):
        for dom, char in ((QQ, 0), (GF(2), 2), (GF(3), 3)):
            got = cohomology_of(catalog(name, dom), degrees=range(5)).dims()
            assert got == field_dims(name, char), (name, char)
        rz = cohomology_of(catalog(name, ZZ), degrees=range(5))
        want = z_data(name)
        assert rz.free_ranks() == tuple(w[0] for w in want)
        assert rz.torsions() == tuple(tuple(w[1]) for w in want)


# ---------------------------------------------------------------------------
# universal-coefficient bookkeeping: the mod-p dimension equals the free
# rank plus torsion contributions from this degree and the next

@pytest.mark.parametrize("case", [("J", 2), ("J", 3), ("N2", None),
                                  ("S10", None)])
@pytest.mark.parametrize("p", [2, 3])
def test_universal_coefficients(case, p):
    name, par = case
    rz = cohomology_of(catalog(name, ZZ, par), degrees=range(6))
    rf = cohomology_of(catalog(name, GF(p), par), degrees=range(5))
    for d in range(5):
        t_here = sum(1 for t in rz[d]["torsion"] if t % p == 0)
        t_next = sum(1 for t in rz[d + 1]["torsion"] if t % p == 0)
        assert rf[d]["dim"] == rz[d]["free_rank"] + t_here + t_next


def test_rational_dims_equal_integer_free_ranks():
    for name in ("N2", "J3", "N3", "S6", "S11"):
        rq = cohomology_of(catalog(name, QQ), degrees=range(5)).dims()
        rz = cohomology_of(catalog(name, ZZ), degrees=range(5)).free_ranks()
        assert rq == rz, name


# ---------------------------------------------------------------------------
# Euler bookkeeping: alternating sums telescope onto the top differential

@pytest.mark.parametrize("name", ["S6", "N3", "S11", "J3", "N2"])
def test_euler_telescoping(name):
    A = catalog(name, QQ)
    res = cohomology_of(A, degrees=range(5))
    cx = res.complex
    lhs = sum((-1) ** p * (cx.ranks[p] - res[p]["dim"]) for p in range(5))
    top_rank = rank(cx.diffs[4])
    assert lhs == top_rank  # (-1)^4 = +1


# ---------------------------------------------------------------------------
# invariance spot checks (full parade in the acceptance suite)

def test_conjugation_invariance_spot():
    rng = random.Random(77)
    A = catalog("S11", QQ)
    base = cohomology_of(A, degrees=range(4)).dims()
    n = A.n
    g = Mat.identity(n, QQ)
    for _ in range(4):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            g = g.mul(Mat(n, n, QQ, {**Mat.identity(n, QQ)._d,
                                     (i, j): rng.randint(-2, 2)}))
    C = conjugate_algebra(A, g)
    assert cohomology_of(C, degrees=range(4)).dims() == base


def test_result_accessors():
    r = cohomology_of(catalog("N2", ZZ), degrees=[0, 2, 4])
    assert r.degrees == (0, 2, 4)
    assert r[2]["free_rank"] == 1
    with pytest.raises(KeyError):
        r[1]
    assert "cibils" in repr(r)
    rq = cohomology_of(catalog("N2", QQ), degrees=[1])
    assert rq[1]["dim"] == 1 and "h^1=1" in repr(rq)


def test_compute_cohomology_on_custom_complex():
    cx = bar_complex(catalog("C2", QQ), top_degree=3)
    r = compute_cohomology(cx)
    assert r.dims() == (3, 0, 0)
    assert r.method_tag == "bar"


def test_torsion_is_sorted_divisibility_chain():
    for n in (2, 3, 4, 5):
        r = cohomology_of(catalog("J", ZZ, n), degrees=range(6))
        for rec in r.records:
            tors = rec["torsion"]
            assert all(t > 1 for t in tors)
            assert all(tors[i + 1] % tors[i] == 0
                       for i in range(len(tors) - 1))
