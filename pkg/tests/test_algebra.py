"""Subalgebra presentations: validation, catalog, splittings, bimodules."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild.algebra import (CATALOG_DEG2, CATALOG_DEG3, AlgebraError,
                                BadParams, NoSolution, NotClosed,
                                NotIndependent, NotInvertible, NotSaturated,
                                NotSplit, NoUnit, UnknownName, catalog,
                                catalog_info, conjugate_algebra,
                                detect_splitting, direct_product,
                                ideal_quotient_bimodule, quotient_bimodule,
                                regular_bimodule, sandwich_bimodule,
                                structure_constants_ok, transpose_algebra,
                                validate_splitting, verify_subalgebra)
from hochschild.exactla import GF, QQ, ZZ, Mat, rank

from _tabledata import ALL_NAMES, DEG2, DEG3, TRANSPOSE_PAIRS

NOT_SPLITTABLE = {"M2", "M3", "P21", "P12", "M2xD1"}

I2 = [[1, 0], [0, 1]]
E12 = [[0, 1], [0, 0]]
E21 = [[0, 0], [1, 0]]


def _span_matrix(A):
    return Mat(A.dim, A.n * A.n, QQ,
               {(k, i * A.n + j): Fraction(b.entry(i, j))
                for k, b in enumerate(A.basis)
                for i in range(A.n) for j in range(A.n)})


def spans_equal(A, B):
    if (A.n, A.dim) != (B.n, B.dim):
        return False
    ma, mb = _span_matrix(A), _span_matrix(B)
    stacked = Mat(A.dim * 2, A.n * A.n, QQ,
                  {**ma._d, **{(i + A.dim, j): v
                               for (i, j), v in mb._d.items()}})
    return rank(stacked) == A.dim


# ---------------------------------------------------------------------------
# validation taxonomy

def test_dependent_basis_rejected():
    with pytest.raises(NotIndependent):
        verify_subalgebra(2, QQ, [I2, [[2, 0], [0, 2]]])


def test_missing_unit_rejected():
    with pytest.raises(NoUnit):
        verify_subalgebra(2, QQ, [E12])


def test_not_closed_names_the_product():
    with pytest.raises(NotClosed) as exc:
        verify_subalgebra(2, QQ, [I2, E12, E21])
    assert exc.value.args[-1].endswith("a2 * a3 is not in the span") or \
        "a2 * a3" in str(exc.value)


def test_unsaturated_lattice_rejected_over_z():
    with pytest.raises(NotSaturated):
        verify_subalgebra(2, ZZ, [I2, [[0, 2], [0, 0]]])
    # the same span is fine over Q
    verify_subalgebra(2, QQ, [I2, [[0, 2], [0, 0]]])


def test_empty_basis_rejected():
    with pytest.raises(AlgebraError):
        verify_subalgebra(2, QQ, [])


def test_structure_constants_all_catalog():
    for name in ALL_NAMES:
        for dom in (QQ, GF(2), GF(3), GF(5), ZZ):
            A = catalog(name, dom)
            assert structure_constants_ok(A), (name, dom)


def test_member_coords():
    A = catalog("N2", QQ)
    assert A.member_coords(A.unit_matrix()) == A.unit_coords
    assert A.member_coords(Mat(2, 2, QQ, {(1, 0): 1})) is NoSolution


# ---------------------------------------------------------------------------
# catalog

def test_catalog_sizes_and_dims():
    assert len(DEG2) == 5 and len(DEG3) == 26
    for name in ALL_NAMES:
        info = catalog_info(name)
        A = catalog(name, QQ)
        assert A.dim == info["d"], name
        assert A.n == info["degree"], name


def test_catalog_unknown_and_bad_params():
    with pytest.raises(UnknownName):
        catalog("S99", QQ)
    with pytest.raises(BadParams):
        catalog("J", QQ, 1)


def test_catalog_families():
    assert catalog("B", QQ, 4).dim == 10
    assert catalog("M", QQ, 4).dim == 16
    assert catalog("D", QQ, 5).dim == 5
    assert catalog("C", QQ, 4).dim == 1
    assert catalog("J", QQ, 5).dim == 5
    assert spans_equal(catalog("P", QQ, (2, 1)), catalog("P21", QQ))
    assert spans_equal(catalog("P", QQ, (1, 2)), catalog("P12", QQ))


def test_jn_family_metadata():
    A = catalog("J", QQ, 4)
    assert A.meta["family"] == ("J", 4)
    assert catalog("J3", QQ).meta["family"] == ("J", 3)


def test_transpose_info_matches_pairs():
    for a, b in TRANSPOSE_PAIRS:
        assert catalog_info(a)["transpose"] == b
        assert catalog_info(b)["transpose"] == a


# ---------------------------------------------------------------------------
# unit-first re-basing

@pytest.mark.parametrize("name", ["S11", "S6", "N3", "P21", "S1"])
def test_with_unit_first(name):
    for dom in (QQ, GF(2), ZZ):
        A = catalog(name, dom)
        A1 = A.with_unit_first()
        assert A1.basis[0] == A1.unit_matrix()
        assert A1.dim == A.dim
        assert structure_constants_ok(A1)
        if dom == QQ:
            assert spans_equal(A, A1)
        if dom == ZZ:
            # re-basing must be unimodular: every old vector has integer
            # coordinates in the new basis and vice versa
            for b in A.basis:
                assert A1.member_coords(b) is not NoSolution
            for b in A1.basis:
                assert A.member_coords(b) is not NoSolution


# ---------------------------------------------------------------------------
# splittings

def test_detect_splitting_outcomes():
    for name in ALL_NAMES:
        A = catalog(name, QQ)
        if name in NOT_SPLITTABLE:
            with pytest.raises(NotSplit):
                detect_splitting(A)
        else:
            sp = detect_splitting(A)
            n = A.n
            # orthogonal idempotents summing to the identity
            total = Mat.zeros(n, n, QQ)
            for i, e in enumerate(sp.idempotents):
                assert e.mul(e) == e
                total = total.add(e)
                for j, f in enumerate(sp.idempotents):
                    if i != j:
                        assert e.mul(f).is_zero()
            assert total == Mat.identity(n, QQ)
            # radical is bigraded: e_t x e_u = x
            for x, (t, u) in zip(sp.radical, sp.bigrading):
                assert sp.idempotents[t].mul(x).mul(sp.idempotents[u]) == x


def test_radical_is_nilpotent_ideal():
    for name in ("S6", "N3", "J3", "S10", "B3"):
        A = catalog(name, QQ)
        sp = detect_splitting(A)
        rad = list(sp.radical)
        # multiply radical layers until they vanish
        layer = rad
        for _ in range(A.n + 1):
            if all(m.is_zero() for m in layer):
                break
            layer = [a.mul(b) for a in layer for b in rad]
        assert all(m.is_zero() for m in layer), name


def test_validate_splitting_roundtrip_and_rejection():
    A = catalog("S6", QQ)
    sp = detect_splitting(A)
    validate_splitting(A, list(sp.idempotents), list(sp.radical))
    with pytest.raises(AlgebraError):
        # a non-idempotent cannot be accepted
        validate_splitting(A, [Mat(3, 3, QQ, {(0, 1): 1})], list(sp.radical))
    with pytest.raises(AlgebraError):
        # dropping an idempotent breaks the unit sum
        validate_splitting(A, list(sp.idempotents)[:1], list(sp.radical))


# ---------------------------------------------------------------------------
# operations preserving the catalog entries

def test_transpose_pairs_conjugate_by_permutation():
    import itertools
    for a, b in TRANSPOSE_PAIRS:
        A, B = catalog(a, QQ), catalog(b, QQ)
        T = transpose_algebra(A)
        n = A.n
        found = False
        for perm in itertools.permutations(range(n)):
            P = Mat(n, n, QQ, {(i, perm[i]): 1 for i in range(n)})
            if spans_equal(conjugate_algebra(T, P), B):
                found = True
                break
        assert found, (a, b)


def test_self_transpose_entries():
    for name in ("M2", "B2", "D2", "N2", "C2", "N3", "J3", "S11", "S1"):
        import itertools
        A = catalog(name, QQ)
        T = transpose_algebra(A)
        n = A.n
        assert any(
            spans_equal(conjugate_algebra(
                T, Mat(n, n, QQ, {(i, p[i]): 1 for i in range(n)})), A)
            for p in itertools.permutations(range(n))), name


def test_conjugate_algebra_errors():
    A = catalog("N2", QQ)
    with pytest.raises(NotInvertible):
        conjugate_algebra(A, Mat(2, 2, QQ, {(0, 0): 1}))
    B = catalog("N2", ZZ)
    with pytest.raises(NotInvertible):
        conjugate_algebra(B, Mat(2, 2, ZZ, {(0, 0): 2, (1, 1): 1}))
    # unimodular works and validates
    g = Mat(2, 2, ZZ, {(0, 0): 1, (0, 1): 3, (1, 1): 1})
    C = conjugate_algebra(B, g)
    assert structure_constants_ok(C)


def test_direct_product_matches_catalog():
    D1 = verify_subalgebra(1, QQ, [[[1]]], name="D1")
    P = direct_product(D1, D1)
    assert spans_equal(P, catalog("D2", QQ))
    Q2 = direct_product(catalog("M2", QQ), D1)
    assert spans_equal(Q2, catalog("M2xD1", QQ))
    assert direct_product(catalog("B2", QQ), D1).dim == 4


# ---------------------------------------------------------------------------
# bimodules

def test_quotient_basis_row_major():
    bm = quotient_bimodule(catalog("B2", QQ))
    assert bm.tags == (("unit", 1, 0),)
    bm = quotient_bimodule(catalog("S1", QQ))
    assert [t[1:] for t in bm.tags] == [
        (0, 0), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1)]
    for name in ALL_NAMES:
        A = catalog(name, QQ)
        assert quotient_bimodule(A).dim == A.n * A.n - A.dim


def test_bimodule_action_laws():
    rng = random.Random(3)
    for name in ("N2", "S6", "S11", "J3"):
        A = catalog(name, QQ)
        bm = quotient_bimodule(A)
        d, m = A.dim, bm.dim
        for _ in range(10):
            i, j = rng.randrange(d), rng.randrange(d)
            v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(m))
            # (a_i a_j) . v = a_i . (a_j . v) via structure constants
            lhs = bm.act_left(i, bm.act_left(j, v))
            rhs = tuple(sum((c * x for c, x in
                             zip(A.mult[i][j], col)), Fraction(0))
                        for col in zip(*[bm.act_left(k, v)
                                         for k in range(d)]))
            assert lhs == rhs
            # v . (a_i a_j) = (v . a_i) . a_j
            lhs = bm.act_right(j, bm.act_right(i, v))
            rhs = tuple(sum((c * x for c, x in
                             zip(A.mult[i][j], col)), Fraction(0))
                        for col in zip(*[bm.act_right(k, v)
                                         for k in range(d)]))
            assert lhs == rhs


def test_regular_and_ideal_quotient_bimodules():
    A = catalog("N3", QQ)
    bm, pairing = regular_bimodule(A)
    assert bm.dim == A.dim
    T, pairT = ideal_quotient_bimodule(A, [1, 2, 3])
    assert T.dim == 1  # N3 mod its radical
    with pytest.raises(AlgebraError):
        ideal_quotient_bimodule(A, [1])  # not an ideal: misses products


def test_sandwich_bimodules_for_triangular_tower():
    A = catalog("S11", QQ)
    # span(A + E11) / span(A): one class
    mp = sandwich_bimodule(A, [(1, 1)])
    assert mp.dim == 1
    m21 = sandwich_bimodule(A, [(1, 1), (2, 1)], [(1, 1)])
    assert m21.dim == 1
    m32 = sandwich_bimodule(A, [(1, 1), (2, 1), (3, 2)], [(1, 1), (2, 1)])
    assert m32.dim == 1
    # everything over the upper-triangular span: three classes
    full = sandwich_bimodule(A, [(1, 1), (2, 1), (3, 1), (3, 2)], [(1, 1)])
    assert full.dim == 3
    with pytest.raises(AlgebraError):
        # span(A + E21) is not stable on the right under A
        sandwich_bimodule(A, [(2, 1)])


# ---------------------------------------------------------------------------
# random-presentation property: conjugation preserves validity

@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_unimodular_conjugates_stay_valid(seed):
    rng = random.Random(seed)
    name = rng.choice(["B2", "N2", "S2", "S11", "J3"])
    A = catalog(name, ZZ)
    n = A.n
    g = Mat.identity(n, ZZ)
    for _ in range(3):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            e = Mat.identity(n, ZZ)
            e = Mat(n, n, ZZ, {**e._d, (i, j): rng.randint(-2, 2)})
            g = g.mul(e)
    C = conjugate_algebra(A, g)
    assert structure_constants_ok(C)
    assert C.dim == A.dim
