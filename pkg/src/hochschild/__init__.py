"""Exact Hochschild cohomology of matrix subalgebras.

Computes H^i(A, M_n(R)/A) for unital subalgebras A of a matrix ring over
the rationals, prime fields, or the integers (with torsion), together with
the normalizer, tangent dimension, and smoothness / open-orbit certificates
of the associated deformation problem.  All arithmetic is exact.

Quick start::

    from hochschild import QQ, ZZ, catalog, cohomology_of, moduli_report
    cohomology_of(catalog("N2", ZZ), degrees=range(5))
    moduli_report(catalog("J3", QQ))
"""

from .exactla import (GF, QQ, ZZ, DomainNotField, Mat, NoSolution,
                      kernel_basis, rank, smith_normal_form, solve)
from .algebra import (Algebra, AlgebraError, BadParams, Bimodule,
                      CATALOG_DEG2, CATALOG_DEG3, NoUnit, NotClosed,
                      NotIndependent, NotInvertible, NotSaturated, NotSplit,
                      Splitting, UnknownName, catalog, catalog_info,
                      conjugate_algebra, detect_splitting, direct_product,
                      ideal_quotient_bimodule, quotient_bimodule,
                      regular_bimodule, sandwich_bimodule,
                      structure_constants_ok, transpose_algebra,
                      validate_splitting, verify_subalgebra)
from .complexes import (DEFAULT_SIZE_BUDGET, DEFAULT_TOP_DEGREE, Cochain,
                        CochainComplex, DegreeOverflow, SizeBudgetExceeded,
                        apply_d, bar_complex, cibils_complex, cup_product,
                        jn_periodic_complex, reduced_bar_complex)
from .cohomology import (CohomologyResult, DegreeOutOfRange,
                         cohomology_of, compute_cohomology, pick_method)
from .moduli import (ModuliReport, certificates, derivation_space,
                     moduli_report, normalizer, normalizer_dim,
                     tangent_dimension)

__version__ = "1.0.0"

__all__ = [
    "GF", "QQ", "ZZ", "DomainNotField", "Mat", "NoSolution",
    "kernel_basis", "rank", "smith_normal_form", "solve",
    "Algebra", "AlgebraError", "BadParams", "Bimodule",
    "CATALOG_DEG2", "CATALOG_DEG3", "NoUnit", "NotClosed",
    "NotIndependent", "NotInvertible", "NotSaturated", "NotSplit",
    "Splitting", "UnknownName", "catalog", "catalog_info",
    "conjugate_algebra", "detect_splitting", "direct_product",
    "ideal_quotient_bimodule", "quotient_bimodule", "regular_bimodule",
    "sandwich_bimodule", "structure_constants_ok", "transpose_algebra",
    "validate_splitting", "verify_subalgebra",
    "DEFAULT_SIZE_BUDGET", "DEFAULT_TOP_DEGREE", "Cochain",
    "CochainComplex", "DegreeOverflow", "SizeBudgetExceeded",
    "apply_d", "bar_complex", "cibils_complex", "cup_product",
    "jn_periodic_complex", "reduced_bar_complex",
    "CohomologyResult", "DegreeOutOfRange", "cohomology_of",
    "compute_cohomology", "pick_method",
    "ModuliReport", "certificates", "derivation_space", "moduli_report",
    "normalizer", "normalizer_dim", "tangent_dimension",
    "__version__",
]
