"""Exact equivariant commutative algebra for subspace arrangements.

Computes equivariant Hilbert series, Betti tables and Castelnuovo-Mumford
regularity for product ideals of subspace arrangements over the symmetric
algebra, transposes everything to the exterior algebra by conjugating
Schur indices, and verifies the formulas against an independent
brute-force oracle in explicit coordinates.
"""

from .arrangements import (
    Arrangement,
    Polymatroid,
    check_lines_leading_terms,
    hilbert_product,
    lines_first_disagreement,
    p_polynomial,
    polymatroid_of,
)
from .betti import (
    BettiTable,
    GenerationDegreeError,
    LinearityError,
    betti_from_series,
    regularity,
    series_from_betti,
    transpose_table,
)
from .errors import SizeCapError
from .linalg import Subspace, intersect, row_reduce, subspace_from_vectors
from .oracle import (
    DEFAULT_CAPS,
    CoordinateIdealBasis,
    GradedCharacter,
    OracleCaps,
    character_to_schur,
    intersection_ideal_character,
    product_ideal_character,
    wedge_ideal_character,
)
from .partitions import (
    Partition,
    conjugate,
    kostka_number,
    lr_coefficient,
    partitions_of,
    weyl_dimension,
)
from .schur import (
    SchurSeries,
    from_weight_multiplicities,
    sigma,
    sigma_power,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BettiTable",
    "CoordinateIdealBasis",
    "DEFAULT_CAPS",
    "GenerationDegreeError",
    "GradedCharacter",
    "LinearityError",
    "OracleCaps",
    "Partition",
    "Polymatroid",
    "SchurSeries",
    "SizeCapError",
    "Subspace",
    "betti_from_series",
    "character_to_schur",
    "check_lines_leading_terms",
    "conjugate",
    "from_weight_multiplicities",
    "hilbert_product",
    "intersect",
    "intersection_ideal_character",
    "kostka_number",
    "lines_first_disagreement",
    "lr_coefficient",
    "p_polynomial",
    "partitions_of",
    "polymatroid_of",
    "product_ideal_character",
    "regularity",
    "row_reduce",
    "series_from_betti",
    "sigma",
    "sigma_power",
    "subspace_from_vectors",
    "transpose_table",
    "weyl_dimension",
    "wedge_ideal_character",
]
