"""Conormal homology and rational K-theory of manifolds with embedded corners.

The heavy lifting lives in the compiled extension ``conormal._core``; this
package re-exports its public surface. Posets are built either from the
builders below or by parsing the ``corners 1`` text format, and every
computation is exact over arbitrary-precision integers.

>>> import conormal
>>> square = conormal.hypercube(2)
>>> [str(g) for g in conormal.homology(square)]
['0', '0', 'Z']
>>> conormal.ktheory(square).verdict
'OBSTRUCTED'
"""

from conormal._core import (
    AbelianGroup,
    AmbiguityError,
    ComparisonReport,
    CornerPoset,
    InvariantError,
    KTheoryReport,
    ParseError,
    ValidationError,
    __version__,
    betti_numbers,
    boundary_components,
    closed_manifold,
    contraction_sign,
    crosscheck,
    homology,
    homology_report,
    hypercube,
    interval,
    ktheory,
    parse,
    product,
    serialize,
    simplex,
    smith_normal_form,
    validate,
)

__all__ = [
    "AbelianGroup",
    "AmbiguityError",
    "ComparisonReport",
    "CornerPoset",
    "InvariantError",
    "KTheoryReport",
    "ParseError",
    "ValidationError",
    "__version__",
    "betti_numbers",
    "boundary_components",
    "closed_manifold",
    "contraction_sign",
    "crosscheck",
    "homology",
    "homology_report",
    "hypercube",
    "interval",
    "ktheory",
    "parse",
    "product",
    "serialize",
    "simplex",
    "smith_normal_form",
    "validate",
]
