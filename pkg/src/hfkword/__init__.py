"""Knot Floer homology of (1,1) knots computed from a single relator word.

Quick use::

    >>> from hfkword import parse_relator, compute_hfk, poincare_polynomial
    >>> str(poincare_polynomial(compute_hfk(parse_relator("XyXYxY"))))
    't^-1 q^-2 + q^-1 + t'
"""

from .basepoint import BasepointPair, count_basepoints, square_contribution
from .bigon import PrimitiveBigon, decompose, enumerate_primitive_bigons, is_disk_word, is_primitive, orientation_of
from .errors import HFKWordError
from .grading import (
    build_grading_graph,
    normalize_alexander,
    reduce_relator,
    relative_gradings,
    solve_relative,
)
from .invariant import (
    BigradedRank,
    alexander_via_abelianization,
    analyze,
    compute_hfk,
    euler_characteristic,
    poincare_polynomial,
    verify_euler_matches_alexander,
)
from .laurent import BivariateLaurent, LaurentPolynomial, laurent_equiv
from .lens import SpincPartition, compute_hfk_lens, spinc_partition
from .prestool import Classification, Tier, classify, transform, verify_transformation_covariance
from .word import CyclicRelator, DiskSpan, cyclically_reduce, format_relator, parse_relator, phi, validate

__version__ = "0.1.0"
