"""s-chromatic polynomials of simplicial complexes.

Colorings with no monochrome ``s``-simplex are counted three independent ways:
block-connected partitions and graph chromatic polynomials, the Möbius
function of the ``s``-chromatic lattice, and simplicial Stirling numbers.
"""

from .chromatic import (
    ChromaticTable,
    SubcomplexFamily,
    chrom_poly,
    chromatic_number,
    chromatic_table,
    f_vector_from_table,
    falling_factorial_form,
    generalized_chrom_poly,
    logconcavity_check,
    skeleton_uniqueness_check,
    table_values,
    union_wedge_polys,
)
from .complex import (
    BUILTIN_NAMES,
    SimplicialComplex,
    builtin,
    cyclic_polytope_boundary,
    disjoint_union,
    f_vector,
    faces,
    from_facets,
    full_simplex,
    induced,
    load_facets,
    skeleton,
    wedge,
)
from .errors import SchromeError
from .graphs import SimpleGraph, chromatic_number_graph, chromatic_polynomial_graph
from .lattice import (
    build_lattice,
    bms_euler,
    euler_sequence,
    mobius,
    mobius_weighted,
    monochrome_set_of_coloring,
    weighted_lattice,
)
from .partitions import (
    chromatic_number_setcover,
    count_independent_partitions,
    enumerate_bcp,
    maximal_independent_sets,
    stirling_row,
    stirling_simplex,
)
from .polynomial import FallingFactorialForm, IntPolynomial, evaluate, to_power_basis

__version__ = "0.1.0"
