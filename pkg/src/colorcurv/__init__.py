"""Discrete curvature as the expected Poincare-Hopf index over proper colorings."""

from .coloring import (
    ChromaticPolynomial,
    ColoringSpace,
    EmptySpaceError,
    chromatic_number,
    chromatic_polynomial,
    color_orbits,
    count_colorings,
    enumerate_colorings,
    index_expectation,
    index_moments,
    index_stddev,
    index_variance,
    richness,
    sublevel_count_expectation,
)
from .curvature import (
    LocalInjectivityError,
    curvature,
    curvatures,
    gauss_bonnet_check,
    index,
    indices,
    is_locally_injective,
    poincare_hopf_check,
    symmetric_index,
    symmetric_indices,
)
from .generators import (
    GraphSpec,
    complete,
    cycle,
    cytosine,
    diamond,
    erdos_renyi,
    fig6,
    gen_named,
    house,
    inductive_dimension,
    octahedron,
    path,
    star,
    wheel,
)
from .graph import (
    Graph,
    GraphInputError,
    build_graph,
    enumerate_cliques,
    euler_characteristic,
    f_vector,
    graph_from_json,
    handshake_check,
    local_clique_vector,
    sub_sphere,
    unit_sphere,
)

__version__ = "0.1.0"
