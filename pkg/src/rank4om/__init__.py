"""Uniform rank-4 oriented matroids, matroid polytopes and their pseudocircle pictures."""
from .errors import *  # noqa: F401,F403
from .signs import (  # noqa: F401
    Chirotope,
    GroundSet,
    OrientedMatroid,
    SignVector,
    check_cocircuit_axioms,
    chirotope_to_cocircuits,
    cocircuits_to_chirotope,
    compose,
    is_acyclic,
    lex_extension,
    rank_by_chain,
    validate_chirotope,
)
from .polytope import (  # noqa: F401
    caratheodory_witness,
    extreme_points,
    face_report,
    facets,
    is_face,
    is_matroid_polytope,
)
from .realization import (  # noqa: F401
    PointConfig,
    chirotope_from_points,
    circle_picture,
    cyclic_points,
    random_realizable,
)
from .simplicial import Quadruple, brute_force_simplicial, find_simplicial_reorientation  # noqa: F401
from .mutation import explore_flip_graph, flip, is_mutation  # noqa: F401
from .io import parse_chirotope, parse_points, serialize_chirotope, serialize_points  # noqa: F401

__version__ = "0.1.0"
