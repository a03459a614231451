"""Pseudocircle configurations encoded as combinatorial maps on the sphere."""
from .analysis import PPCReport, extract_cocircuits, lenses, verify_ppc  # noqa: F401
from .cmap import CombinatorialMap  # noqa: F401
from .ppc import (  # noqa: F401
    CorridorSpec,
    PPCConfiguration,
    build_ppc,
    init_configuration,
    insert_curve,
    select_corridor,
)
from .reduce import add_finger, reduce_crossings  # noqa: F401
