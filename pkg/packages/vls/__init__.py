"""Problem-agnostic variable landscape search engine."""

from .acceptance import (
    KeepTheBest,
    LexicographicImprovement,
    ReevaluatedIncumbent,
    ShakenLandscapeImprovement,
    accept,
    accept_values,
    registry_objectives,
)
from .engine import run_bvls
from .landscape import (
    FormulationRegistry,
    Landscape,
    LandscapeSpace,
    evaluate_landscape,
    inverse_landscape,
)
from .local_search import BestImprovementSearcher, best_improvement_local_search
from .neighborhood_change import (
    ChangeOutcome,
    neighborhood_change_cyclic,
    neighborhood_change_sequential,
)
from .neighborhoods import (
    FULL_RANGE,
    DataNeighborhood,
    FormulationNeighborhood,
    shake_landscape,
)
from .streams import RngStreams, final_generator
from .structures import BvlsOutcome, EngineState, Plugins

__all__ = [
    "run_bvls",
    "Landscape",
    "LandscapeSpace",
    "FormulationRegistry",
    "evaluate_landscape",
    "inverse_landscape",
    "DataNeighborhood",
    "FormulationNeighborhood",
    "FULL_RANGE",
    "shake_landscape",
    "best_improvement_local_search",
    "BestImprovementSearcher",
    "neighborhood_change_sequential",
    "neighborhood_change_cyclic",
    "ChangeOutcome",
    "accept",
    "accept_values",
    "registry_objectives",
    "ShakenLandscapeImprovement",
    "KeepTheBest",
    "ReevaluatedIncumbent",
    "LexicographicImprovement",
    "RngStreams",
    "final_generator",
    "EngineState",
    "Plugins",
    "BvlsOutcome",
]
