"""Thurston norm balls of 2-component 2-bridge links, computed exactly."""
from .arith import ContinuedFraction, cf_evaluate, convergents, even_cf, positive_cf
from .ball import (
    BallClassification,
    NormBall,
    ball_of,
    build_ball,
    classify,
    evaluate,
    face_count,
    rays_of,
    shape_of,
    vertex_norms,
)
from .base_norms import VertexNorms, base_vertex_norms, pm_type
from .diagram import (
    ComponentTrace,
    RationalDiagram,
    is_base_type,
    linking_number,
    self_crossing_boxes,
    split_diagram,
    trace_components,
)
from .errors import DomainError, InternalConsistencyError, KnotInputError, TwoBridgeError
from .farey import t10_path_length, t10_tree_build, x10_via_farey
from .satellite import (
    FamilyStep,
    SatelliteInput,
    ball_with_face_count,
    iterated_family,
    satellite_ball,
    satellite_evaluate,
)

__version__ = "0.1.0"
