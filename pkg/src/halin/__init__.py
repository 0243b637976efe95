"""Recognition and colouring of Halin graphs."""

from .coloring import (
    Coloring,
    ColoringGap,
    EmptyCandidateSet,
    OrientedRepresentation,
    PrecolorConflict,
    PreconditionViolated,
    four_color_exact,
    orient_representation,
    three_color_wheel_free,
    verify_proper,
)
from .generator import GeneratorParams, generate_halin, perturb_non_halin
from .graph import Graph, degree, graph_from_edge_list, is_induced_cycle, is_tree, to_edge_list
from .recognition import (
    HalinCertificate,
    RecognitionReport,
    SpanningTree,
    bfs_tree,
    check_certificate,
    recognize_oracle,
    recognize_paper,
    verify_certificate,
)
from .wheels import (
    WheelWitness,
    brute_force_chromatic,
    chromatic_number_halin,
    find_odd_wheel,
    oracle_find_odd_wheel,
)

__version__ = "0.1.0"
