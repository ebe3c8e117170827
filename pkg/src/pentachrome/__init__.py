"""Certified colorings of (P5, HVN)-free graphs with at most omega+3 colors."""

from .base import (Coloring, classify_paw_free, color_anticomplete_set, color_paw_free_prescribed,
                   color_triangle_free_prescribed, recognize_p5_k3_free)
from .detectors import Witness, brute_force_contains, check_class, find_induced
from .graph import Graph, build_graph, connected_components, induced_subgraph
from .oracles import chromatic_number_exact, greedy_coloring, max_clique
from .partition import (partition_by_c5, partition_by_t5, partition_by_y5, partition_wheel_free,
                        validate_partition)
from .pipeline import (ColorOptions, ColoringCertificate, color_graph, color_wheel_free,
                       verify_certificate)
from .wheels import color_with_t5, color_with_y5

__version__ = "0.1.0"
