"""Exact-arithmetic Weyl alternation sets and Kostant weight multiplicities.

Root systems are realized in an ambient rational space, Weyl groups act by
orthogonal matrices over Fraction, the Kostant partition function and its
q-analog are computed by a memoized recursion over positive roots, and
multiplicities come from the alternating sum over the Weyl alternation set.
"""

from .errors import (CapExceeded, HeightExceeded, NotInRootSpan,
                     UnsupportedRank, WeylaltError)
from .kostant import (PartitionCache, QPolynomial, partition, partition_q,
                      partition_q_bruteforce)
from .multiplicity import (AlternationSet, WeightDiagramEntry,
                           alternation_set, multiplicity, q_multiplicity,
                           q_multiplicity_terms, weight_diagram)
from .rootsystem import (RootSystem, build, dominant_integral_weights_in_box,
                         fundamental_weight, highest_root, is_dominant,
                         is_dominant_integral, sum_of_simple_roots,
                         sum_of_simple_roots_in_fundamental_basis,
                         to_fundamental_coords, to_simple_root_coords)
from .weyl import (DEFAULT_CAP, WeylElement, enumerate_group, group_order,
                   identity_element, orbit, simple_reflection)

__version__ = "0.1.0"

__all__ = [
    "AlternationSet",
    "CapExceeded",
    "DEFAULT_CAP",
    "HeightExceeded",
    "NotInRootSpan",
    "PartitionCache",
    "QPolynomial",
    "RootSystem",
    "UnsupportedRank",
    "WeightDiagramEntry",
    "WeylElement",
    "WeylaltError",
    "alternation_set",
    "build",
    "dominant_integral_weights_in_box",
    "enumerate_group",
    "fundamental_weight",
    "group_order",
    "highest_root",
    "identity_element",
    "is_dominant",
    "is_dominant_integral",
    "multiplicity",
    "orbit",
    "partition",
    "partition_q",
    "partition_q_bruteforce",
    "q_multiplicity",
    "q_multiplicity_terms",
    "simple_reflection",
    "sum_of_simple_roots",
    "sum_of_simple_roots_in_fundamental_basis",
    "to_fundamental_coords",
    "to_simple_root_coords",
    "weight_diagram",
    "__version__",
]
