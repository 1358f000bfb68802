"""Pattern-replacement equivalence classes of permutations."""

from .permcore import *  # noqa: F401,F403
from .engine import (  # noqa: F401
    CLASS_CAP,
    Census,
    ClassPartition,
    ResourceError,
    census,
    class_of,
    enumerate_partition,
    lift_back,
    lift_front,
    neighbors,
)

__version__ = "0.1.0"
