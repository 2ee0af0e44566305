"""Shuffle-compatibility of linear and cyclic permutation statistics."""
from .cyc import CycPerm, Induced, ceval, cyclic_classes
from .errors import CycShuffleError
from .perm import evaluate, parse_perm
from .shuffle import cyclic_shuffles, shuffles

__version__ = "0.1.0"
