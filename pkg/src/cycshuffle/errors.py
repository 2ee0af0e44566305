"""Exception hierarchy.  Every error carries a short machine-readable ``code``."""


class CycShuffleError(ValueError):
    code = "error"


class InvalidPermutation(CycShuffleError):
    code = "invalid_permutation"


class UnknownStat(CycShuffleError):
    code = "unknown_stat"


class ElementOutOfRange(CycShuffleError):
    code = "element_out_of_range"


class NotInOrbit(CycShuffleError):
    code = "not_in_orbit"


class NotALetter(CycShuffleError):
    code = "not_a_letter"


class NotDisjoint(CycShuffleError):
    code = "not_disjoint"


class MalformedWord(CycShuffleError):
    code = "malformed_word"


class EscherSet(CycShuffleError):
    code = "escher_set"


class InvalidPeakSet(CycShuffleError):
    code = "invalid_peak_set"


class RangeViolation(CycShuffleError):
    code = "range_violation"


class TruncationMismatch(CycShuffleError):
    code = "truncation_mismatch"


class CatalogMiss(CycShuffleError):
    code = "catalog_miss"
