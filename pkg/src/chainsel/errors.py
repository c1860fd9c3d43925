"""Exception types shared across the engine and its interfaces."""


class ChainselError(Exception):
    """Base class for all domain errors."""


class KBValidationError(ChainselError):
    """Knowledge base document or value violates the schema."""


class RequirementsError(ChainselError):
    """Requirements document or edit violates the schema."""


class UnknownIdError(ChainselError):
    """A criterion or alternative id does not exist in the knowledge base."""


class OverrideError(ChainselError):
    """The targeted cell is a catalog fact and cannot take a measured value."""


class NoActiveCriteriaError(ChainselError):
    """Every preference is zero: weights, and therefore ranking, are undefined."""


class DegenerateWeightsError(ChainselError):
    """Entropy or combined weights are undefined for the given matrix."""


class AmbiguousBaselineError(ChainselError):
    """Sensitivity needs a unique baseline winner and the ranking has a tie."""
