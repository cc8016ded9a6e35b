"""Exception types shared across the package."""


class TripsemError(Exception):
    """Base class for all tripsem-specific errors."""


class DimensionError(TripsemError, ValueError):
    """Shapes or segment layouts of the operands do not agree."""


class DegenerateNegationError(TripsemError, ValueError):
    """Negation was requested on a layout with no inverted segment."""


class DegenerateWeightsError(TripsemError, ValueError):
    """Both propagation weights are zero, so the weight normalizer is 0."""


class UndefinedSimilarityError(TripsemError, ValueError):
    """Cosine similarity is undefined because a zero vector was supplied."""


class UnknownTokenError(TripsemError, KeyError):
    """A token required by a parse tree is missing from the lexicon."""

    def __str__(self) -> str:
        # KeyError would repr-quote the message; keep it plain.
        return self.args[0] if self.args else ""


class TreeArityError(TripsemError, ValueError):
    """A tree node does not have exactly two children; binarize first."""


class TreeParseError(TripsemError, ValueError):
    """Malformed bracketed tree text.

    The character offset of the problem is carried in ``offset`` and is
    repeated in the message.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class LexiconFormatError(TripsemError, ValueError):
    """Malformed lexicon file.

    The 1-based line number of the problem is carried in ``line`` and is
    repeated in the message.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line
