"""Exception hierarchy shared across the codec."""


class AdaCodecError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(AdaCodecError):
    """An operation that needs at least one symbol got none."""


class ValueRangeError(AdaCodecError):
    """A value does not fit the requested bit width."""


class TruncatedStreamError(AdaCodecError):
    """A read ran past the end of a bit stream or byte payload."""


class UnknownSymbolError(AdaCodecError):
    """A message symbol has no codeword in the supplied codebook."""


class BadThresholdError(AdaCodecError):
    """The distance threshold is not of the form 2**x - 1 with 1 <= x <= 8."""


class DecodeError(AdaCodecError):
    """Base class for failures while reconstructing a message."""


class UnknownCodewordError(DecodeError):
    """Bits in the codeword stream match no dictionary entry."""


class SymbolRangeError(DecodeError):
    """A distance-decoded symbol fell outside the byte range 0-255."""


class DictionaryError(AdaCodecError):
    """Base class for problems with a serialized dictionary."""


class MalformedLineError(DictionaryError):
    """A dictionary line does not have the symbol/length/codeword shape."""


class DuplicateSymbolError(DictionaryError):
    """The same symbol appears twice in a dictionary."""


class CountMismatchError(DictionaryError):
    """The declared symbol count disagrees with the listed entries."""


class PrefixViolationError(DictionaryError):
    """One codeword is a prefix of another."""


class KraftViolationError(DictionaryError):
    """Codeword lengths do not satisfy the Kraft equality."""


class ContainerError(AdaCodecError):
    """Base class for malformed binary containers."""


class BadMagicError(ContainerError):
    """The container does not start with the expected magic bytes."""


class UnsupportedVersionError(ContainerError):
    """The container declares a format version this build cannot read."""


class InvalidCountsError(AdaCodecError):
    """Adjacency counts exceed the symbol frequencies they come from."""


class CorpusParseError(AdaCodecError):
    """A corpus file line does not follow the message/text tag format."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class InsufficientDataError(AdaCodecError):
    """Too few corpus records to build a single test case."""


class RoundTripError(AdaCodecError):
    """Decoding an encoded message did not reproduce the input (codec bug)."""
