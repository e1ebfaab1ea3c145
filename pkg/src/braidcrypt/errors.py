"""Exception hierarchy shared by every braidcrypt module."""


class BraidError(Exception):
    """Base class for all errors raised by braidcrypt."""


class MalformedInput(BraidError, ValueError):
    """Input that cannot be parsed or violates a type invariant."""


class MalformedWord(MalformedInput):
    pass


class StrandMismatch(MalformedInput):
    pass


class BadParameter(MalformedInput):
    pass


class NotSimple(MalformedInput):
    pass


class NotPositive(MalformedInput):
    pass


class OddShiftUnsupported(MalformedInput):
    pass


class ComplementTooSmall(BraidError):
    pass


class ExponentTooSmall(BraidError):
    """The public exponent cannot absorb the sampled secret.

    ``minimal`` is the smallest exponent half (k with 2k >= sup) that would work.
    """

    def __init__(self, message: str, minimal: int):
        super().__init__(message)
        self.minimal = minimal


class WrongRole(BraidError):
    pass


class VerificationFailure(BraidError):
    """A protocol value failed a consistency check."""


class ProtocolCorrupt(VerificationFailure):
    pass


class CiphertextCorrupt(VerificationFailure):
    pass


class ReductionFailed(VerificationFailure):
    pass


class EncodingOverflow(BraidError):
    pass


class DecodeError(MalformedInput):
    pass


class BadMagic(DecodeError):
    pass


class Truncated(DecodeError):
    pass


class InvalidNormalForm(DecodeError):
    pass


class BadFrame(DecodeError):
    pass
