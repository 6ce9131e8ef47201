"""Exception taxonomy shared by all missp modules.

Every failure the library can signal is a subclass of MisspError, so callers
(and the CLI, which maps each class to a distinct exit code) can catch one
base type or match precisely.
"""


class MisspError(Exception):
    """Base class for all errors raised by this package."""


# ---- solver ----

class NoWitness(MisspError):
    """The target sum is not achievable by any nonempty sub-multiset."""


# ---- block codec ----

class NonDigitCiphertext(MisspError):
    """Ciphertext contains a character outside '0'..'9'."""


class LengthMismatch(MisspError):
    """Ciphertext length is zero or not divisible as required by the keys."""


class ItemTooWide(MisspError):
    """An item does not fit in the configured digit width."""


class RaggedFamily(MisspError):
    """Sets of unequal size where equal size is required."""


class MalformedKeyFile(MisspError):
    """Key file is missing n/d, repeats them, or has an unparsable line."""


# ---- cipher ----

class PlaintextOutOfRange(MisspError):
    """Plaintext value lies outside the encodable range for (m, d)."""


class GenerationBudgetExhausted(MisspError):
    """No generated family passed the single-result check within the attempt budget."""


class NoSolution(MisspError):
    """Decryption found no common sum (wrong keys or corrupt block)."""


class AmbiguousPlaintext(MisspError):
    """Decryption found more than one common sum; the block is not decodable."""


# ---- dictionary ----

class DuplicateSign(MisspError):
    """The same sign appears twice in a dictionary."""


class DuplicateCode(MisspError):
    """The same code appears twice in a dictionary."""


class MalformedLine(MisspError):
    """A dictionary line is not '<sign><TAB><code>'."""


class NonPositiveCode(MisspError):
    """Dictionary codes must be positive integers."""


class RangeTooSmall(MisspError):
    """The encodable range cannot hold enough distinct codes."""


class UnknownSign(MisspError):
    """A sign to encode is not present in the dictionary."""


class UnknownCode(MisspError):
    """A decoded value is not present in the dictionary."""


# ---- network transfer ----

class RaggedBlocks(MisspError):
    """Frames require all ciphertext blocks to have the same length."""


class EmptyPayload(MisspError):
    """A frame must carry at least one nonempty block."""


class BadMagic(MisspError):
    """Received data does not start with the frame magic bytes."""


class UnsupportedVersion(MisspError):
    """Frame version byte is not one this implementation speaks."""


class FrameCorrupt(MisspError):
    """Frame header and payload are inconsistent or the payload is invalid."""


class ConnectionFailed(MisspError):
    """Could not establish the transport connection."""


class TransferTimeout(MisspError):
    """The peer did not complete the transfer within the timeout."""
