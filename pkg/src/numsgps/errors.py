"""Exception types shared across the package."""


class SemigroupError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(SemigroupError, ValueError):
    """No generators were supplied."""


class InvalidGeneratorError(SemigroupError, ValueError):
    """A generator is zero, negative, or not an integer."""


class NonCoprimeError(SemigroupError, ValueError):
    """The generators have gcd > 1, so the complement is infinite."""


class IntegerWidthError(SemigroupError, OverflowError):
    """A value exceeds the supported 64-bit integer envelope.

    Arithmetic is exact everywhere; inputs that could not be certified to
    stay in width are rejected rather than silently wrapped.
    """


class NotAMemberError(SemigroupError, ValueError):
    """An element required to lie in the semigroup does not."""


class NotRepresentableError(SemigroupError, ValueError):
    """The target integer is not a sum of the given generators."""


class NotSymmetricError(SemigroupError, ValueError):
    """The operation assumes a symmetric semigroup."""


class GluingError(SemigroupError, ValueError):
    """A gluing precondition failed."""


class NotCoprimeError(GluingError):
    """gcd(p, q) != 1."""


class PNotMemberError(GluingError):
    """p is not an element of the first semigroup."""


class QNotMemberError(GluingError):
    """q is not an element of the second semigroup."""


class PIsGeneratorError(GluingError):
    """p is a minimal generator of the first semigroup."""


class QIsGeneratorError(GluingError):
    """q is a minimal generator of the second semigroup."""


class NotSpecificError(SemigroupError, ValueError):
    """The gluing is not specific, so the requested guarantee is void."""


class UnknownTheoremError(SemigroupError, KeyError):
    """No theorem with the requested id is registered."""


class BoundsTooSmallError(SemigroupError, RuntimeError):
    """Sampling produced no instance satisfying the hypothesis."""


class InvariantViolation(SemigroupError, AssertionError):
    """A built-in cross-check failed; this always indicates a bug."""
