"""Exception hierarchy shared by all modknot modules."""


class ModknotError(ValueError):
    """Base class for user-facing errors."""


class InputError(ModknotError):
    """Malformed text input or an object that fails basic validation."""


class DomainError(ModknotError):
    """A well-formed input that violates a mathematical precondition."""


class NotHyperbolicError(DomainError):
    pass


class DegenerateFormError(DomainError):
    """Definite, square-discriminant or imprimitive form where an indefinite one is needed."""


class EquivalentWordsError(DomainError):
    """Two words that are cyclic shifts of each other (conjugate matrices)."""


class NotReciprocalError(DomainError):
    pass


class InternalConsistencyError(RuntimeError):
    """An invariant that the mathematics guarantees did not hold."""
