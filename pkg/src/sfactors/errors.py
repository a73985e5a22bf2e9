"""Exception hierarchy shared by every module."""


class SFactorError(Exception):
    """Base class for all library errors."""


class InputError(SFactorError, ValueError):
    """Malformed or inconsistent user input (CLI exit code 4)."""


class InvalidDescriptor(InputError):
    pass


class ParseError(InputError):
    pass


class TableInvalid(InputError):
    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"{axiom} violated at {self.witness}")


class EmptySubset(InputError):
    pass


class NotSymmetric(InputError):
    pass


class ContainsIdentity(InputError):
    pass


class OrderInfinite(InputError):
    pass


class PreconditionViolated(InputError):
    def __init__(self, hypothesis, message=None):
        self.hypothesis = hypothesis
        super().__init__(message or f"precondition failed: {hypothesis}")


class NotASubgroup(InputError):
    pass


class FNotValid(InputError):
    pass


class UnsupportedGroup(InputError):
    pass


class LimitExceeded(SFactorError):
    """A resource guard tripped (CLI exit code 3)."""


class CapExceeded(LimitExceeded):
    def __init__(self, cap, found):
        self.cap = cap
        self.found = found
        super().__init__(f"more than {cap} maximal sets (stopped after {found})")


class TooLarge(LimitExceeded):
    pass


class BudgetExceeded(LimitExceeded):
    def __init__(self, report):
        self.report = report
        super().__init__(
            f"subset budget exhausted after {report.subsets_scanned} subsets without a verdict"
        )


class SearchExhausted(LimitExceeded):
    pass


class StepsExhausted(LimitExceeded):
    pass
