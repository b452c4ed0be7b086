"""Exception types raised across the package."""


class SymconfError(Exception):
    """Base class for all package errors."""


class UnknownSymbol(SymconfError):
    pass


class MalformedToken(SymconfError):
    pass


class ValidationFailed(SymconfError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


class CompactOverflow(SymconfError):
    pass


class NotConnected(SymconfError):
    pass


class BoundExceeded(SymconfError):
    pass


class DecompositionNotFound(SymconfError):
    pass


class PreconditionViolated(SymconfError):
    pass


class InvalidBase(PreconditionViolated):
    pass


class InvalidChoice(PreconditionViolated):
    pass


class EvenCount(PreconditionViolated):
    pass


class OutOfRange(PreconditionViolated):
    pass


class BadBase(PreconditionViolated):
    pass


class NotAStrong3Colouring(PreconditionViolated):
    pass


class FourCycleRisk(PreconditionViolated):
    pass


class MismatchReport(SymconfError):
    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
        super().__init__(f"{len(self.mismatches)} mismatch(es)")
