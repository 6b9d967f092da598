"""Exception hierarchy shared by all modules."""


class MonoidError(Exception):
    """Base class for every error raised by divmonoid."""


class PresentationError(MonoidError):
    """Malformed presentation text or structure."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BudgetExceeded(MonoidError):
    """A configured search budget (class size, time) was exhausted."""


class ForeignElementError(MonoidError):
    """An element from one monoid was passed to an operation of another."""


class NotADivisor(MonoidError):
    pass


class NoUniqueMaximum(MonoidError):
    """Common left divisors have no greatest element (not a divisibility monoid)."""


class MultipleMinimalMultiples(MonoidError):
    """Two incomparable minimal common right multiples were found."""


class VerificationFailure(MonoidError):
    """A property guaranteed by theory failed at runtime; indicates a bug."""


class NotGarside(MonoidError):
    pass


class LatticeError(MonoidError):
    """Structurally invalid finite poset (cycle, missing bottom or top, bad ids)."""
