"""Exception hierarchy shared by every module."""


class ArgdecError(Exception):
    """Base class for all errors raised by the package."""


class InvalidFramework(ArgdecError, ValueError):
    pass


class EmptyDecisions(InvalidFramework):
    pass


class EmptyGoals(InvalidFramework):
    pass


class DuplicateId(InvalidFramework):
    pass


class UnknownGoalInGamma(InvalidFramework):
    pass


class InvalidPreference(InvalidFramework):
    pass


class UnknownDecision(ArgdecError, KeyError):
    pass


class UnknownNode(ArgdecError, KeyError):
    pass


class InvalidGraph(InvalidFramework):
    pass


class NotFlat(InvalidFramework):
    pass


class CyclicRuleDependency(ArgdecError):
    pass


class NotAdmissible(ArgdecError):
    pass


class IsAdmissible(ArgdecError):
    pass


class ExplosionBudgetExceeded(ArgdecError):
    pass


class SchemaError(ArgdecError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" if line is not None else ""
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}" if where else message)


class CriterionMismatch(ArgdecError, ValueError):
    """The preferred-set criterion was asked of a framework without preferences."""
