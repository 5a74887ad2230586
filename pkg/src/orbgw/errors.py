"""Exception hierarchy.

Every error carries a module-qualified ``code`` so the CLI can emit a
machine-readable error object without string matching.
"""


class OrbGWError(Exception):
    module = "orbgw"

    @property
    def code(self) -> str:
        return f"{self.module}.{type(self).__name__}"


# group_core
class GroupError(OrbGWError):
    module = "group_core"


class InvalidPermutation(GroupError, ValueError):
    pass


class ClosureExceedsCap(GroupError):
    pass


class UnknownFamily(GroupError, ValueError):
    pass


class ParameterOutOfRange(GroupError, ValueError):
    pass


class InvalidMultiplicationTable(GroupError, ValueError):
    pass


# exact_algebra
class AlgebraError(OrbGWError):
    module = "exact_algebra"


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class NonMonomialDivision(AlgebraError):
    pass


class NonzeroConstantTerm(AlgebraError, ValueError):
    pass


class NotDivisible(AlgebraError):
    pass


# char_theory
class CharTheoryError(OrbGWError):
    module = "char_theory"


class TableComputationFailed(CharTheoryError):
    pass


class InvalidCharacterTable(CharTheoryError, ValueError):
    pass


class NonRationalResult(CharTheoryError):
    pass


class BudgetExceeded(OrbGWError):
    module = "char_theory"


# chen_ruan
class ChenRuanError(OrbGWError):
    module = "chen_ruan"


class NonIntegerMultiplicity(ChenRuanError):
    pass


# psi_intersection
class UnstableInput(OrbGWError, ValueError):
    module = "psi_intersection"


# rmatrix
class SymplecticCheckFailed(OrbGWError):
    module = "rmatrix"


# graph_sum
class GraphSumError(OrbGWError):
    module = "graph_sum"


class HeightBelowTwo(GraphSumError, ValueError):
    pass


class NonRationalCoefficient(GraphSumError):
    pass


class TruncationError(GraphSumError, ValueError):
    pass


# oracle
class OracleError(OrbGWError):
    module = "oracle"


class TruncationTooTight(OracleError):
    pass


class OracleBudgetExceeded(OracleError):
    pass


class MismatchFound(OracleError):
    def __init__(self, message: str, monomial=None, graph_value=None, oracle_value=None):
        super().__init__(message)
        self.monomial = monomial
        self.graph_value = graph_value
        self.oracle_value = oracle_value


# cli
class ConfigInvalid(OrbGWError, ValueError):
    module = "cli"
