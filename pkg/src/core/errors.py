"""Exception hierarchy shared by the algebra modules"""


class SuperalgebraError(Exception):
    """Base class for every error raised by the toolkit"""


class DimensionMismatchError(SuperalgebraError, ValueError):
    """Vectors, matrices or subspaces live in different ambient spaces"""


class SingularMatrixError(SuperalgebraError, ValueError):
    pass


class StructureError(SuperalgebraError, ValueError):
    """Structure-constant table is malformed (bad pair key, index or vector length)"""


class InvalidAlgebraError(SuperalgebraError):
    """Operation requires a validated Lie superalgebra"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotGradedError(SuperalgebraError, ValueError):
    pass


class NotAnIdealError(SuperalgebraError, ValueError):
    pass


class NotCentralError(SuperalgebraError, ValueError):
    pass


class UnsupportedModelError(SuperalgebraError, ValueError):
    """Model constructor refused its parameters"""
