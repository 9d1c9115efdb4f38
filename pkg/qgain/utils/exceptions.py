"""
Custom exceptions for qgain.
"""


class QuaternionParseError(ValueError):
    """Exception raised when a quaternion token cannot be parsed."""
    def __init__(self, token, message="Malformed quaternion token"):
        self.token = token
        super().__init__(f"{message}: {token!r}")


class QuaternionDivisionError(ZeroDivisionError):
    """Exception raised when the zero quaternion is inverted."""
    def __init__(self, message="Zero quaternion has no inverse"):
        super().__init__(message)


class NonUnitGainError(ValueError):
    """Exception raised when a gain or switching value is not a unit quaternion."""
    def __init__(self, value, context="gain"):
        self.value = value
        self.context = context
        super().__init__(f"Non-unit {context}: {value}")


class NonPureQuaternionError(ValueError):
    """Exception raised when a pure quaternion (zero real part) is required."""
    def __init__(self, value, operation):
        self.value = value
        self.operation = operation
        super().__init__(f"{operation} expects a pure quaternion, got {value}")


class GraphStructureError(ValueError):
    """Exception raised when a graph would stop being simple, or vertex sets collide."""
    def __init__(self, message="Invalid graph structure"):
        super().__init__(message)


class GraphElementNotFoundError(LookupError):
    """Exception raised when a vertex or edge is not part of the graph."""
    def __init__(self, element_type, element_id=None):
        self.element_type = element_type
        self.element_id = element_id
        message = f"{element_type} not found"
        if element_id is not None:
            message += f": {element_id}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    """Exception raised when an operation needs a connected graph (or connected vertices)."""
    def __init__(self, operation, message="Graph is not connected"):
        self.operation = operation
        super().__init__(f"{message} (operation: {operation})")


class ReductionPreconditionError(ValueError):
    """Exception raised when a rank reduction is applied outside its hypothesis."""
    def __init__(self, operation, message="Reduction precondition violated"):
        self.operation = operation
        super().__init__(f"{message} (operation: {operation})")


class HypothesisViolationError(ValueError):
    """Exception raised when a checker is called on a graph outside its hypothesis class."""
    def __init__(self, check, message):
        self.check = check
        super().__init__(f"{check}: {message}")


class FamilySpecError(ValueError):
    """Exception raised when family constructor parameters are impossible."""
    def __init__(self, family, message):
        self.family = family
        super().__init__(f"{family}: {message}")


class GraphFileError(ValueError):
    """Exception raised when a graph file fails to parse or validate."""
    def __init__(self, path, message, location=None, line=None):
        self.path = path
        self.location = location
        self.line = line
        where = str(path)
        if line is not None:
            where += f":{line}"
        if location:
            where += f" [{location}]"
        super().__init__(f"{where}: {message}")


class ConfigurationError(ValueError):
    """Exception raised when a configuration value is missing or invalid."""
    def __init__(self, config_key, message=None):
        self.config_key = config_key
        super().__init__(message or f"Missing or invalid configuration: {config_key}")
