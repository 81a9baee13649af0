from typing import Optional

class FswEvalError(Exception):
    def __init__(self, message: str = "", error_type: Optional[str] = None):
        self.message = message
        self.error_type = error_type
        super().__init__(self.__str__())

    def __str__(self) -> str:
        if self.error_type is not None:
            return f"[{self.error_type}] {self.message}"
        return self.message

class InvalidConfigError(FswEvalError):
    def __init__(self, message: str = ""):
        super().__init__(message, "Invalid config")

class FswSyntaxError(FswEvalError):
    """Any rejection of FSW input. Carries the byte offset and, for files, the line."""
    def __init__(self, message: str = "", error_type: str = "Malformed FSW",
                 offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        self.reason = message
        location = []
        if line is not None:
            location.append(f"line {line}")
        if offset is not None:
            location.append(f"offset {offset}")
        if location:
            message = f"{message} (at {', '.join(location)})"
        super().__init__(message, error_type)

    def at_line(self, line: int) -> "FswSyntaxError":
        return type(self)(self.reason, offset=self.offset, line=line)

class MalformedFsw(FswSyntaxError):
    def __init__(self, message: str = "", offset: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message, "Malformed FSW", offset, line)

class SymbolOutOfRange(FswSyntaxError):
    def __init__(self, message: str = "", offset: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message, "Symbol out of range", offset, line)

class CoordinateOutOfRange(FswSyntaxError):
    def __init__(self, message: str = "", offset: Optional[int] = None, line: Optional[int] = None):
        super().__init__(message, "Coordinate out of range", offset, line)

class DimensionMismatch(FswEvalError):
    def __init__(self, message: str = "", expected: Optional[int] = None, actual: Optional[int] = None):
        self.expected = expected
        self.actual = actual
        if expected is not None and actual is not None:
            message = f"{message} (Expected: {expected}, Actual: {actual})"
        super().__init__(message, "Dimension mismatch")

class ZeroVector(FswEvalError):
    def __init__(self, message: str = ""):
        super().__init__(message, "Zero vector")

class UnknownEmbedding(FswEvalError):
    def __init__(self, message: str = ""):
        super().__init__(message, "Unknown embedding")

class DuplicateId(FswEvalError):
    def __init__(self, message: str = "", line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"{message} (at line {line})"
        super().__init__(message, "Duplicate id")

class SampleTooLarge(FswEvalError):
    def __init__(self, message: str = "", required: Optional[int] = None, available: Optional[int] = None):
        self.required = required
        self.available = available
        if required is not None and available is not None:
            message = f"{message} (Required: {required}, Available: {available})"
        super().__init__(message, "Sample too large")

class CorpusError(FswEvalError):
    def __init__(self, message: str = "", path: Optional[str] = None):
        self.path = path
        if path:
            message = f"{message} (Path: {path})"
        super().__init__(message, "Corpus error")
