"""Exception types shared across the package."""


class HybridIntelError(Exception):
    """Base class for all package errors."""


class DatasetParseError(HybridIntelError):
    """Malformed dataset document; carries a line/record locator when known."""

    def __init__(self, message: str, *, line: int | None = None, record: str | None = None):
        locator = []
        if line is not None:
            locator.append(f"line {line}")
        if record is not None:
            locator.append(f"record {record!r}")
        if locator:
            message = f"{message} ({', '.join(locator)})"
        super().__init__(message)
        self.line = line
        self.record = record


class ValidationError(HybridIntelError):
    """A record field violates its schema constraint."""

    def __init__(self, field: str, value: object, constraint: str):
        super().__init__(f"field {field!r} = {value!r} violates constraint: {constraint}")
        self.field = field
        self.value = value
        self.constraint = constraint


class EncodingError(HybridIntelError):
    """A record cannot be encoded into a feature vector."""


class TrainingError(HybridIntelError):
    """Model training cannot proceed or diverged."""


class PredictionError(HybridIntelError):
    """A trained model was asked to predict on an incompatible input."""


class PanelError(HybridIntelError):
    """A judgment panel violates its configuration (size, mixing)."""


class ConfigError(HybridIntelError):
    """Invalid configuration value or inconsistent configuration."""


class DegenerateDesignError(HybridIntelError):
    """Two-way ANOVA on perfectly additive data (zero error sum of squares)."""


class DuplicateJudgmentError(HybridIntelError):
    """A (rater_id, record_id) pair was submitted twice."""

    def __init__(self, rater_id: str, record_id: str):
        super().__init__(f"judgment by rater {rater_id!r} for record {record_id!r} already stored")
        self.rater_id = rater_id
        self.record_id = record_id
