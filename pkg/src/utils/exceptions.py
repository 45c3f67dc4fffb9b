import typing


class PipelineError(ValueError):
    """Base exception for any error raised by the pipeline.

    `category` is the machine-parsable error kind reported by the CLI, `exit_code` its process exit status.
    """

    category: typing.ClassVar[str] = "internal"
    exit_code: typing.ClassVar[int] = 1


####################
#   Embeddings
####################


class EmbeddingsError(PipelineError):
    """Base exception for any errors related to the word-embedding tables."""

    category = "parse"
    exit_code = 3


class EmbeddingsParseError(EmbeddingsError):
    """A word2vec file could not be parsed."""

    def __init__(self, path: typing.Any, message: str):
        """A word2vec file could not be parsed."""
        super().__init__(f"'{path}': {message}")


class EmbeddingsHeaderError(EmbeddingsParseError):
    """The '<count> <dim>' header of a word2vec file is malformed."""

    def __init__(self, path: typing.Any, offset: int, header: bytes | str):
        """The '<count> <dim>' header of a word2vec file is malformed."""
        super().__init__(path, f"malformed header {header!r} at byte offset {offset}")
        self.offset = offset


class EmbeddingsTruncatedError(EmbeddingsParseError):
    """A record of a word2vec file ended before all of its components were read."""

    def __init__(self, path: typing.Any, index: int, token: str | None, detail: str):
        """A record of a word2vec file ended before all of its components were read."""
        name = f" ('{token}')" if token else ""
        super().__init__(path, f"truncated record at token index {index}{name}: {detail}")
        self.index = index


class EmbeddingsValueError(EmbeddingsParseError):
    """A component of a word2vec text record is not a finite number."""

    def __init__(self, path: typing.Any, line: int, detail: str):
        """A component of a word2vec text record is not a finite number."""
        super().__init__(path, f"line {line}: {detail}")
        self.line = line


class DuplicateTokenError(EmbeddingsError):
    """The same token appears more than once in an embedding table."""

    category = "value"

    def __init__(self, token: str, index: int):
        """The same token appears more than once in an embedding table."""
        super().__init__(f"duplicate token '{token}' at token index {index}")
        self.token = token


class DimensionMismatchError(PipelineError):
    """Two vectors (or a model and its inputs) don't have the same dimensionality."""

    category = "dimension"
    exit_code = 5

    def __init__(self, expected: int, received: int, what: str = "vector"):
        """Two vectors (or a model and its inputs) don't have the same dimensionality."""
        super().__init__(f"{what} dimension mismatch: expected {expected}, received {received}")


####################
#   Corpus
####################


class CorpusError(PipelineError):
    """Base exception for any errors related to reading a sentence-pair corpus."""

    category = "parse"
    exit_code = 3


class CorpusParseError(CorpusError):
    """A corpus file is not well-formed XML."""

    def __init__(self, path: typing.Any, line: int | None, column: int | None, message: str):
        """A corpus file is not well-formed XML."""
        super().__init__(f"'{path}' line {line}, column {column}: {message}")
        self.line, self.column = line, column


class CorpusStructureError(CorpusError):
    """A corpus file doesn't follow the expected element structure."""

    category = "structure"

    def __init__(self, path: typing.Any, message: str, pair_id: str | None = None):
        """A corpus file doesn't follow the expected element structure."""
        where = f" (pair id '{pair_id}')" if pair_id is not None else ""
        super().__init__(f"'{path}'{where}: {message}")
        self.pair_id = pair_id


class LabelRangeError(CorpusError):
    """A similarity label lies outside of [1, 5]."""

    category = "range"

    def __init__(self, value: float, pair_id: str | None = None):
        """A similarity label lies outside of [1, 5]."""
        where = f" of pair '{pair_id}'" if pair_id is not None else ""
        super().__init__(f"similarity {value}{where} outside of [1, 5]")


class LabelValueError(CorpusError):
    """An entailment label is not one of the known classes."""

    category = "value"

    def __init__(self, value: str, pair_id: str | None = None):
        """An entailment label is not one of the known classes."""
        where = f" of pair '{pair_id}'" if pair_id is not None else ""
        super().__init__(f"unknown entailment class '{value}'{where}")


class DuplicatePairIdError(CorpusError):
    """Two pairs of the same dataset share an id."""

    category = "structure"

    def __init__(self, pair_id: str):
        """Two pairs of the same dataset share an id."""
        super().__init__(f"duplicate pair id '{pair_id}'")


class EmptyCorpusError(CorpusError):
    """An operation needing at least one document received none."""

    category = "data"
    exit_code = 4

    def __init__(self, what: str = "document collection"):
        """An operation needing at least one document received none."""
        super().__init__(f"empty {what}")


####################
#   Learn
####################


class LearnError(PipelineError):
    """Base exception for any errors raised while training or applying a model."""

    category = "data"
    exit_code = 4


class NonFiniteInputError(LearnError):
    """A design matrix or a target vector contains NaN or infinity."""

    def __init__(self, what: str):
        """A design matrix or a target vector contains NaN or infinity."""
        super().__init__(f"non-finite values in {what}")


class TooFewSamplesError(LearnError):
    """The operation needs more rows than it received."""

    def __init__(self, needed: int, received: int, what: str = "rows"):
        """The operation needs more rows than it received."""
        super().__init__(f"at least {needed} {what} are required, received {received}")


class ConvergenceError(LearnError):
    """An iterative solver hit its iteration cap before meeting its tolerance."""

    category = "convergence"
    exit_code = 6

    def __init__(self, solver: str, max_steps: int, violation: float, tol: float):
        """An iterative solver hit its iteration cap before meeting its tolerance."""
        super().__init__(
            f"{solver} did not converge within {max_steps} steps: max KKT violation {violation:.6g} > tol {tol:.6g}"
        )
        self.violation = violation


class SingleClassError(LearnError):
    """A classifier received labels of fewer than two classes."""

    def __init__(self, classes: typing.Iterable[typing.Any]):
        """A classifier received labels of fewer than two classes."""
        super().__init__(f"at least 2 classes are required, received {sorted(map(str, classes))}")


class EmptyGridError(LearnError):
    """A grid search received no candidate."""

    category = "config"
    exit_code = 2

    def __init__(self):
        """A grid search received no candidate."""
        super().__init__("the parameter grid has no candidate")


class UntrainedModelError(LearnError):
    """A prediction was requested from a missing or untrained model."""

    category = "model"
    exit_code = 5

    def __init__(self, what: str = "model"):
        """A prediction was requested from a missing or untrained model."""
        super().__init__(f"{what} is not trained")


####################
#   Metrics
####################


class MetricError(PipelineError):
    """Base exception for any errors raised while computing an evaluation measure."""

    category = "metric"
    exit_code = 4


class LengthMismatchError(MetricError):
    """Predictions and gold values don't have the same (or a sufficient) length."""

    def __init__(self, pred: int, gold: int, minimum: int = 1):
        """Predictions and gold values don't have the same (or a sufficient) length."""
        super().__init__(f"predictions ({pred}) and gold ({gold}) must have equal lengths >= {minimum}")


class UndefinedCorrelationError(MetricError):
    """Pearson correlation is undefined for a constant vector."""

    def __init__(self, which: str):
        """Pearson correlation is undefined for a constant vector."""
        super().__init__(f"Pearson correlation is undefined: {which} is constant")


####################
#   Pipeline
####################


class ConfigError(PipelineError):
    """The run configuration is invalid."""

    category = "config"
    exit_code = 2


class UnlabeledPairError(PipelineError):
    """A pair used for training or evaluation lacks the label required by the task."""

    category = "data"
    exit_code = 4

    def __init__(self, pair_id: str, task: str):
        """A pair used for training or evaluation lacks the label required by the task."""
        super().__init__(f"pair '{pair_id}' has no gold label for task '{task}'")
        self.pair_id = pair_id


class PairIdMismatchError(PipelineError):
    """Predictions and gold don't cover the same pair ids."""

    category = "data"
    exit_code = 4

    def __init__(self, pair_id: str, missing_from: str):
        """Predictions and gold don't cover the same pair ids."""
        super().__init__(f"pair id '{pair_id}' is missing from the {missing_from}")
        self.pair_id = pair_id


class ModelFileError(PipelineError):
    """A model, IDF or feature file can't be used (unknown version, wrong kind, unreadable)."""

    category = "model"
    exit_code = 5

    def __init__(self, path: typing.Any, message: str):
        """A model, IDF or feature file can't be used (unknown version, wrong kind, unreadable)."""
        super().__init__(f"'{path}': {message}")
