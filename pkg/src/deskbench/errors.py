"""Exception types shared across the toolkit."""


class DeskbenchError(Exception):
    """Base class for all toolkit errors."""


class ShapeMismatchError(DeskbenchError):
    """Two grids (or a grid and its metadata) disagree in shape."""


class StepOutOfRangeError(DeskbenchError):
    """A diffusion step index lies outside 1..num_steps."""


class InvalidScheduleError(DeskbenchError):
    """Noise-schedule construction parameters violate their ranges."""


class DimensionMismatchError(DeskbenchError):
    """A vector or matrix has the wrong extent for the requested operation."""


class RankTooLargeError(DeskbenchError):
    """LoRA rank must be strictly smaller than both projection dimensions."""


class EmptyDatasetError(DeskbenchError):
    """Training requires at least one example."""


class NonFiniteLossError(DeskbenchError):
    """Training aborted because the loss became NaN or infinite."""


class PromptSyntaxError(DeskbenchError):
    """Base class for prompt-grammar failures."""


class UnbalancedParenthesesError(PromptSyntaxError):
    """Prompt contains a '(' without ')' or vice versa."""


class MalformedWeightError(PromptSyntaxError):
    """A numeric strength modifier is non-positive, out of range, or has no target."""


class EmptySourceError(DeskbenchError):
    """Ingest directory holds no decodable image."""


class ManifestFormatError(DeskbenchError):
    """A dataset manifest file does not follow the line format."""


class BackendUnavailableError(DeskbenchError):
    """The telemetry backend cannot be reached at sampler start."""


class DoubleStopError(DeskbenchError):
    """stop_sampler was called twice on the same handle."""


class TelemetryParseError(DeskbenchError):
    """A backend output line could not be parsed.

    The offending line is preserved verbatim in ``line``.
    """

    def __init__(self, message: str, line: str):
        super().__init__(f"{message}: {line!r}")
        self.line = line


class SchemaMismatchError(DeskbenchError):
    """A trace CSV file does not carry the expected header."""


class TraceInvariantError(DeskbenchError):
    """A finalized trace violates its ordering or sanity invariants."""


class TooFewSamplesError(DeskbenchError):
    """Energy integration needs at least two samples."""


class BaselineMissingError(DeskbenchError):
    """The requested baseline run is not in the metrics list."""


class EmptyManifestError(DeskbenchError):
    """Corpus scoring requires non-empty manifests."""


class SizeMismatchError(DeskbenchError):
    """An image does not match the feature extractor's expected input size."""


class CheckpointFormatError(DeskbenchError):
    """A checkpoint file is missing fields or has an unknown version."""


class ConfigError(DeskbenchError):
    """A benchmark configuration file is invalid or incomplete."""


class WorkloadFailedError(DeskbenchError):
    """The benchmarked workload exited abnormally; partial artifacts were kept."""
