"""Exception hierarchy shared across the package.

Each class carries the CLI exit code used when the error surfaces at the
command line, so error kinds stay distinguishable in scripts.
"""


class DropuqError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(DropuqError):
    """Invalid configuration value, unknown key, or inconsistent settings."""

    exit_code = 2


class SchemaError(DropuqError):
    """Structurally invalid input: ragged grids, missing columns, bad shapes."""

    exit_code = 3


class ParseError(SchemaError):
    """Unparseable field in an input file; message names the row."""

    exit_code = 3


class MissingArtifactError(DropuqError):
    """A required upstream artifact (checkpoint, predictions file) is absent."""

    exit_code = 4


class StaleConfigError(DropuqError):
    """Artifact was produced under a different configuration hash."""

    exit_code = 5
