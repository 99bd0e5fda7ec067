"""Shared exception base so the CLI can catch every pipeline error at once."""


class DimgenError(Exception):
    """Base class for all errors raised by the dimgen pipeline."""
