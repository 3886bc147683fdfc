"""Shared exception types."""


class CapExceeded(Exception):
    """A requested object is larger than the configured desk-scale cap."""
