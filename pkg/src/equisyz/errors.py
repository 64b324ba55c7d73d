"""Exception types shared across modules."""


class SizeCapError(Exception):
    """A requested computation exceeds a configured size cap."""
