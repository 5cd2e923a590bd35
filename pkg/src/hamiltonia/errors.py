"""Exception hierarchy shared by every module."""


class GroupError(ValueError):
    """Base class for invalid group inputs."""


class DegreeMismatch(GroupError):
    pass


class CapExceeded(GroupError):
    """A group or lattice is larger than the configured budget."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what} {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class ParseError(GroupError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ForeignSubgroup(GroupError):
    """A subgroup handle was used with a group it does not belong to."""
