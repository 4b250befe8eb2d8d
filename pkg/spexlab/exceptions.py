class SpexlabException(Exception):
    """Base class for spexlab exceptions."""
    pass


class CapExceededError(SpexlabException, ValueError):
    """Raised when an input exceeds a documented search or enumeration cap.

    The caps keep exhaustive searches at desk scale. They can be raised (up to the documented
    maxima) through :py:class:`spexlab.config.Config`.
    """
    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f'{what} exceeds cap: {value} > {cap}')


class ConfigurationError(SpexlabException, ValueError):
    """Raised when a configuration file or override contains an invalid key or value."""
    pass
