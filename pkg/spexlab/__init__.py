from spexlab.version import __version__

from spexlab.utils.logging import (
    verbosity_logger,
    VerbosityLogger,
    VERBOSITY_QUIET,
    VERBOSITY_VERBOSE,
    VERBOSITY_MORE_VERBOSE,
    VERBOSITY_ALL)

from spexlab.exceptions import CapExceededError, ConfigurationError, SpexlabException
from spexlab.config import Config, load_config
