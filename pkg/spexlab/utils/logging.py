import logging

from contextlib import contextmanager
from logging import Logger, NOTSET


VERBOSITY_QUIET = 0
VERBOSITY_VERBOSE = 10
VERBOSITY_MORE_VERBOSE = 20
VERBOSITY_ALL = 100


class VerbosityLogger(Logger):
    """A logger which additionally filters records by a per-call verbosity.

    Search and verification loops log per-level or per-n details through this logger, so that a
    single ``verbosity`` setting controls how chatty a long-running search is, independently of the
    usual logging levels.
    """

    def __init__(self, name, level=NOTSET, verbosity=VERBOSITY_VERBOSE):
        super().__init__(name, level=level)

        self.verbosity = verbosity

    def _emits(self, verbosity):
        return self.verbosity >= verbosity

    def debug(self, msg, *args, verbosity=VERBOSITY_VERBOSE, **kwargs):
        if self._emits(verbosity):
            super().debug(msg, *args, **kwargs)

    def info(self, msg, *args, verbosity=VERBOSITY_VERBOSE, **kwargs):
        if self._emits(verbosity):
            super().info(msg, *args, **kwargs)

    def warning(self, msg, *args, verbosity=VERBOSITY_VERBOSE, **kwargs):
        if self._emits(verbosity):
            super().warning(msg, *args, **kwargs)

    def error(self, msg, *args, verbosity=VERBOSITY_VERBOSE, **kwargs):
        if self._emits(verbosity):
            super().error(msg, *args, **kwargs)

    def log(self, level, msg, *args, verbosity=VERBOSITY_VERBOSE, **kwargs):
        if self._emits(verbosity):
            super().log(level, msg, *args, **kwargs)


@contextmanager
def verbosity_logger():
    logger_class = logging.getLoggerClass()
    logging.setLoggerClass(VerbosityLogger)
    try:
        yield
    finally:
        logging.setLoggerClass(logger_class)


def get_logger(name, verbosity=VERBOSITY_QUIET):
    """Returns the named logger with its verbosity set.

    Loggers created before the first call (e.g. by a third party) are plain loggers; in that case
    the verbosity attribute is attached but only respected by :py:class:`VerbosityLogger`.
    """
    with verbosity_logger():
        logger = logging.getLogger(name)
    logger.verbosity = verbosity
    return logger


def configure_logging(verbosity):
    level = logging.INFO if verbosity > VERBOSITY_QUIET else logging.WARNING
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    logging.getLogger('spexlab').setLevel(level)
