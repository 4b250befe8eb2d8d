from dataclasses import dataclass, fields, replace

from spexlab.base import (CYCLE_CAP,
                          CYCLE_CAP_MAX,
                          EIGEN_TOL,
                          ENUMERATION_CAP,
                          ENUMERATION_CONNECTED_CAP,
                          MINOR_GRAPH_CAP,
                          MINOR_PATTERN_CAP,
                          RESIDUAL_TOL,
                          ROOT_TOL,
                          TIE_RECHECK_TOL,
                          TIE_TOL)
from spexlab.exceptions import ConfigurationError
from spexlab.utils.logging import VERBOSITY_QUIET
from spexlab.utils.system import get_config_path


TOLERANCE_FIELDS = ('eigen_tol', 'residual_tol', 'tie_tol', 'tie_recheck_tol', 'root_tol')

CAP_MAXIMA = {
    'cycle_cap': CYCLE_CAP_MAX,
    'minor_graph_cap': MINOR_GRAPH_CAP,
    'minor_pattern_cap': MINOR_PATTERN_CAP,
    'enumeration_cap': ENUMERATION_CAP,
    'enumeration_connected_cap': ENUMERATION_CONNECTED_CAP,
}


@dataclass
class Config:
    """Tolerances, caps and run settings shared by the command line front end.

    Values are read from a key=value file (see :py:func:`load_config`) and can be overridden
    by command line flags.
    """
    eigen_tol: float = EIGEN_TOL
    residual_tol: float = RESIDUAL_TOL
    tie_tol: float = TIE_TOL
    tie_recheck_tol: float = TIE_RECHECK_TOL
    root_tol: float = ROOT_TOL
    cycle_cap: int = CYCLE_CAP
    minor_graph_cap: int = MINOR_GRAPH_CAP
    minor_pattern_cap: int = MINOR_PATTERN_CAP
    enumeration_cap: int = ENUMERATION_CAP
    enumeration_connected_cap: int = ENUMERATION_CONNECTED_CAP
    workers: int = 1
    output_dir: str = '.'
    seed: int = 42
    crossover_ceiling: int = 1000000
    max_quotient_cells: int = 16
    verbosity: int = VERBOSITY_QUIET

    def validate(self):
        """Checks tolerances and caps.

        Raises
        ------
        ConfigurationError
            If a tolerance is not positive, a cap is outside ``1..maximum`` or a count is not
            positive.
        """
        for name in TOLERANCE_FIELDS:
            if not getattr(self, name) > 0:
                raise ConfigurationError(f'{name} must be positive: {getattr(self, name)}')
        for name, maximum in CAP_MAXIMA.items():
            value = getattr(self, name)
            if not 1 <= value <= maximum:
                raise ConfigurationError(f'{name} must be in 1..{maximum}: {value}')
        for name in ('workers', 'crossover_ceiling', 'max_quotient_cells'):
            if getattr(self, name) < 1:
                raise ConfigurationError(f'{name} must be positive: {getattr(self, name)}')
        if self.verbosity < 0:
            raise ConfigurationError(f'verbosity must be non-negative: {self.verbosity}')
        return self

    def override(self, **kwargs):
        """Returns a validated copy with every non-None keyword applied."""
        return replace(self, **{key: value for key, value in kwargs.items()
                                if value is not None}).validate()

    @property
    def family_caps(self):
        return dict(cycle_cap=self.cycle_cap, minor_graph_cap=self.minor_graph_cap,
                    minor_pattern_cap=self.minor_pattern_cap)

    @property
    def enumeration_caps(self):
        return dict(cap=self.enumeration_cap, connected_cap=self.enumeration_connected_cap)


def _coerce(field, text):
    if field.type in (int, float):
        return field.type(text)
    return text


def parse_config(text):
    """Parses key=value lines into a validated :py:class:`Config`.

    Blank lines and lines starting with ``#`` are ignored.

    Raises
    ------
    ConfigurationError
        On a malformed line, an unknown key or a value of the wrong type.
    """
    known = {field.name: field for field in fields(Config)}
    values = dict()
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line == '' or line.startswith('#'):
            continue
        if '=' not in line:
            raise ConfigurationError(f'Line {number}: expected key=value, got {line!r}')
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in known:
            raise ConfigurationError(f'Line {number}: unknown key {key!r}')
        try:
            values[key] = _coerce(known[key], value)
        except ValueError:
            raise ConfigurationError(f'Line {number}: invalid value for {key}: {value!r}')
    return Config(**values).validate()


def load_config(path=None):
    """Loads the configuration from `path`, or from the file named by ``SPEXLAB_CONFIG``.

    Returns the defaults if neither is given.
    """
    path = path if path is not None else get_config_path()
    if path is None:
        return Config().validate()
    try:
        with open(path, encoding='utf-8') as f:
            return parse_config(f.read())
    except OSError as e:
        raise ConfigurationError(f'Cannot read config file {path}: {e}')
