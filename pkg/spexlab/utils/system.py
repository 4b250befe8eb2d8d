import os

CONFIG_VARIABLE = 'SPEXLAB_CONFIG'


def get_config_path():
    """Returns the config file path named by the environment, or None if unset or empty."""
    value = os.environ.get(CONFIG_VARIABLE)
    if value:
        return value

    return None
