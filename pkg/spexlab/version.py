import json
from pathlib import Path


def _read_version(path):
    with open(path) as f:
        version = json.load(f)

    parts = [version['major'], version['minor'], version['micro']]
    version_str = '.'.join(map(str, parts))
    if version['pre_release'] != '':
        version_str += '.' + version['pre_release']
    return version_str


__version__ = _read_version(Path(__file__).parent.joinpath('version.json'))
