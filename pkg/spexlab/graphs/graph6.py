import networkx as nx

from spexlab.graphs.exceptions import Graph6FormatError
from spexlab.graphs.graph import Graph


GRAPH6_HEADER = '>>graph6<<'


def graph6_encode(g):
    """Returns the graph6 string of `g` (without header or trailing newline)."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def graph6_decode(text):
    """Decodes a single graph6 string, keeping the labelling bit-exact.

    Raises
    ------
    Graph6FormatError
        If `text` is not a valid graph6 encoding.
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if text == '':
        raise Graph6FormatError('Empty graph6 string')
    if any(not 63 <= ord(char) <= 126 for char in text):
        raise Graph6FormatError(f'Invalid character in graph6 string: {text!r}')

    try:
        nx_graph = nx.from_graph6_bytes(text.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise Graph6FormatError(f'Malformed graph6 string {text!r}: {e}') from e
    return Graph.from_networkx(nx_graph)


def read_graph6_file(path):
    """Reads one graph per non-empty line."""
    with open(path, 'r', encoding='utf-8') as f:
        return [graph6_decode(line) for line in f if line.strip() != '']
