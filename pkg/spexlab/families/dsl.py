"""Parser for family descriptions such as ``list:P6``, ``cycles-ge:5`` or ``minor:K5``.

Finite lists separate members by ``;`` (member names may contain commas); ``list:@path`` reads
one graph6 code per line.
"""
from spexlab.base import CYCLE_CAP, MINOR_GRAPH_CAP, MINOR_PATTERN_CAP
from spexlab.families.base import (AllTreesOn,
                                   ChordedCycles,
                                   ConsecutiveEvenCycles,
                                   Counterexample7,
                                   CyclesAtLeast,
                                   CyclesModulo,
                                   DisjointCycles,
                                   FiniteList,
                                   MinorsOf,
                                   SubdivisionsOf)
from spexlab.families.exceptions import FamilySyntaxError
from spexlab.graphs.exceptions import ExpressionSyntaxError, Graph6FormatError
from spexlab.graphs.expressions import realize
from spexlab.graphs.graph6 import read_graph6_file


def _integers(kind, text, count=None):
    try:
        values = [int(part) for part in text.split(',')]
    except ValueError:
        raise FamilySyntaxError(f'{kind} expects integer arguments, got {text!r}')
    if count is not None and len(values) != count:
        raise FamilySyntaxError(f'{kind} expects {count} integer argument(s), got {text!r}')
    return values


def _options(kind, text):
    """Splits ``'2,min=5,equal'`` into the positional integer and a dict of options."""
    parts = text.split(',')
    positional = _integers(kind, parts[0], count=1)[0]
    options = dict()
    for part in parts[1:]:
        key, _, value = part.partition('=')
        options[key.strip()] = value.strip()
    return positional, options


def _graph(kind, text):
    try:
        return realize(text)
    except ExpressionSyntaxError as e:
        raise FamilySyntaxError(f'{kind}: invalid graph expression {text!r}: {e}') from e


def _option_int(kind, options, key, default):
    if key not in options:
        return default
    try:
        return int(options.pop(key))
    except ValueError:
        raise FamilySyntaxError(f'{kind}: option {key} expects an integer')


def _check_consumed(kind, options):
    if options:
        raise FamilySyntaxError(f'{kind}: unknown option(s) {", ".join(sorted(options))}')


def parse_family(text, cycle_cap=CYCLE_CAP, minor_graph_cap=MINOR_GRAPH_CAP,
                 minor_pattern_cap=MINOR_PATTERN_CAP):
    """Parses a family description.

    Parameters
    ----------
    text : str
        The description, e.g. ``'list:P6'``, ``'disjoint-cycles:2,min=5'`` or ``'all-trees:6'``.
    cycle_cap : int, default=CYCLE_CAP
        Cycle enumeration cap handed to cycle-based families.
    minor_graph_cap : int, default=MINOR_GRAPH_CAP
        Host order cap for minor and subdivision families.
    minor_pattern_cap : int, default=MINOR_PATTERN_CAP
        Pattern order cap for minor and subdivision families.

    Returns
    -------
    spec : FamilySpec
        The parsed family.

    Raises
    ------
    FamilySyntaxError
        If the description is malformed.
    """
    text = text.strip()
    if text == 'counterexample7':
        return Counterexample7()

    kind, sep, argument = text.partition(':')
    if sep == '' or argument.strip() == '':
        raise FamilySyntaxError(f'Expected "<kind>:<arguments>", got {text!r}')
    argument = argument.strip()

    try:
        if kind == 'list':
            if argument.startswith('@'):
                try:
                    graphs = read_graph6_file(argument[1:])
                except (OSError, Graph6FormatError) as e:
                    raise FamilySyntaxError(f'list: cannot read {argument[1:]!r}: {e}') from e
                return FiniteList(graphs)
            names = [name.strip() for name in argument.split(';')]
            return FiniteList([_graph(kind, name) for name in names], names=names)
        elif kind == 'cycles-ge':
            return CyclesAtLeast(_integers(kind, argument, count=1)[0], cycle_cap=cycle_cap)
        elif kind == 'cycles-mod':
            length, modulus = _integers(kind, argument, count=2)
            return CyclesModulo(length, modulus, cycle_cap=cycle_cap)
        elif kind == 'consec-even':
            return ConsecutiveEvenCycles(_integers(kind, argument, count=1)[0],
                                         cycle_cap=cycle_cap)
        elif kind == 'disjoint-cycles':
            count, options = _options(kind, argument)
            min_length = _option_int(kind, options, 'min', 3)
            max_length = _option_int(kind, options, 'max', None)
            chorded = options.pop('chorded', None)
            if chorded is not None:
                if any(char not in '01' for char in chorded):
                    raise FamilySyntaxError(f'{kind}: chorded expects a string of 0/1 flags')
                chorded = [char == '1' for char in chorded]
            equal_length = options.pop('equal', None) is not None
            _check_consumed(kind, options)
            return DisjointCycles(count, min_length=min_length, max_length=max_length,
                                  chorded=chorded, equal_length=equal_length,
                                  cycle_cap=cycle_cap)
        elif kind == 'chorded':
            count, options = _options(kind, argument)
            min_chords = _option_int(kind, options, 'chords', 1)
            incident = options.pop('incident', None) is not None
            _check_consumed(kind, options)
            return ChordedCycles(count, min_chords=min_chords, incident=incident,
                                 cycle_cap=cycle_cap)
        elif kind in ('minor', 'subdiv'):
            family_class = MinorsOf if kind == 'minor' else SubdivisionsOf
            return family_class(_graph(kind, argument), name=argument,
                                graph_cap=minor_graph_cap, pattern_cap=minor_pattern_cap)
        elif kind == 'all-trees':
            return AllTreesOn(_integers(kind, argument, count=1)[0])
    except FamilySyntaxError:
        raise
    except ValueError as e:
        raise FamilySyntaxError(f'{kind}: {e}') from e

    raise FamilySyntaxError(f'Unknown family kind {kind!r}')
