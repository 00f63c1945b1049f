'''
File formats: edge lists, JSON analysis reports, DOT drawings and CSV tables.

Edge list: '#'-prefixed header lines of key=value metadata (always n and m),
then one "u v" line per edge with u < v, sorted.
'''
import json
from typing import Any, Dict, Optional, Tuple
import pandas as pd
from construction.errors import ParseError, SpecError, TooLarge
from construction.extremal import ClassifiedGraph, VertexKind
from construction.graph import Graph, GraphBuilder

REPORT_SCHEMA_VERSION = 1
SIGNIFICANT_DIGITS = 15
DOT_MAX_T = 3
HUB_COLOR = '#1f77b4'

def write_edge_list(path: str, g: Graph, metadata: Optional[Dict[str, Any]] = None):
    '''
    Write a graph as a sorted edge list.

    :param path: Output file.

    :param g: Graph to write.

    :param metadata: Extra header entries, e.g. generator and t.

    '''
    header = {'n': g.n, 'm': g.m}
    header.update(metadata or {})
    us, vs = g.edges()
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for key, value in header.items():
            f.write(f'# {key}={value}\n')
        pd.DataFrame({'u': us, 'v': vs}).to_csv(f, sep=' ', header=False, index=False,
                                                lineterminator='\n')

def _decode(number: int, raw: bytes) -> str:
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError:
        raise ParseError(number, repr(raw.rstrip(b'\n')), 'not valid UTF-8') from None

def _vertex_id(tok: str) -> bool:
    return tok.isascii() and tok.isdigit()

def read_edge_list(path: str) -> Tuple[Graph, Dict[str, str]]:
    '''
    Read an edge list written by write_edge_list.

    :param path: Input file.

    '''
    metadata: Dict[str, str] = {}
    header_lines: Dict[str, int] = {}
    pairs = []
    with open(path, 'rb') as f:
        for number, raw in enumerate(f, start=1):
            line = _decode(number, raw)
            text = line.strip()
            if not text:
                continue
            if text.startswith('#'):
                key, sep, value = text[1:].strip().partition('=')
                if sep:
                    metadata[key.strip()] = value.strip()
                    header_lines[key.strip()] = number
                continue
            tokens = text.split()
            if len(tokens) != 2 or not all(_vertex_id(tok) for tok in tokens):
                raise ParseError(number, line.rstrip('\r\n'), 'expected two vertex ids')
            u, v = int(tokens[0]), int(tokens[1])
            if u == v:
                raise ParseError(number, line.rstrip('\r\n'), 'self-loop')
            pairs.append((number, u, v))

    if 'n' in metadata:
        if not _vertex_id(metadata['n']):
            raise ParseError(header_lines['n'], f'# n={metadata["n"]}', 'bad vertex count')
        n = int(metadata['n'])
    else:
        n = max((max(u, v) for _, u, v in pairs), default=-1) + 1

    builder = GraphBuilder(n)
    for number, u, v in pairs:
        if max(u, v) >= n:
            raise ParseError(number, f'{u} {v}', f'vertex id not below n={n}')
        builder.add_edge(u, v)
    return builder.finalize(), metadata

def _number(value: Any) -> Any:
    if isinstance(value, float):
        return float(f'{value:.{SIGNIFICANT_DIGITS}g}')
    return value

def dump_report(report: Dict[str, Any]) -> str:
    '''
    Serialize a report with sorted keys and 15 significant digits.

    :param report: JSON-compatible document.

    '''
    def walk(value):
        if isinstance(value, dict):
            return {k: walk(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [walk(v) for v in value]
        return _number(value)
    return json.dumps(walk(report), indent=2, sort_keys=True) + '\n'

def to_dot(g: ClassifiedGraph, max_t: int = DOT_MAX_T) -> str:
    '''
    DOT drawing of a small G*_t with one node style per vertex class.

    :param g: Classified graph with t <= max_t.

    :param max_t: Largest t drawn.

    '''
    if g.t > max_t:
        raise TooLarge(f'DOT export is limited to t <= {max_t}, got {g.t}')
    lines = [f'graph G_star_{g.t} {{', '  node [shape=circle, style=filled, fillcolor=white];']
    for v in range(g.graph.n):
        address = g.address_of(v)
        attrs = [f'label="{address.path or "-"}"', f'class="{address.vertex_class}"']
        if address.vertex_class.kind is VertexKind.HUB:
            attrs.append(f'fillcolor="{HUB_COLOR}"')
        elif address.vertex_class.kind is VertexKind.LEAF:
            attrs.append('shape=point, width=0.15')
        lines.append(f'  {v} [{", ".join(attrs)}];')
    us, vs = g.graph.edges()
    lines += [f'  {u} -- {v};' for u, v in zip(us.tolist(), vs.tolist())]
    lines.append('}')
    return '\n'.join(lines) + '\n'

def load_scaling_spec(path: str) -> list:
    '''
    Load a JSON campaign spec; an empty file is an empty spec.

    :param path: Spec file.

    '''
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    if not text.strip():
        return []
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f'{path}: {e}') from e
