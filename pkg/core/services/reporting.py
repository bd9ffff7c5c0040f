"""
Rendering of command output as JSON, TSV or text.

JSON goes through the REST framework renderer, TSV through pandas, and
the text format mirrors the usual written notation (chi = (n0, ...) and
the resolution display).
"""

import logging
from typing import Any, Dict, List, Optional

import pandas as pd
from rest_framework.renderers import JSONRenderer

from core.constants import OutputFormats

logger = logging.getLogger(__name__)


def render_json(data: Any) -> str:
    content = JSONRenderer().render(data, renderer_context={'indent': 2})
    return content.decode('utf-8') + '\n'


def _flatten(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return ','.join(str(_flatten(v)) for v in value)
    if isinstance(value, dict):
        return ';'.join(f'{k}:{_flatten(v)}' for k, v in value.items())
    if value is None:
        return ''
    return value


def render_tsv(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    """One line per row; list cells are comma-joined."""
    frame = pd.DataFrame([{k: _flatten(v) for k, v in row.items()} for row in rows], columns=columns)
    return frame.to_csv(sep='\t', index=False, lineterminator='\n')


def _chi(entries) -> str:
    return '(' + ', '.join(str(n) for n in entries) + ')'


def _resolution_display(betti: Dict[str, Any]) -> str:
    def summand(degrees):
        counts: Dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return ' + '.join(
            f'O(-{d})' if c == 1 else f'{c}O(-{d})' for d, c in sorted(counts.items())
        )
    return f"0 -> {summand(betti['b'])} -> {summand(betti['a'])} -> I -> 0"


def _table_lines(table: Dict[str, Any]) -> List[str]:
    width = len(table['H'])
    lines = ['n     ' + ' '.join(f'{n:>4}' for n in range(width))]
    for key in ('H', 'delta', 'h0', 'h1'):
        lines.append(f'{key:<6}' + ' '.join(f'{v:>4}' for v in table[key]))
    return lines


def text_analysis(data: Dict[str, Any]) -> str:
    verdict = data['verdict']
    lines = [
        f"chi = {_chi(data['character'])}",
        f"s = {data['s']}, deg = {data['degree']}",
        f"connected: {'yes' if data['connected'] else 'no'}"
        + ('' if data['connected'] else f" (gaps at t = {', '.join(map(str, data['gaps']))})"),
        'decomposition: ' + ', '.join(
            f"{_chi(p['character'])}+{p['shift']}" for p in data['decomposition']
        ),
        f"resolution: {_resolution_display(data['betti'])}",
    ]
    lines.extend(_table_lines(data['table']))
    lines.append(f"verdict: {verdict['labels'][0]}")
    lines.extend(f"  - {label}" for label in verdict['labels'][1:])
    if verdict['sauer_witness'] is not None:
        lines.append(f"  Betti witness p = {verdict['sauer_witness']}"
                     + (' (boundary equality)' if verdict['boundary_equality'] else ''))
    if verdict['diagnostic']:
        lines.append(f"  DISAGREEMENT: {verdict['diagnostic']}")
    failed = [name for name, ok in data['remarks']['clauses'].items() if not ok]
    lines.append('structural clauses: ' + ('all hold' if not failed else 'failed ' + ', '.join(failed)))
    if data.get('corollary'):
        lines.append(f"degree criterion: {data['corollary']}")
    return '\n'.join(lines) + '\n'


def text_enumeration(rows: List[Dict[str, Any]]) -> str:
    lines = []
    for row in rows:
        mark = 'smoothable' if row['smoothable'] else f"not smoothable (t={row['witness']}, p={row['sauer_witness']})"
        lines.append(f"chi = {_chi(row['character'])}  deg {row['degree']}  {mark}")
    lines.append(f"{len(rows)} characters")
    return '\n'.join(lines) + '\n'


def text_construction(data: Dict[str, Any]) -> str:
    lines = []
    if data.get('character') is not None:
        lines.append(f"chi = {_chi(data['character'])}")
    lines.append(f"resolution: {_resolution_display(data['betti'])}")
    lines.append('matrix:')
    entries = data['matrix']['entries']
    width = max((len(e) for row in entries for e in row), default=1)
    for row in entries:
        lines.append('  [ ' + '  '.join(f'{e:<{width}}' for e in row) + ' ]')
    lines.append('generators:')
    lines.extend(f"  D{i + 1} = {g}" for i, g in enumerate(data['generators']))
    lines.append(f"syzygy identity: {'holds' if data['syzygy_identity'] else 'FAILS'}")
    probe = data['probe']
    mode = 'deterministic' if probe['deterministic'] else f"{probe['points_checked']} random points"
    lines.append(f"rank probe ({mode}): rank {probe['expected_rank']} off (1:0:0), "
                 f"{probe['rank_at_support']} at (1:0:0)")
    return '\n'.join(lines) + '\n'


def text_resolution(data: Dict[str, Any]) -> str:
    lines = ['I = (' + ', '.join(data['generators']) + ')']
    lines.append(f"resolution: {_resolution_display(data['betti'])}")
    lines.extend(_table_lines(data['table']))
    if data.get('character') is not None:
        lines.append(f"chi = {_chi(data['character'])}")
    return '\n'.join(lines) + '\n'


def text_selftest(data: Dict[str, Any]) -> str:
    lines = [f"selftest s <= {data['s_max']}, deg <= {data['d_max']} over {data['field']}: "
             f"{data['characters']} characters"]
    for check in data['checks']:
        status = 'ok' if not check['failed'] else f"FAILED {check['failed']}"
        lines.append(f"  {check['name']:<28} {check['checked']:>7}  {status}")
        if check['counterexample'] is not None:
            lines.append(f"    counterexample: {check['counterexample']}")
    lines.append('PASS' if data['passed'] else 'FAIL')
    return '\n'.join(lines) + '\n'


TEXT_RENDERERS = {
    'analysis': text_analysis,
    'construction': text_construction,
    'resolution': text_resolution,
    'selftest': text_selftest,
}

TSV_COLUMNS = {
    'enumeration': ['character', 's', 'degree', 'connected', 'sauer', 'smoothable',
                    'witness', 'sauer_witness', 'a', 'b'],
    'analysis': ['character', 's', 'degree', 'connected', 'smoothable', 'witness',
                 'sauer_witness', 'a', 'b', 'H'],
    'construction': ['character', 'a', 'b', 'generators', 'syzygy_identity'],
    'resolution': ['generators', 'a', 'b', 'H', 'character'],
    'selftest': ['name', 'checked', 'failed', 'counterexample'],
}


def _tsv_rows(kind: str, data: Any) -> List[Dict[str, Any]]:
    """Flatten one report (or a list of them) into table rows."""
    items = data if isinstance(data, list) else [data]
    if kind == 'enumeration':
        return items
    if kind == 'selftest':
        return [check for item in items for check in item['checks']]
    rows = []
    for item in items:
        row = {
            'character': item.get('character'),
            'a': item['betti']['a'],
            'b': item['betti']['b'],
        }
        if kind == 'analysis':
            row.update({
                's': item['s'], 'degree': item['degree'],
                'connected': item['connected'],
                'smoothable': item['verdict']['smoothable'],
                'witness': item['verdict']['witness'],
                'sauer_witness': item['verdict']['sauer_witness'],
                'H': item['table']['H'],
            })
        elif kind == 'construction':
            row.update({'generators': item['generators'], 'syzygy_identity': item['syzygy_identity']})
        elif kind == 'resolution':
            row.update({'generators': item['generators'], 'H': item['table']['H']})
        rows.append(row)
    return rows


def render(data: Any, output_format: str, kind: str) -> str:
    """
    Render a report.

    Args:
        data: Serialized report, or a list of them in batch mode
        output_format: json, tsv or text
        kind: analysis, enumeration, construction, resolution or selftest
    """
    if output_format == OutputFormats.JSON:
        return render_json(data)
    if output_format == OutputFormats.TSV:
        return render_tsv(_tsv_rows(kind, data), TSV_COLUMNS[kind])
    if kind == 'enumeration':
        return text_enumeration(data)
    renderer = TEXT_RENDERERS[kind]
    if isinstance(data, list):
        return '\n'.join(renderer(item) for item in data)
    return renderer(data)
