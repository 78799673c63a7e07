"""
Input parsing and artifact emission for the command line.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
import typer

from ratcalc.rational import RatLike, to_rat
from series.genfun import GenFun


class InputError(ValueError):
    """Malformed command-line input; the message carries line and column for JSON."""


def read_payload(source: str) -> Any:
    """'-' reads standard input, text starting with '{' or '[' is inline JSON, anything else is a path."""
    if source == '-':
        text = sys.stdin.read()
        origin = '<stdin>'
    elif source.lstrip()[:1] in ('{', '['):
        text = source
        origin = '<inline>'
    else:
        path = Path(source)
        if not path.is_file():
            raise InputError(f"input file not found: {source}")
        text = path.read_text()
        origin = str(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{origin}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def parse_genfun(payload: Any) -> GenFun:
    if not isinstance(payload, dict) or 'den_exp' not in payload or 'numer' not in payload:
        raise InputError('expected a series object {"den_exp": n, "numer": ["p/q", ...]}')
    try:
        return GenFun.from_dict(payload)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad series object: {exc}") from exc


def parse_sequence(payload: Any) -> List:
    if not isinstance(payload, dict) or not isinstance(payload.get('h'), list):
        raise InputError('expected a sequence object {"h": ["p/q", ...]}')
    try:
        return [to_rat(v) for v in payload['h']]
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad sequence entry: {exc}") from exc


def decimal_str(value: RatLike) -> str:
    """Display-only approximation."""
    return f"{float(to_rat(value)):.10g}"


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + '\n'


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator='\n')


def emit(
    fmt: str,
    output: Optional[Path],
    payload: Dict,
    frame: Optional[pd.DataFrame] = None,
    text: Optional[str] = None,
) -> None:
    """Write the artifact in the requested format to the output path or standard output."""
    if fmt == 'csv':
        if frame is None:
            raise InputError("this command has no CSV form; use --format json or text")
        body = to_csv(frame)
    elif fmt == 'text':
        body = (text if text is not None else to_json(payload)).rstrip('\n') + '\n'
    else:
        body = to_json(payload)
    if output is not None:
        output.write_text(body)
    else:
        typer.echo(body, nl=False)
