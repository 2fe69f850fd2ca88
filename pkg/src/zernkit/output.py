"""Deterministic CSV/JSON output and run manifests."""

import csv
from dataclasses import asdict, dataclass, field
import datetime
import io
import json
import math
import os
from typing import Dict, List

from . import __version__


def format_value(v):
    """Shortest round-trip decimal for floats; integers and text unchanged."""
    if isinstance(v, bool) or v is None:
        return "" if v is None else str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float) or hasattr(v, "dtype"):
        x = float(v)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    return str(v)


def rows_to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _clean(v):
    if isinstance(v, float) and not math.isfinite(v):
        return format_value(v)
    if hasattr(v, "dtype"):
        return _clean(v.item())
    return v


def rows_to_json(header, rows):
    data = [{h: _clean(v) for h, v in zip(header, row)} for row in rows]
    return json.dumps(data, indent=2) + "\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _timestamp():
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        moment = datetime.datetime.fromtimestamp(int(epoch), tz=datetime.timezone.utc)
    else:
        moment = datetime.datetime.now(tz=datetime.timezone.utc)
    return moment.replace(microsecond=0).isoformat()


@dataclass
class RunManifest:
    command: str
    parameters: Dict[str, object]
    outputs: List[str] = field(default_factory=list)
    version: str = __version__
    timestamp: str = field(default_factory=_timestamp)

    def to_json(self):
        params = {k: _clean(v) for k, v in sorted(self.parameters.items())}
        data = asdict(self)
        data["parameters"] = params
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def write(self, path):
        write_text(path, self.to_json())
