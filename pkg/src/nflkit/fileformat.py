"""Reading and writing function-set documents.

A document is a JSON object with explicit sizes, never inferred ones
(inferring the codomain from observed values would silently change
histograms):

    {
      "domain_size": 2,
      "codomain_size": 2,
      "functions": [[0, 1], [1, 0]],
      "neighborhood": [[0, 1]],
      "metric": [1.0]
    }

functions lists value arrays, one per function, duplicates rejected.
neighborhood (optional) is an undirected edge list on domain indices.
metric (optional) gives the strictly-upper-triangular distances between
value indices in row-major order: (0,1), (0,2), ..., (1,2), ...

Parse failures raise ParseError naming the offending line or field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import FiniteFunction, FunctionSet, SpaceSignature
from .landscape import Neighborhood, ValueMetric

_ALLOWED_FIELDS = {"domain_size", "codomain_size", "functions", "neighborhood", "metric"}


class ParseError(ValueError):
    """A document failed to parse; the message names the line or field."""


@dataclass(frozen=True)
class FunctionSetDocument:
    """Parsed document: canonical set, file-order listing, optional extras."""

    functions: FunctionSet
    listed: tuple[FiniteFunction, ...]
    neighborhood: Neighborhood | None
    metric: ValueMetric | None

    @property
    def signature(self) -> SpaceSignature:
        return self.functions.signature


def parse_document(text: str) -> FunctionSetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level: expected an object")
    for key in data:
        if key not in _ALLOWED_FIELDS:
            raise ParseError(f"{key}: unknown field")

    domain_size = _positive_int_field(data, "domain_size")
    codomain_size = _positive_int_field(data, "codomain_size")
    sig = SpaceSignature(domain_size, codomain_size)

    if "functions" not in data:
        raise ParseError("functions: missing required field")
    raw = data["functions"]
    if not isinstance(raw, list):
        raise ParseError("functions: expected a list of value arrays")
    listed: list[FiniteFunction] = []
    seen: dict[tuple[int, ...], int] = {}
    for idx, arr in enumerate(raw):
        loc = f"functions[{idx}]"
        if not isinstance(arr, list):
            raise ParseError(f"{loc}: expected a list of value indices")
        if len(arr) != domain_size:
            raise ParseError(f"{loc}: expected {domain_size} values, got {len(arr)}")
        values = []
        for k, v in enumerate(arr):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"{loc}[{k}]: expected an integer")
            if not 0 <= v < codomain_size:
                raise ParseError(
                    f"{loc}[{k}]: value {v} out of range 0..{codomain_size - 1}"
                )
            values.append(v)
        key = tuple(values)
        if key in seen:
            raise ParseError(f"{loc}: duplicate of functions[{seen[key]}]")
        seen[key] = idx
        listed.append(FiniteFunction(sig, key))

    neighborhood = None
    if "neighborhood" in data:
        neighborhood = _parse_neighborhood(data["neighborhood"], domain_size)
    metric = None
    if "metric" in data:
        metric = _parse_metric(data["metric"], codomain_size)

    return FunctionSetDocument(
        functions=FunctionSet.from_iterable(sig, listed),
        listed=tuple(listed),
        neighborhood=neighborhood,
        metric=metric,
    )


def load_document(path: str | Path) -> FunctionSetDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def render_document(
    functions: FunctionSet,
    *,
    neighborhood: Neighborhood | None = None,
    metric: ValueMetric | None = None,
) -> str:
    """Document text for a set (canonical order); round-trips through parse.

    One value array per line keeps the output human-editable.
    """
    sig = functions.signature
    sections = [
        f'"domain_size": {sig.domain_size}',
        f'"codomain_size": {sig.codomain_size}',
        _list_block("functions", [json.dumps(list(f.values)) for f in functions]),
    ]
    if neighborhood is not None:
        sections.append(
            _list_block(
                "neighborhood",
                [json.dumps(list(edge)) for edge in neighborhood.edge_list()],
            )
        )
    if metric is not None:
        n = metric.codomain_size
        entries = [metric.distance(i, j) for i in range(n) for j in range(i + 1, n)]
        sections.append(f'"metric": {json.dumps(entries)}')
    body = ",\n".join(f"  {s}" for s in sections)
    return "{\n" + body + "\n}\n"


def _list_block(key: str, rows: list[str]) -> str:
    if not rows:
        return f'"{key}": []'
    inner = ",\n".join(f"    {r}" for r in rows)
    return f'"{key}": [\n{inner}\n  ]'


def write_document(
    path: str | Path,
    functions: FunctionSet,
    *,
    neighborhood: Neighborhood | None = None,
    metric: ValueMetric | None = None,
) -> None:
    text = render_document(functions, neighborhood=neighborhood, metric=metric)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _positive_int_field(data: dict, name: str) -> int:
    if name not in data:
        raise ParseError(f"{name}: missing required field")
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{name}: expected an integer")
    if value < 1:
        raise ParseError(f"{name}: must be positive, got {value}")
    return value


def _parse_neighborhood(raw: object, domain_size: int) -> Neighborhood:
    if not isinstance(raw, list):
        raise ParseError("neighborhood: expected a list of edges")
    edges = []
    for idx, edge in enumerate(raw):
        loc = f"neighborhood[{idx}]"
        if not isinstance(edge, list) or len(edge) != 2:
            raise ParseError(f"{loc}: expected a pair of domain indices")
        i, j = edge
        for v in (i, j):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"{loc}: expected integer indices")
            if not 0 <= v < domain_size:
                raise ParseError(
                    f"{loc}: index {v} out of range 0..{domain_size - 1}"
                )
        if i == j:
            raise ParseError(f"{loc}: self-loop ({i},{j}) is not allowed")
        edges.append((i, j))
    return Neighborhood.from_edges(domain_size, edges)


def _parse_metric(raw: object, codomain_size: int) -> ValueMetric:
    if not isinstance(raw, list):
        raise ParseError("metric: expected a list of distances")
    expected = codomain_size * (codomain_size - 1) // 2
    if len(raw) != expected:
        raise ParseError(
            f"metric: expected {expected} upper-triangular entries for "
            f"codomain size {codomain_size}, got {len(raw)}"
        )
    entries = []
    for idx, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(f"metric[{idx}]: expected a number")
        if v <= 0:
            raise ParseError(f"metric[{idx}]: distance must be positive, got {v}")
        entries.append(float(v))
    rows = [[0.0] * codomain_size for _ in range(codomain_size)]
    pos = 0
    for i in range(codomain_size):
        for j in range(i + 1, codomain_size):
            rows[i][j] = rows[j][i] = entries[pos]
            pos += 1
    return ValueMetric(rows)
