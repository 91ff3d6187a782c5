"""Instance and result file formats.

Instance file::

    # comments allowed
    5
    0 1
    0 2
    ...

Result file: ``key=value`` metadata lines, then an ``[arcs]`` section of
``tail head label`` lines and a ``[sums]`` section of ``vertex sum`` lines.
A JSON rendering with the same content is also accepted.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import Graph
    from .pipeline import Construction
    from .verify import VerificationReport


class FormatError(ValueError):
    pass


@dataclass
class ResultData:
    arcs: list[tuple[int, int, int]]
    vertex_sums: dict[int, int]
    antimagic: bool
    metadata: dict[str, str] = field(default_factory=dict)


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_instance(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty instance file")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise FormatError(f"malformed instance line: {exc}") from None
    return n, edges


def format_instance(g: Graph) -> str:
    lines = [str(g.vertex_count)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def result_from_construction(c: Construction, report: VerificationReport) -> ResultData:
    meta = {
        "d": str(c.d),
        "q": str(c.q),
        "k": str(c.k),
        "x0": str(c.x0.x0) if c.x0 else "none",
        "seed": str(c.seed),
        "m": str(c.labeling.m),
    }
    for comp, spec in zip(c.components, c.specs):
        meta[f"gap_spec.{comp.index}"] = spec.describe()
    return ResultData(
        arcs=c.arcs(),
        vertex_sums=dict(sorted(report.sums.items())),
        antimagic=report.antimagic_ok,
        metadata=meta,
    )


def format_result(r: ResultData) -> str:
    lines = ["# antimagic orientation result"]
    lines += [f"{key}={value}" for key, value in r.metadata.items()]
    lines.append(f"antimagic={'true' if r.antimagic else 'false'}")
    lines.append("[arcs]")
    lines += [f"{t} {h} {lab}" for t, h, lab in r.arcs]
    lines.append("[sums]")
    lines += [f"{v} {s}" for v, s in r.vertex_sums.items()]
    return "\n".join(lines) + "\n"


def format_result_json(r: ResultData) -> str:
    doc = {
        "metadata": r.metadata,
        "antimagic": r.antimagic,
        "arcs": [{"from": t, "to": h, "label": lab} for t, h, lab in r.arcs],
        "vertex_sums": {str(v): s for v, s in r.vertex_sums.items()},
    }
    return json.dumps(doc, indent=1) + "\n"


def format_dot(r: ResultData) -> str:
    lines = ["digraph antimagic {"]
    for v, s in r.vertex_sums.items():
        lines.append(f'  {v} [label="{v}\\n{s}", sum={s}];')
    for t, h, lab in r.arcs:
        lines.append(f'  {t} -> {h} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_result_json(text: str) -> ResultData:
    try:
        doc = json.loads(text)
        arcs = [(int(a["from"]), int(a["to"]), int(a["label"])) for a in doc["arcs"]]
        sums = {int(v): int(s) for v, s in doc.get("vertex_sums", {}).items()}
        meta = {str(k): str(v) for k, v in doc.get("metadata", {}).items()}
        return ResultData(arcs, sums, bool(doc.get("antimagic", False)), meta)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed JSON result: {exc}") from None


def parse_result(text: str) -> ResultData:
    if text.lstrip().startswith("{"):
        return _parse_result_json(text)
    meta: dict[str, str] = {}
    arcs: list[tuple[int, int, int]] = []
    sums: dict[int, int] = {}
    section = None
    for line in _data_lines(text):
        if line in ("[arcs]", "[sums]"):
            section = line
            continue
        try:
            if section is None:
                key, _, value = line.partition("=")
                if not _:
                    raise ValueError(f"expected key=value, got {line!r}")
                meta[key.strip()] = value.strip()
            elif section == "[arcs]":
                t, h, lab = line.split()
                arcs.append((int(t), int(h), int(lab)))
            else:
                v, s = line.split()
                sums[int(v)] = int(s)
        except ValueError as exc:
            raise FormatError(f"malformed result line {line!r}: {exc}") from None
    if section is None:
        raise FormatError("result file has no [arcs] section")
    antimagic = meta.pop("antimagic", "false") == "true"
    return ResultData(arcs, sums, antimagic, meta)


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
