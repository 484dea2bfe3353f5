"""Plain-text serializations shared by the CLI and the tests."""
from __future__ import annotations

from typing import Iterable

from .errors import MalformedInput
from .forest_complex import Complex, label_str, parse_edge_label
from .shelling import ShellingOrder


def format_facet_list(c: Complex) -> list[str]:
    return sorted(c.format_face(f) for f in c.facets)


def format_order(c: Complex, s: ShellingOrder, header: Iterable[str] = ()) -> list[str]:
    lines = [f"# {h}" for h in header]
    for f, r in zip(s.facets, s.restrictions):
        lines.append(f"{c.format_face(f)} | {c.format_face(r)}".strip())
    lines.append("\t".join(["types"] + [str(t) for t in s.types]))
    return lines


def parse_label(tok: str):
    return parse_edge_label(tok) if ">" in tok else tok


def parse_order(text: str) -> tuple[list[frozenset], dict[str, str]]:
    """Facets in order plus "# key value" header entries."""
    facets, header = [], {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 1)
            if parts:
                header[parts[0]] = parts[1] if len(parts) > 1 else ""
            continue
        if line.startswith("types"):
            continue
        left = line.split("|", 1)[0]
        try:
            facets.append(frozenset(parse_label(t) for t in left.split()))
        except ValueError as exc:
            raise MalformedInput("bad-order-line", line) from exc
    return facets, header


def format_vector(v: Iterable[int]) -> str:
    return " ".join(str(x) for x in v)


def format_triangle(tri: dict[tuple[int, int], int]) -> list[str]:
    return ["i\tj\tvalue"] + [f"{i}\t{j}\t{v}" for (i, j), v in sorted(tri.items())]


def format_betti(b: dict[int, int], p: int) -> list[str]:
    return ["dim\trank\tp"] + [f"{k}\t{v}\t{p}" for k, v in sorted(b.items())]


def format_labels(face: Iterable) -> str:
    return " ".join(label_str(x) for x in face)
