"""JSON documents for complexes: parsing with positions, deterministic emit.

A document is one JSON object.  Simplicial form:

    {"format_version": 1, "kind": "simplicial", "dim": 2,
     "facets": [["a", "b", "c"], ["a", "b", "d"]]}

Glued form replaces the facet rows by a copy count plus gluing records and
carries a derived vertex-class table for human readers:

    {"format_version": 1, "kind": "pseudo", "dim": 1, "facet_count": 2,
     "gluings": [{"a": 0, "ridge_a": [0], "b": 1, "ridge_b": [0],
                  "mapping": [0]}, ...],
     "vertex_classes": [[[0, 0], [1, 0]], ...]}

`kind` and `format_version` may be omitted; the gluings block decides the
kind.  Labels are strings externally and dense integers internally; the
label table is kept as a sidecar next to the parsed complex.  All-numeric
label sets sort numerically, so the canonical emit (labels "0", "1", ...)
round-trips to the identical complex.  Unknown keys are ignored, which lets
annotated documents (projection tables and the like) feed back into parse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .complexes import AbstractComplex, Complex, Gluing, PseudoComplex, classes_of
from .errors import BadGluing, DegenerateFacet, MixedDimension, ParseError
from .unfoldings import Component, UnfoldingResult

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ParsedDocument:
    """A parsed complex plus the label sidecar the document carried."""

    complex: Complex
    kind: str
    vertex_labels: tuple[str, ...] | None = None  # simplicial: index = vertex id
    copy_labels: tuple[tuple[str, ...], ...] | None = None  # pseudo: per copy


def parse(text: str) -> Complex:
    return parse_document(text).complex


def parse_document(text: str) -> ParsedDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"format_version {version!r} is not supported")
    kind = doc.get("kind")
    if kind is None:
        kind = "pseudo" if "gluings" in doc else "simplicial"
    if kind == "simplicial":
        return _parse_simplicial(doc)
    if kind == "pseudo":
        return _parse_pseudo(doc)
    raise ParseError(f"kind must be 'simplicial' or 'pseudo', not {kind!r}")


def _label_rows(doc: dict, *, required: bool) -> list[list[str]] | None:
    rows = doc.get("facets")
    if rows is None:
        if required:
            raise ParseError("facets: a non-empty list is required")
        return None
    if not isinstance(rows, list) or not rows:
        raise ParseError("facets: a non-empty list is required")
    out: list[list[str]] = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not row:
            raise ParseError(f"facets[{i}]: each facet is a non-empty list")
        labels: list[str] = []
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                raise ParseError(
                    f"facets[{i}][{j}]: labels must be strings or integers"
                )
            labels.append(str(entry))
        out.append(labels)
    sizes = {len(r) for r in out}
    if len(sizes) != 1:
        raise MixedDimension(f"facet sizes differ: {sorted(sizes)}")
    for i, row in enumerate(out):
        if len(set(row)) != len(row):
            raise DegenerateFacet(f"facets[{i}]: {row} repeats a vertex")
    return out


def _parse_simplicial(doc: dict) -> ParsedDocument:
    rows = _label_rows(doc, required=True)
    assert rows is not None
    labels = sorted({lab for row in rows for lab in row}, key=_label_key)
    index = {lab: i for i, lab in enumerate(labels)}
    K = AbstractComplex.from_facets([[index[lab] for lab in row] for row in rows])
    stated = doc.get("dim")
    if stated is not None and stated != K.dim:
        raise ParseError(f"dim says {stated} but the facets have dimension {K.dim}")
    return ParsedDocument(K, "simplicial", vertex_labels=tuple(labels))


def _label_key(label: str):
    # numeric label sets order numerically so that "10" follows "9"
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)


def _positions(item: dict, key: str, k: int) -> tuple[int, ...]:
    val = item.get(key)
    ok = isinstance(val, list) and all(
        isinstance(v, int) and not isinstance(v, bool) for v in val
    )
    if not ok:
        raise ParseError(f"gluings[{k}].{key}: need a list of integer positions")
    return tuple(val)


def _parse_pseudo(doc: dict) -> ParsedDocument:
    rows = _label_rows(doc, required=False)
    n = doc.get("facet_count", len(rows) if rows is not None else None)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("facet_count: a positive integer (or facet rows) is required")
    dim = doc.get("dim", len(rows[0]) - 1 if rows else None)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise ParseError("dim: a non-negative integer is required")
    raw = doc.get("gluings", [])
    if not isinstance(raw, list):
        raise ParseError("gluings: need a list of gluing records")
    gluings: list[Gluing] = []
    for k, item in enumerate(raw):
        if not isinstance(item, dict):
            raise ParseError(f"gluings[{k}]: each gluing is an object")
        a, b = item.get("a"), item.get("b")
        for side, val in (("a", a), ("b", b)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise ParseError(f"gluings[{k}].{side}: need a facet index")
        g = Gluing(
            a,
            _positions(item, "ridge_a", k),
            b,
            _positions(item, "ridge_b", k),
            _positions(item, "mapping", k),
        )
        gluings.append(g)
    try:
        P = PseudoComplex(dim, n, tuple(gluings))
    except BadGluing as e:
        raise ParseError(f"gluings: {e}") from None
    copy_labels = tuple(tuple(row) for row in rows) if rows is not None else None
    return ParsedDocument(P, "pseudo", copy_labels=copy_labels)


def emit(x: Complex, vertex_labels: Mapping[int, str] | None = None) -> str:
    """Deterministic document for a complex; round-trips through parse."""
    if isinstance(x, AbstractComplex):
        doc = _simplicial_doc(x, vertex_labels)
    else:
        doc = _pseudo_doc(x)
    return json.dumps(doc, indent=1) + "\n"


def _simplicial_doc(K: AbstractComplex, vertex_labels: Mapping[int, str] | None) -> dict:
    def lab(v: int) -> str:
        if vertex_labels is not None and v in vertex_labels:
            return str(vertex_labels[v])
        return str(v)

    return {
        "format_version": FORMAT_VERSION,
        "kind": "simplicial",
        "dim": K.dim,
        "facets": [[lab(v) for v in f] for f in K.facets],
    }


def _pseudo_doc(P: PseudoComplex) -> dict:
    classes = classes_of(P)
    table = [
        [[f, sub[0]] for f, sub in classes.members[cid]]
        for cid in classes.classes_of_card(1)
    ]
    return {
        "format_version": FORMAT_VERSION,
        "kind": "pseudo",
        "dim": P.dim,
        "facet_count": P.facet_count,
        "gluings": [
            {
                "a": g.facet_a,
                "ridge_a": list(g.ridge_a),
                "b": g.facet_b,
                "ridge_b": list(g.ridge_b),
                "mapping": list(g.mapping),
            }
            for g in P.gluings
        ],
        "vertex_classes": table,
    }


def _copy_tags(kind: str, labels) -> list[dict]:
    copies = []
    for tag in labels:
        if kind == "complete":
            copies.append({"facet": tag[0], "coloring": "".join(map(str, tag[1]))})
        else:
            copies.append({"facet": tag[0], "vertex": tag[1]})
    return copies


def emit_unfolding(u: UnfoldingResult) -> str:
    """Unfolding document: the glued total complex plus the projection table."""
    doc = _pseudo_doc(u.total)
    doc["unfolding"] = {
        "mode": u.kind,
        "projection": list(u.projection),
        "copies": _copy_tags(u.kind, u.labels),
    }
    if u.component_partition is not None:
        doc["unfolding"]["components"] = [list(c) for c in u.component_partition]
    return json.dumps(doc, indent=1) + "\n"


def emit_component(comp: Component, kind: str) -> str:
    """Document for one unfolding component, projection table included."""
    doc = _pseudo_doc(comp.complex)
    doc["unfolding"] = {
        "mode": kind,
        "projection": list(comp.projection),
        "copies": _copy_tags(kind, comp.labels),
        "source_copies": list(comp.member_copies),
    }
    return json.dumps(doc, indent=1) + "\n"
