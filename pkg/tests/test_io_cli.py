"""Document round-trips and the command line front end."""

import json

import pytest

from unfolder.cli import main
from unfolder.complexes import AbstractComplex, PseudoComplex
from unfolder.errors import UnfolderError
from unfolder.gallery import boundary_simplex, doubled_triangle_sphere, starred_triangle
from unfolder.io import emit, emit_unfolding, parse, parse_document
from unfolder.unfoldings import partial_unfolding


def test_simplicial_round_trip_is_byte_stable():
    K = boundary_simplex(3)
    text = emit(K)
    again = parse(text)
    assert isinstance(again, AbstractComplex)
    assert again.facets == K.facets
    assert emit(again) == text


def test_pseudo_round_trip():
    P = doubled_triangle_sphere()
    text = emit(P)
    again = parse(text)
    assert isinstance(again, PseudoComplex)
    assert again.facet_count == P.facet_count
    assert emit(again) == text


def test_vertex_labels_survive():
    K = starred_triangle()
    text = emit(K, vertex_labels={0: "a", 1: "b", 2: "c", 3: "center"})
    doc = parse_document(text)
    assert doc.kind == "simplicial"
    assert doc.vertex_labels is not None
    assert doc.vertex_labels[3] == "center"


def test_unfolding_document_carries_copy_tags():
    u = partial_unfolding(starred_triangle())
    text = emit_unfolding(u)
    doc = parse_document(text)
    assert doc.kind == "pseudo"
    assert doc.complex.facet_count == u.total.facet_count
    raw = json.loads(text)
    assert raw["unfolding"]["mode"] == "partial"
    assert raw["unfolding"]["projection"] == list(u.projection)
    assert len(raw["unfolding"]["copies"]) == u.total.facet_count
    assert [sorted(c) for c in raw["unfolding"]["components"]]


def test_pseudo_label_rows_become_copy_labels():
    text = json.dumps(
        {
            "kind": "pseudo",
            "facets": [["p", "q"], ["p", "q"]],
            "gluings": [
                {"a": 0, "ridge_a": [0], "b": 1, "ridge_b": [0], "mapping": [0]},
                {"a": 0, "ridge_a": [1], "b": 1, "ridge_b": [1], "mapping": [1]},
            ],
        }
    )
    doc = parse_document(text)
    assert doc.kind == "pseudo"
    assert doc.complex.facet_count == 2
    assert doc.copy_labels == (("p", "q"), ("p", "q"))


def test_parse_tolerates_missing_version_and_extra_keys():
    K = parse('{"facets": [[0, 1], [1, 2], [0, 2]], "note": "hello"}')
    assert K.facets == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize(
    "text",
    [
        "not json at all",
        "[1, 2, 3]",
        '{"format_version": 99, "facets": [[0, 1]]}',
        '{"kind": "mystery"}',
        '{"facets": [[0, 1], [0, 1, 2]]}',
        '{"facets": [[0, 0, 1]]}',
        '{"kind": "pseudo", "dim": 1, "copies": 2, "gluings": [{"a": 5, "ridge_a": [0], "b": 1, "ridge_b": [0], "map": [0]}]}',
    ],
)
def test_parse_rejects_malformed_documents(text):
    with pytest.raises(UnfolderError):
        parse(text)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_analyze_reads_stdin(capsys, monkeypatch, tmp_path):
    import io as _io
    import sys

    monkeypatch.setattr(sys, "stdin", _io.StringIO(emit(boundary_simplex(3))))
    code, out, err = _run(capsys, "analyze", "-")
    assert code == 0
    assert "Pi order: 6" in out
    assert "4 6 4" in out


def test_cli_gallery_pipe_via_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = _run(capsys, "gallery", "starred-triangle")
    assert code == 0
    path.write_text(out)
    code, out, _ = _run(capsys, "unfold", "--mode", "partial", str(path))
    assert code == 0
    assert "2 components, sizes 3 and 6" in out


def test_cli_unfold_writes_component_sidecars(capsys, tmp_path):
    src = tmp_path / "t.json"
    src.write_text(emit(starred_triangle()))
    out_path = tmp_path / "unf.json"
    code, out, _ = _run(
        capsys, "unfold", "--mode", "partial", "-o", str(out_path), str(src)
    )
    assert code == 0
    assert out_path.exists()
    sidecars = sorted(p.name for p in tmp_path.glob("unf.component*.json"))
    assert sidecars == ["unf.component0.json", "unf.component1.json"]
    comp = parse_document((tmp_path / "unf.component0.json").read_text())
    assert comp.kind == "pseudo"


def test_cli_unfold_single_component_selection(capsys, tmp_path):
    src = tmp_path / "t.json"
    src.write_text(emit(starred_triangle()))
    code, out, _ = _run(
        capsys, "unfold", "--mode", "partial", "--component", "0", str(src)
    )
    assert code == 0
    doc = parse_document(out)
    assert doc.kind == "pseudo"
    assert doc.complex.facet_count in (3, 6)


def test_cli_subdivide_then_analyze(capsys, tmp_path):
    src = tmp_path / "t.json"
    src.write_text(emit(starred_triangle()))
    code, out, _ = _run(capsys, "subdivide", "--kind", "antiprismatic", str(src))
    assert code == 0
    piped = tmp_path / "sub.json"
    piped.write_text(out)
    code, out, _ = _run(capsys, "analyze", str(piped))
    assert code == 0
    assert "facets: 39" in out


def test_cli_subdivide_stellar_takes_a_facet(capsys, tmp_path):
    src = tmp_path / "t.json"
    src.write_text(emit(boundary_simplex(3)))
    code, out, _ = _run(capsys, "subdivide", "--kind", "stellar:0", "-n", "2", str(src))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["facets"]) == 8  # two moves, each trading one facet for three


def test_cli_gallery_unknown_name(capsys):
    code, _, err = _run(capsys, "gallery", "nope")
    assert code == 2
    assert "error:" in err


def test_cli_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, _, err = _run(capsys, "analyze", str(bad))
    assert code == 2
    assert "error:" in err


def test_cli_verify_paper_suite_is_green(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "paper")
    assert code == 0
    assert "checks passed" in out


def test_cli_verify_rejects_unknown_suite(capsys):
    code, _, err = _run(capsys, "verify", "--suite", "everything")
    assert code == 2
