import json

import pytest

from deckrecon import canonical_form, cycle_graph, inflate, make_deck, save_deck
from deckrecon.cli import main
from deckrecon.graphs import complete_graph, empty_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", canonical_form(cycle_graph(5)))
    assert code == 0
    assert out.strip() == "kind: indecomposable"


def test_decompose_json_prime(capsys, c5):
    g = inflate(c5, [complete_graph(2)] + [empty_graph(1)] * 4)
    code, out, _ = run(capsys, "decompose", g.to_graph6(), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "prime"
    assert payload["skeleton"] == canonical_form(c5)
    assert len(payload["intervals"]) == 5


def test_decompose_degenerate_json(capsys):
    code, out, _ = run(capsys, "decompose", empty_graph(3).to_graph6(), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "degenerate-parallel"
    assert payload["parts"] == ["@", "@", "@"]


def test_deck_output(capsys, c5):
    code, out, _ = run(capsys, "deck", canonical_form(c5))
    assert code == 0
    assert out.split() == list(make_deck(c5).cards)


def test_graph_from_file(capsys, tmp_path, c5):
    path = tmp_path / "graph.g6"
    path.write_text("# comment\n" + canonical_form(c5) + "\n")
    code, out, _ = run(capsys, "deck", f"@{path}")
    assert code == 0
    assert out.split() == list(make_deck(c5).cards)


def test_reconstruct_roundtrip(capsys, tmp_path, c5):
    g = inflate(c5, [complete_graph(2)] + [empty_graph(1)] * 4)
    path = tmp_path / "deck.g6"
    save_deck(make_deck(g), path)
    code, out, _ = run(capsys, "reconstruct", str(path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "reconstructed"
    assert payload["graph6"] == canonical_form(g)
    assert payload["provenance"] == "size-two interval, orbit identified"


def test_reconstruct_unsupported_exit_code(capsys, tmp_path, c5):
    path = tmp_path / "deck.g6"
    save_deck(make_deck(c5), path)
    code, out, _ = run(capsys, "reconstruct", str(path))
    assert code == 1
    assert out.startswith("unsupported:")


def test_reconstruct_oracle_fallback(capsys, tmp_path, c5):
    path = tmp_path / "deck.g6"
    save_deck(make_deck(c5), path)
    code, out, _ = run(capsys, "reconstruct", str(path), "--oracle-fallback", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["provenance"] == "oracle"
    assert payload["graph6"] == canonical_form(c5)


def test_verify_claim(capsys):
    code, out, _ = run(capsys, "verify", "fig1-counts", "--max-n", "5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0 and payload["tested"] == 3


def test_bad_graph6_exits_2(capsys):
    code, _, err = run(capsys, "decompose", "not-a-graph~~~")
    assert code == 2
    assert "error:" in err


def test_missing_deck_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "reconstruct", str(tmp_path / "absent.g6"))
    assert code == 2


def test_unknown_claim_exits_2(capsys):
    code, _, err = run(capsys, "verify", "no-such-claim")
    assert code == 2
    assert "unknown claim" in err


def test_oversized_graph_exits_2(capsys):
    code, _, err = run(capsys, "decompose", empty_graph(21).to_graph6())
    assert code == 2
