"""Tests for checkpoint files."""

import pytest

from rainbowsat.exceptions import ParseError
from rainbowsat.models.coloring import EdgeColoring
from rainbowsat.models.graph import SimpleGraph
from rainbowsat.search import Certificate, SearchCheckpoint, read_checkpoint, write_checkpoint


def test_write_then_read(tmp_path):
    """Test a checkpoint survives a write and read with its certificates."""
    g = SimpleGraph.cycle(5)
    checkpoint = SearchCheckpoint(
        n=5,
        r=4,
        mode="all_colorings",
        m=6,
        done=2,
        last_graph6="Dhc",
        certificates=[Certificate(graph6="Dhc", coloring=EdgeColoring.monochromatic(g))],
        graphs_examined=7,
    )
    path = tmp_path / "search.json"
    write_checkpoint(path, checkpoint)
    assert read_checkpoint(path) == checkpoint
    assert not (tmp_path / "search.json.tmp").exists()
    assert checkpoint.certificates[0].edge_count == 5


def test_matches():
    """Test a checkpoint only matches its own task."""
    checkpoint = SearchCheckpoint(n=6, r=5, mode="rainbow_only", m=7)
    assert checkpoint.matches(6, 5, "rainbow_only")
    assert not checkpoint.matches(6, 5, "all_colorings")
    assert not checkpoint.matches(7, 5, "rainbow_only")


@pytest.mark.parametrize("content", ["not json", '{"n": 5}', '{"n": 5, "r": 4, "mode": "sometimes", "m": 5}'])
def test_invalid_checkpoint(tmp_path, content):
    """Test malformed checkpoint files raise ParseError."""
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(ParseError):
        read_checkpoint(path)
