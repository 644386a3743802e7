"""Decremental connectivity structures and cut witnesses."""

from ._core import (
    DeletedVertexError,
    EdgeDecremental,
    Graph,
    Label,
    LayoutDecremental,
    LinearLayout,
    ParseError,
    SetLabel,
    TreeDecremental,
    TreeIndex,
    bfs_spanning_tree,
    decode,
    decode_pair,
    exhaustive_layout,
    greedy_layout,
    greedy_path_cover,
    is_connected,
    k_edge_witness,
    labels_from_bytes,
    labels_to_bytes,
    mark,
    mark_with_sets,
    min_degree_spanning_tree,
    oracle_connected,
    parse_edge_list,
    sparse_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
