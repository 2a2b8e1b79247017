# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains functions for reading and writing 3-graphs in the `.h3` text format.

The first non-comment line is `n <N>`. Every following non-comment line is `e <u> <v> <w>` with
0-based vertices `u < v < w`. Lines starting with `#` are comments and blank lines are ignored.
"""

from typing import List, Optional

import pathlib

import hg_graph

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def parse_h3(text: str) -> hg_graph.ThreeGraph:
    """
    Parse a 3-graph.

    Parameters
    ----------
    text : str
        The contents of an `.h3` file.

    Returns
    -------
    hg_graph.ThreeGraph
        The graph.

    Raises
    ------
    ValueError
        If a line is malformed, the header is missing or repeated, or the edges are invalid.
    """
    n: Optional[int] = None
    edges = []

    for (number, line) in enumerate(text.splitlines(), start=1):
        stripped = line.strip()

        if not stripped or stripped.startswith("#"):
            continue

        tokens = stripped.split()

        if tokens[0] == "n" and len(tokens) == 2:
            if n is not None:
                raise ValueError(f"Line {number}: the vertex count is given twice.")

            n = int(tokens[1], base=10)
        elif tokens[0] == "e" and len(tokens) == 4:
            if n is None:
                raise ValueError(f"Line {number}: an edge comes before the vertex count.")

            (u, v, w) = (int(token, base=10) for token in tokens[1:])

            if not u < v < w:
                raise ValueError(f"Line {number}: the vertices of '{stripped}' are not increasing.")

            edges.append((u, v, w))
        else:
            raise ValueError(f"Line {number}: cannot parse '{stripped}'.")

    if n is None:
        raise ValueError("The vertex count line 'n <N>' is missing.")

    return hg_graph.new_graph(n=n, edges=edges)

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def format_h3(graph: hg_graph.ThreeGraph, comments: Optional[List[str]] = None) -> str:
    """
    Format a 3-graph canonically: comments, then the header, then the edges in lexicographic order,
    each line ending in a newline.

    Parameters
    ----------
    graph : hg_graph.ThreeGraph
        The graph.
    comments : optional list of str, default=None
        Comment lines to write first, without the leading `#`.

    Returns
    -------
    str
        The `.h3` text.
    """
    lines = [f"# {comment}" for comment in (comments or [])]
    lines.append(f"n {graph.n}")
    lines.extend(f"e {u} {v} {w}" for (u, v, w) in graph.edge_list)

    return "\n".join(lines) + "\n"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def read_h3(path: str) -> hg_graph.ThreeGraph:
    return parse_h3(text=pathlib.Path(path).read_text(encoding="utf-8"))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def write_h3(graph: hg_graph.ThreeGraph, path: str, comments: Optional[List[str]] = None):
    pathlib.Path(path).write_text(format_h3(graph=graph, comments=comments), encoding="utf-8")
