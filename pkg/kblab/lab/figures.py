"""
Graph Figures

Renders a graph to PNG with matplotlib, using a networkx layout. A vertex set
(a biclique, an uncontained P3, a removed vertex) can be highlighted in bold.
"""

from pathlib import Path
from typing import Dict, Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from kblab.core.formats import to_networkx  # noqa: E402
from kblab.core.graph import Graph, VertexSet  # noqa: E402


def layout(g: Graph) -> Dict[int, tuple]:
    """Deterministic positions: circular for cycles and small graphs, seeded spring otherwise."""
    nxg = to_networkx(g)
    if g.n <= 3 or all(g.degree(v) == 2 for v in range(g.n)):
        return nx.circular_layout(nxg)
    return nx.spring_layout(nxg, seed=0)


def draw_graph(
    g: Graph,
    output_path: Union[str, Path],
    highlight: Optional[VertexSet] = None,
    title: Optional[str] = None,
    labels: Optional[Dict[int, str]] = None,
) -> Path:
    """
    Draw g to a PNG file.

    Args:
        g: Graph to draw
        output_path: Where to save the figure
        highlight: Vertex set drawn bold, with the edges inside it
        title: Figure title
        labels: Optional vertex -> label text (defaults to the vertex index)

    Returns:
        Path of the written figure
    """
    highlight = highlight or 0
    nxg = to_networkx(g)
    pos = layout(g)

    bold_nodes = [v for v in range(g.n) if highlight >> v & 1]
    plain_nodes = [v for v in range(g.n) if not highlight >> v & 1]
    bold_edges = [(u, v) for u, v in g.edges() if highlight >> u & 1 and highlight >> v & 1]
    plain_edges = [e for e in g.edges() if e not in bold_edges]

    fig, ax = plt.subplots(figsize=(6, 6))
    nx.draw_networkx_edges(nxg, pos, edgelist=plain_edges, ax=ax, width=1.0, edge_color="gray")
    nx.draw_networkx_edges(nxg, pos, edgelist=bold_edges, ax=ax, width=3.5, edge_color="black")
    nx.draw_networkx_nodes(nxg, pos, nodelist=plain_nodes, ax=ax, node_color="white",
                           edgecolors="black", node_size=500)
    nx.draw_networkx_nodes(nxg, pos, nodelist=bold_nodes, ax=ax, node_color="#FFD54F",
                           edgecolors="black", linewidths=2.5, node_size=600)
    nx.draw_networkx_labels(nxg, pos, labels=labels or {v: str(v) for v in range(g.n)}, ax=ax, font_size=11)

    if title:
        ax.set_title(title, fontsize=14, fontweight="bold")
    ax.set_axis_off()

    output = Path(output_path)
    output.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(output, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return output
