"""Regenerate data/graphs_upto7.g6: every graph on 0..7 vertices up to isomorphism."""

from __future__ import annotations

import argparse
from pathlib import Path

import networkx as nx


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parents[1] / "src/edgeideal/data/graphs_upto7.g6")
    args = ap.parse_args()
    lines = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == 0:
            continue
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    args.out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {args.out}")


if __name__ == "__main__":
    main()
