#!/usr/bin/env python3
"""Generate exhaustive graph6 corpora of small graphs (one per isomorphism class).

Graphs on n+1 vertices are produced by attaching a new vertex to every subset of
an (n)-vertex representative; duplicates are removed with nauty certificates.

    tools/make_corpus.py --max-n 8 --connected > connected_n1-8.g6
    tools/make_corpus.py --max-n 7 > all_n1-7.g6
"""
import argparse
import sys

import networkx as nx
import pynauty


def certificate(g: nx.Graph) -> bytes:
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def extend(graphs):
    seen = {}
    for g in graphs:
        n = g.number_of_nodes()
        for mask in range(1 << n):
            h = g.copy()
            h.add_node(n)
            h.add_edges_from((n, v) for v in range(n) if mask >> v & 1)
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = h
    return list(seen.values())


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, required=True)
    ap.add_argument("--connected", action="store_true")
    args = ap.parse_args()
    level = [nx.empty_graph(1)]
    for n in range(1, args.max_n + 1):
        if n > 1:
            level = extend(level)
        keep = [g for g in level if not args.connected or nx.is_connected(g)]
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in keep)
        sys.stdout.write("".join(line + "\n" for line in lines))
        print(f"n={n}: {len(keep)} graphs", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
