#!/usr/bin/env python3
"""Regenerate census7.txt: every connected graph on at most 7 vertices,
taken from the Read--Wilson atlas as shipped with networkx.

Line format: n m u1 v1 u2 v2 ...
"""
import networkx as nx

graphs = []
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0 or not nx.is_connected(g):
        continue
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    graphs.append((n, edges))

graphs.sort(key=lambda t: (t[0], len(t[1]), t[1]))

with open("census7.txt", "w") as out:
    out.write("# connected graphs on <= 7 vertices (Read-Wilson atlas)\n")
    out.write("# line format: n m u1 v1 u2 v2 ...\n")
    for n, edges in graphs:
        flat = " ".join(f"{u} {v}" for u, v in edges)
        line = f"{n} {len(edges)}"
        if flat:
            line += " " + flat
        out.write(line + "\n")

print(f"{len(graphs)} connected graphs written")
