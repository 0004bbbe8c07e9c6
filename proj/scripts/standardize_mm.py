#!/usr/bin/env python3
"""Standardizes a downloaded graph file into a plain undirected edge list.

Directions and weights are dropped, self-loops removed, parallel edges
merged. When the full graph does not match the expected node/edge counts but
its largest connected component does (the convention behind several of the
published per-graph numbers), the component is written instead.

Usage: standardize_mm.py [--edge-list] input output expected_n expected_m
"""

import sys


def read_matrix_market(path):
    edges = set()
    n = None
    with open(path) as f:
        header = f.readline()
        if not header.lower().startswith("%%matrixmarket"):
            raise SystemExit(f"{path}: not a matrix-market file")
        for line in f:
            line = line.strip()
            if not line or line.startswith("%"):
                continue
            parts = line.split()
            if n is None:
                n = int(parts[0])
                continue
            u, v = int(parts[0]), int(parts[1])
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return n, edges


def read_edge_list(path):
    edges = set()
    nodes = set()
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = map(int, line.split()[:2])
            nodes.add(u)
            nodes.add(v)
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return len(nodes), edges


def largest_component(edges):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        pu, pv = find(u), find(v)
        if pu != pv:
            parent[pu] = pv
    sizes = {}
    for node in parent:
        sizes.setdefault(find(node), set()).add(node)
    if not sizes:
        return set(), set()
    best = max(sizes.values(), key=len)
    return best, {(u, v) for (u, v) in edges if u in best and v in best}


def main():
    args = sys.argv[1:]
    as_edge_list = args and args[0] == "--edge-list"
    if as_edge_list:
        args = args[1:]
    inp, outp, expected_n, expected_m = args[0], args[1], int(args[2]), int(args[3])

    if as_edge_list:
        n, edges = read_edge_list(inp)
        touched = {x for e in edges for x in e}
        n = max(n, len(touched))
    else:
        n, edges = read_matrix_market(inp)

    chosen_edges = edges
    touched = {x for e in edges for x in e}
    full_n = n if not as_edge_list else len(touched)
    if (full_n, len(edges)) != (expected_n, expected_m):
        comp_nodes, comp_edges = largest_component(edges)
        if (len(comp_nodes), len(comp_edges)) == (expected_n, expected_m):
            chosen_edges = comp_edges
        else:
            print(
                f"WARNING: {inp}: full graph is {full_n}/{len(edges)}, largest "
                f"component {len(comp_nodes)}/{len(comp_edges)}, expected "
                f"{expected_n}/{expected_m}; writing the closer variant",
                file=sys.stderr,
            )
            full_dist = abs(full_n - expected_n) + abs(len(edges) - expected_m)
            comp_dist = abs(len(comp_nodes) - expected_n) + abs(len(comp_edges) - expected_m)
            chosen_edges = comp_edges if comp_dist < full_dist else edges

    with open(outp, "w") as f:
        for u, v in sorted(chosen_edges):
            f.write(f"{u} {v}\n")
    touched = {x for e in chosen_edges for x in e}
    print(f"{outp}: n={len(touched)} m={len(chosen_edges)}")


if __name__ == "__main__":
    main()
