#!/usr/bin/env python3
"""Regenerates the bundled synthetic MATPOWER fixtures under data/.

Builds a connected, sparse, lightly clustered topology (spanning tree plus
wedge-closing and mid-range chords), assigns generator / load /
interconnection roles, and writes a minimal MATPOWER case. Deterministic for
a fixed seed.
"""

import argparse
import random
from collections import deque


def build_topology(rng, n, m_target, wedge_fraction):
    adj = [set() for _ in range(n)]
    edges = set()

    def add_edge(a, b):
        if a == b or (min(a, b), max(a, b)) in edges:
            return False
        edges.add((min(a, b), max(a, b)))
        adj[a].add(b)
        adj[b].add(a)
        return True

    order = list(range(n))
    rng.shuffle(order)
    # Spanning tree: attach each node to the lowest-degree of a few recent
    # candidates, which yields long gridlike filaments instead of hubs.
    for idx in range(1, n):
        v = order[idx]
        window = order[max(0, idx - 12):idx]
        candidates = rng.sample(window, min(3, len(window)))
        u = min(candidates, key=lambda x: len(adj[x]))
        add_edge(u, v)

    def bfs_at_distance(src, dmin, dmax):
        dist = {src: 0}
        queue = deque([src])
        hits = []
        while queue:
            x = queue.popleft()
            if dist[x] >= dmax:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if dmin <= dist[y] <= dmax:
                        hits.append(y)
                    queue.append(y)
        return hits

    guard = 0
    while len(edges) < m_target and guard < 200000:
        guard += 1
        move = rng.random()
        if move < wedge_fraction:
            # Close a wedge: one new triangle.
            u = rng.randrange(n)
            if len(adj[u]) < 2:
                continue
            a, b = rng.sample(sorted(adj[u]), 2)
            add_edge(a, b)
        elif move < wedge_fraction + 0.5 * wedge_fraction:
            # Stack a second triangle on an existing one: raises the count of
            # triangle pairs sharing an edge.
            a, b = rng.choice(sorted(edges))
            shared = adj[a] & adj[b]
            if not shared:
                continue
            pool = sorted((adj[a] | adj[b]) - shared - {a, b})
            if not pool:
                continue
            y = rng.choice(pool)
            add_edge(y, a if y in adj[b] else b)
        else:
            u = rng.randrange(n)
            hits = bfs_at_distance(u, 3, 8)
            if hits:
                add_edge(u, rng.choice(hits))
    return sorted(edges)


def write_case(path, name, types, edges, rng):
    lines = [f"function mpc = {name}", "mpc.version = '2';", "mpc.baseMVA = 100;", ""]
    lines.append("%% bus data")
    lines.append("%  bus_i  type  Pd  Qd  Gs  Bs  area  Vm  Va  baseKV  zone  Vmax  Vmin")
    lines.append("mpc.bus = [")
    for i, t in enumerate(types):
        bus_id = i + 1
        if t == "L":
            pd = 5.0 + (i * 7) % 40
            qd = 1.0 + (i * 3) % 9
        else:
            pd = qd = 0.0
        code = 2 if t == "P" else 1
        lines.append(f"\t{bus_id}  {code}  {pd:.1f}  {qd:.1f}  0  0  1  1.0  0  135  1  1.1  0.9;")
    lines.append("];")
    lines.append("")
    lines.append("%% generator data")
    lines.append("%  bus  Pg  Qg  Qmax  Qmin  Vg  mBase  status  Pmax  Pmin")
    lines.append("mpc.gen = [")
    for i, t in enumerate(types):
        if t == "P":
            pg = 20.0 + (i * 11) % 60
            lines.append(f"\t{i + 1}  {pg:.1f}  0.0  30.0  -30.0  1.0  100  1  {pg + 40:.1f}  0.0;")
    lines.append("];")
    lines.append("")
    lines.append("%% branch data")
    lines.append("%  fbus  tbus  r  x  b  rateA  rateB  rateC  ratio  angle  status  angmin  angmax")
    lines.append("mpc.branch = [")
    for a, b in edges:
        r = 0.01 + 0.04 * rng.random()
        x = 0.05 + 0.20 * rng.random()
        lines.append(
            f"\t{a + 1}  {b + 1}  {r:.4f}  {x:.4f}  0.00  250  250  250  0  0  1  -360  360;")
    lines.append("];")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--name", required=True)
    parser.add_argument("--out", required=True)
    parser.add_argument("--nodes", type=int, required=True)
    parser.add_argument("--edges", type=int, required=True)
    parser.add_argument("--gens", type=int, required=True)
    parser.add_argument("--inters", type=int, required=True)
    parser.add_argument("--wedge-fraction", type=float, default=0.12)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    n = args.nodes
    roles = ["P"] * args.gens + ["I"] * args.inters + ["L"] * (n - args.gens - args.inters)
    rng.shuffle(roles)
    edges = build_topology(rng, n, args.edges, args.wedge_fraction)
    write_case(args.out, args.name, roles, edges, rng)
    print(f"wrote {args.out}: n={n} m={len(edges)}")


if __name__ == "__main__":
    main()
