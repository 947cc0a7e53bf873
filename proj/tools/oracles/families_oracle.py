#!/usr/bin/env python3
"""Reference values for the generated families, built from scratch with networkx.

Shares no code with the C++ generators. Each line:
  name n m gamma_c critical zeta zeta0 min_degree fc1 fc2 witness_odd graph6
fc1/fc2 are '-' when the parity does not match; witness_odd is the number of
odd components left by the named witness set (or '-').
"""
import itertools
import sys

import networkx as nx


def masks(g):
    idx = {v: i for i, v in enumerate(g.nodes())}
    closed = [0] * len(idx)
    adj = [0] * len(idx)
    for v, i in idx.items():
        adj[i] = sum(1 << idx[w] for w in g[v])
        closed[i] = adj[i] | (1 << i)
    return idx, adj, closed


def connected_mask(adj, s):
    if s == 0:
        return False
    start = s & -s
    seen, frontier = start, start
    while frontier:
        nb = 0
        t = frontier
        while t:
            b = t & -t
            nb |= adj[b.bit_length() - 1]
            t ^= b
        frontier = nb & s & ~seen
        seen |= frontier
    return seen == s


def gamma_c(g, limit=None):
    idx, adj, closed = masks(g)
    n = len(idx)
    full = (1 << n) - 1
    top = n if limit is None else min(limit, n)
    for k in range(1, top + 1):
        for combo in itertools.combinations(range(n), k):
            cover = 0
            s = 0
            for i in combo:
                cover |= closed[i]
                s |= 1 << i
            if cover == full and connected_mask(adj, s):
                return k
    return None


def critical(g, k):
    for u, v in nx.non_edges(g):
        h = g.copy()
        h.add_edge(u, v)
        if gamma_c(h, k - 1) is None:
            return False
    return True


def has_perfect_matching(g):
    if g.number_of_nodes() == 0:
        return True
    return 2 * len(nx.max_weight_matching(g, maxcardinality=True)) == g.number_of_nodes()


def factor_critical(g, ell):
    if (g.number_of_nodes() - ell) % 2:
        return "-"
    for s in itertools.combinations(g.nodes(), ell):
        if not has_perfect_matching(g.subgraph(set(g) - set(s))):
            return 0
    return 1


def odd_components(g, s):
    return sum(1 for c in nx.connected_components(g.subgraph(set(g) - set(s))) if len(c) % 2)


def clique(g, names):
    g.add_nodes_from(names)
    g.add_edges_from(itertools.combinations(names, 2))


def full(g, a, b):
    g.add_edges_from((x, y) for x in a for y in b)


def b22(m, r):
    g = nx.Graph()
    inner, leaves, star = [], [], set()
    for i, mi in enumerate(m, 1):
        inner.append(f"s{i}_0")
        for j in range(1, mi + 1):
            inner.append(f"s{i}_{j}")
            leaves.append(f"s{i}_{j}")
            star.add(frozenset((f"s{i}_0", f"s{i}_{j}")))
    inner += [f"t{j}" for j in range(1, r + 1)]
    g.add_nodes_from(["c"] + inner)
    g.add_edges_from(e for e in itertools.combinations(inner, 2) if frozenset(e) not in star)
    full(g, ["c"], leaves)
    return g


def g1(k, l, nl, m=(1, 1), r=0):
    g = b22(m, r)
    cs = [f"c{i}" for i in range(k - 3)]
    ks = [f"k{i}" for i in range(1, nl + 1)]
    g.add_nodes_from(cs)
    clique(g, ks)
    if l < k - 3:
        nx.add_path(g, cs[:l])
        nx.add_path(g, cs[l:])
        full(g, [cs[l - 1]], ks)
        full(g, ks, [cs[l]])
        g.add_edge(cs[-1], "c")
    else:
        nx.add_path(g, cs)
        full(g, [cs[-1]], ks)
        full(g, ks, ["c"])
    return g


def b3():
    g = nx.cycle_graph(["b", "a1", "w1", "t", "w2", "a2"])
    g.add_edge("a1", "a2")
    return g


def g2(k):
    g = b3()
    cs = [f"c{i}" for i in range(k - 3)]
    nx.add_path(g, cs)
    g.add_edge(cs[-1], "b")
    return g


def hl(prefix, sizes):
    g = nx.Graph()
    l = len(sizes)
    u = [[f"{prefix}u{i}_{j}" for j in range(1, sizes[i - 1] + 1)] for i in range(1, l + 1)]
    clique(g, [prefix + "x"] + u[0])
    for i in range(l - 2):
        clique(g, u[i] + u[i + 1])
    clique(g, u[-1])
    for j, a in enumerate(u[-2]):
        for t, b in enumerate(u[-1]):
            if t != j % len(u[-1]):
                g.add_edge(a, b)
    return g, prefix + "x"


def f_family(p, q, r, s=2):
    g = nx.Graph()
    heads = []
    for i in range(p):
        h, head = hl(f"h{i}", [s, s])
        g = nx.union(g, h)
        heads.append(head)
    path = [f"d{j}" for j in range(q)]
    nx.add_path(g, path)
    heads.append(path[0])
    h, head = hl("hr", [s] * r)
    g = nx.union(g, h)
    heads.append(head)
    clique(g, heads)
    return g


def x_family(s):
    g = nx.Graph()
    a = [f"a{i}" for i in range(1, s + 1)]
    b = [f"b{i}" for i in range(1, s + 1)]
    y = [f"y{i}" for i in range(1, s + 1)]
    g.add_nodes_from(a + b)
    clique(g, y)
    for i in range(s):
        for j in range(s):
            if i != j:
                g.add_edge(a[i], b[j])
                g.add_edge(a[i], y[j])
    return g, a, y


def g5(l1, l2):
    g = nx.Graph()
    k1 = [f"p{i}" for i in range(l1)]
    k2 = [f"q{i}" for i in range(l2)]
    clique(g, k1)
    clique(g, k2)
    full(g, ["u"], k1)
    full(g, k1, k2)
    full(g, k2, ["x'", "y'"])
    g.add_edges_from([("x'", "y'"), ("x", "x'"), ("y", "y'"), ("w", "x'"), ("w", "y'"), ("z", "x"), ("z", "y"), ("z", "w")])
    return g


def a_family(t1, t2):
    g = nx.Graph()
    p = [f"p{i}" for i in range(t1)]
    q = [f"q{i}" for i in range(t2)]
    clique(g, p)
    clique(g, q)
    full(g, ["x1"], p)
    full(g, p, ["x2"])
    g.add_edge("x2", "x3")
    full(g, ["x1"], q)
    full(g, q, ["x3"])
    return g, q + ["x3"]


def fig4(n):
    g = nx.Graph()
    ks = [f"k{i}" for i in range(n)]
    clique(g, ks)
    for i in range(n):
        g.add_edge("c", f"l{i}")
        for j in range(n):
            if i != j:
                g.add_edge(f"l{i}", ks[j])
    return g


def extend(base, h, sizes):
    g = base.copy()
    prev = ["x0"]
    g.add_node("x0")
    for i, s in enumerate(sizes):
        cur = [f"K{i}_{j}" for j in range(s)]
        clique(g, cur)
        full(g, prev, cur)
        prev = cur
    full(g, prev, h)
    return g, prev


def row(name, g, witness=None):
    k = gamma_c(g)
    cuts = set(nx.articulation_points(g))
    zeta0 = max((len(cuts & set(b)) for b in nx.biconnected_components(g)), default=0)
    wodd = odd_components(g, witness) if witness is not None else "-"
    g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
    fields = [name, g.number_of_nodes(), g.number_of_edges(), k, int(critical(g, k)), len(cuts), zeta0,
              min(d for _, d in g.degree()), factor_critical(g, 1), factor_critical(g, 2), wodd, g6]
    print(" ".join(str(x) for x in fields))
    sys.stdout.flush()


def main():
    row("B21:t3=2,t4=2", nx.Graph([("c", "p1"), ("c", "p2"), ("p1", "p2"), ("p1", "q1"), ("p1", "q2"), ("p2", "q1"),
                                   ("p2", "q2"), ("q1", "q2"), ("q1", "z2"), ("q2", "z2")]))
    row("B22:m=1/1,r=0", b22([1, 1], 0))
    row("G1:k=4,l=1,n=1", g1(4, 1, 1))
    row("G1:k=4,l=1,n=2", g1(4, 1, 2))
    row("G1:k=5,l=1,n=2", g1(5, 1, 2))
    row("G1:k=6,l=3,n=2", g1(6, 3, 2))
    row("G2:k=5", g2(5))
    row("G2:k=6", g2(6))
    row("G2:k=4,k4=1", g2(4))
    row("F:p=1,q=2,r=2", f_family(1, 2, 2))
    row("F:p=0,q=2,r=2", f_family(0, 2, 2))
    x3, a3, y3 = x_family(3)
    row("X:s=3", x3, a3)
    x5, a5, _ = x_family(5)
    row("X:s=5", x5, a5)
    row("G5:l1=2,l2=2", g5(2, 2), ["x'", "y'", "z"])
    a32, h = a_family(3, 2)
    row("A:t1=3,t2=2", a32, ["x1", "x2"])
    row("FIG4:n=4", fig4(4))
    row("CYCLE:k=4", nx.cycle_graph(6))
    e, y = extend(nx.cycle_graph(6), [0, 1], [2])
    row("EXT:n=2;CYCLE:k=4", e)
    e, y = extend(x3, y3, [2, 1])
    row("EXT:n=2/1;X:s=3", e, y + a3)
    e, y = extend(x3, y3, [2, 2, 1])
    row("EXT:n=2/2/1;X:s=3", e, y + a3)
    e, _ = extend(a32, h, [2, 3])
    row("EXT:n=2/3;A:t1=3,t2=2", e, ["x1", "x2"])


if __name__ == "__main__":
    main()
