"""Exact maximum clique on small graphs, used by the constrained oracles.

Branch and bound with a greedy-coloring upper bound.  Vertices are bit
positions; adjacency is a list of bitmasks.
"""

from __future__ import annotations

__all__ = ["max_clique"]


def _expand(r_mask: int, r_size: int, cand: int, adj, state) -> None:
    if cand == 0:
        if r_size > state[0]:
            state[0], state[1] = r_size, r_mask
        return
    # greedy-color the candidates; a clique inside color classes 1..c has <= c vertices
    order = []
    tmp = cand
    color = 0
    while tmp:
        color += 1
        avail = tmp
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            order.append((v, color))
            avail &= ~(adj[v] | b)
            tmp &= ~b
    for v, color in reversed(order):
        if r_size + color <= state[0]:
            return
        b = 1 << v
        _expand(r_mask | b, r_size + 1, cand & adj[v], adj, state)
        cand &= ~b


def max_clique(n: int, adj, warm_size: int = 0, warm_mask: int = 0):
    """(size, vertex bitmask) of a maximum clique among vertices 0..n-1.

    A warm start (a known clique) tightens pruning from the first branch.
    """
    state = [warm_size, warm_mask]
    _expand(0, 0, (1 << n) - 1, adj, state)
    return state[0], state[1]
