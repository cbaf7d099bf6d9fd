"""Slow, independent re-implementations used to freeze expected values.

Nothing here touches the dart arrays; everything works from plain
clockwise rotation lists so that a bug in the package cannot hide itself.
"""

from __future__ import annotations

from itertools import permutations


def _connected(vertices: set[int], adj: list[list[int]]) -> bool:
    if not vertices:
        return True
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in vertices and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vertices


def biconnected(vertices: set[int], adj: list[list[int]]) -> bool:
    if len(vertices) < 3:
        return len(vertices) == 2 and _connected(vertices, adj)
    return _connected(vertices, adj) and all(_connected(vertices - {x}, adj) for x in vertices)


def outer_walk(rot: list[list[int]], keep: set[int], v1: int, v2: int) -> list[int]:
    """Clockwise outer boundary of the sub-embedding on ``keep``, starting v2, v1."""
    sub = {v: [u for u in rot[v] if u in keep] for v in keep}
    walk = []
    u, v = v2, v1
    while True:
        walk.append(u)
        r = sub[v]
        u, v = v, r[(r.index(u) + 1) % len(r)]
        if (u, v) == (v2, v1):
            return walk


def is_canonical(rot: list[list[int]], roots: tuple[int, int, int], groups) -> bool:
    """Direct transcription of the definition of a canonical ordering."""
    v1, v2, vn = roots
    n = len(rot)
    groups = [list(g) for g in groups]
    if sorted(v for g in groups for v in g) != list(range(n)):
        return False
    if groups[0] != [v1, v2] or groups[-1] != [vn]:
        return False
    K = len(groups)
    prefix: set[int] = set(groups[0])
    for k in range(1, K):
        grp = groups[k]
        before = set(prefix)
        prefix |= set(grp)
        later = set(range(n)) - prefix
        if not biconnected(prefix, rot):
            return False
        walk = outer_walk(rot, prefix, v1, v2)
        if any(z not in walk for z in grp):
            return False
        if k == K - 1:
            continue
        if len(grp) == 1:
            z = grp[0]
            if sum(u in before for u in rot[z]) < 2 or not any(u in later for u in rot[z]):
                return False
            continue
        for a, b in zip(grp, grp[1:]):
            if b not in rot[a]:
                return False
        inside = set(grp)
        for i, z in enumerate(grp):
            nb = [u for u in rot[z] if u in inside]
            if len(nb) != (1 if i in (0, len(grp) - 1) else 2):
                return False
            earlier = sum(u in before for u in rot[z])
            if earlier != (1 if i in (0, len(grp) - 1) else 0):
                return False
            if not any(u in later for u in rot[z]):
                return False
        # z_1 .. z_l must appear in this order, consecutively, walking clockwise
        i = walk.index(grp[0])
        seq = (walk[i:] + walk[:i])[: len(grp)]
        if seq != grp:
            return False
    return True


def _ordered_partitions(items: list[int]):
    if not items:
        yield []
        return
    n = len(items)
    for mask in range(1, 1 << n):
        block = [items[i] for i in range(n) if mask >> i & 1]
        rest = [items[i] for i in range(n) if not mask >> i & 1]
        for perm in permutations(block):
            for tail in _ordered_partitions(rest):
                yield [list(perm)] + tail


def all_canonical_orderings(rot: list[list[int]], roots: tuple[int, int, int]) -> list[list[list[int]]]:
    v1, v2, vn = roots
    middle = [v for v in range(len(rot)) if v not in roots]
    found = []
    for part in _ordered_partitions(middle):
        groups = [[v1, v2]] + part + [[vn]]
        if is_canonical(rot, roots, groups):
            found.append(groups)
    return found


def spanning_tree_count_brute(n: int, edges: list[tuple[int, int]]) -> int:
    """Count spanning trees by testing every (n-1)-subset of edges."""
    from itertools import combinations

    count = 0
    for sub in combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for e in sub:
            a, b = find(edges[e][0]), find(edges[e][1])
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count
