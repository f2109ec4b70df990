"""Pure-Python coloring-search kernel.

Same contract as the compiled kernel in _kernel.pyx: given N objects, d
colors, and a family of candidate sets (CSR arrays), find the
lexicographically least coloring under which no candidate set is
monochromatic, or report that none exists.  The DFS assigns colors to objects
in index order, trying smaller colors first, and abandons a branch as soon as
some candidate set is completely assigned one color; that prune is exact, so
the first complete assignment reached is the lexicographic minimum.

Candidate sets of size < 2 must be filtered out by the caller (they are
monochromatic under every coloring, so no bad coloring exists).
"""

from __future__ import annotations

BACKEND_NAME = "python"


def search(num_objects, d, cand_starts, cand_items, obj_starts, obj_items, prefix):
    """Lexicographically least bad coloring extending prefix, or None.

    cand_starts/cand_items: CSR of candidate sets over object indices.
    obj_starts/obj_items: CSR of the reverse membership (object -> candidates).
    """
    num_cands = len(cand_starts) - 1
    size = [cand_starts[k + 1] - cand_starts[k] for k in range(num_cands)]
    cnt = [0] * num_cands
    col = [0] * num_cands
    broken = [False] * num_cands
    log: list[int] = []
    level_log_top = [0] * (num_objects + 1)
    coloring = [0] * num_objects

    def assign(i, c):
        # phase 1: would this complete a monochromatic candidate?
        for idx in range(obj_starts[i], obj_starts[i + 1]):
            k = obj_items[idx]
            if not broken[k] and cnt[k] == size[k] - 1 and col[k] == c:
                return False
        # phase 2: commit
        for idx in range(obj_starts[i], obj_starts[i + 1]):
            k = obj_items[idx]
            if not broken[k]:
                if cnt[k] == 0:
                    col[k] = c
                elif col[k] != c:
                    broken[k] = True
                    log.append(k)
            cnt[k] += 1
        return True

    def unassign(i):
        for idx in range(obj_starts[i], obj_starts[i + 1]):
            cnt[obj_items[idx]] -= 1
        while len(log) > level_log_top[i]:
            broken[log.pop()] = False

    base = len(prefix)
    for i, c in enumerate(prefix):
        level_log_top[i] = len(log)
        if not assign(i, c):
            for j in range(i - 1, -1, -1):
                unassign(j)
            return None
        coloring[i] = c

    if base == num_objects:
        return list(coloring)

    pos = base
    next_color = [0] * (num_objects + 1)
    next_color[pos] = 0
    while True:
        c = next_color[pos]
        advanced = False
        while c < d:
            level_log_top[pos] = len(log)
            if assign(pos, c):
                advanced = True
                break
            c += 1
        if advanced:
            coloring[pos] = c
            next_color[pos] = c
            pos += 1
            if pos == num_objects:
                return list(coloring)
            next_color[pos] = 0
        else:
            pos -= 1
            if pos < base:
                return None
            unassign(pos)
            next_color[pos] += 1


def search_bruteforce(num_objects, d, cand_sets, prefix=()):
    """Reference oracle: walk every d-coloring in lexicographic order and
    return the first with no monochromatic candidate set.  Exponential; only
    for cross-checking the DFS on tiny inputs."""
    from itertools import product

    sets = [tuple(s) for s in cand_sets]
    for tail in product(range(d), repeat=num_objects - len(prefix)):
        coloring = tuple(prefix) + tail
        ok = True
        for s in sets:
            if not s:
                ok = False
                break
            c0 = coloring[s[0]]
            if all(coloring[i] == c0 for i in s):
                ok = False
                break
        if ok:
            return list(coloring)
    return None
