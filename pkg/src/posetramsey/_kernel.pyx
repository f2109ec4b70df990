# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled coloring-search kernel.

Mirrors _kernel_py.search exactly; see that module for the contract.  The DFS
state lives in C arrays: per-candidate assigned counts, the color of the
uniform prefix, a broken flag, and an undo log of candidates broken per level.
"""

from libc.stdlib cimport malloc, free

BACKEND_NAME = "compiled"


def search(int num_objects, int d, int[::1] cand_starts, int[::1] cand_items,
           int[::1] obj_starts, int[::1] obj_items, int[::1] prefix):
    cdef int num_cands = cand_starts.shape[0] - 1
    cdef int total_members = cand_items.shape[0]
    cdef int base = prefix.shape[0]
    cdef int *size = <int *> malloc(sizeof(int) * (num_cands if num_cands else 1))
    cdef int *cnt = <int *> malloc(sizeof(int) * (num_cands if num_cands else 1))
    cdef int *col = <int *> malloc(sizeof(int) * (num_cands if num_cands else 1))
    cdef char *broken = <char *> malloc(num_cands if num_cands else 1)
    cdef int *log = <int *> malloc(sizeof(int) * (total_members if total_members else 1))
    cdef int *level_log_top = <int *> malloc(sizeof(int) * (num_objects + 1))
    cdef int *coloring = <int *> malloc(sizeof(int) * (num_objects if num_objects else 1))
    cdef int *next_color = <int *> malloc(sizeof(int) * (num_objects + 1))
    cdef int log_top = 0
    cdef int pos, c, i, idx, k, j
    cdef bint ok, advanced
    if (size == NULL or cnt == NULL or col == NULL or broken == NULL
            or log == NULL or level_log_top == NULL or coloring == NULL
            or next_color == NULL):
        free(size); free(cnt); free(col); free(broken)
        free(log); free(level_log_top); free(coloring); free(next_color)
        raise MemoryError()
    try:
        for k in range(num_cands):
            size[k] = cand_starts[k + 1] - cand_starts[k]
            cnt[k] = 0
            col[k] = 0
            broken[k] = 0

        # apply the fixed prefix
        for i in range(base):
            c = prefix[i]
            level_log_top[i] = log_top
            ok = True
            for idx in range(obj_starts[i], obj_starts[i + 1]):
                k = obj_items[idx]
                if broken[k] == 0 and cnt[k] == size[k] - 1 and col[k] == c:
                    ok = False
                    break
            if not ok:
                return None
            for idx in range(obj_starts[i], obj_starts[i + 1]):
                k = obj_items[idx]
                if broken[k] == 0:
                    if cnt[k] == 0:
                        col[k] = c
                    elif col[k] != c:
                        broken[k] = 1
                        log[log_top] = k
                        log_top += 1
                cnt[k] += 1
            coloring[i] = c

        if base == num_objects:
            return [coloring[i] for i in range(num_objects)]

        pos = base
        next_color[pos] = 0
        while True:
            c = next_color[pos]
            advanced = False
            while c < d:
                level_log_top[pos] = log_top
                ok = True
                for idx in range(obj_starts[pos], obj_starts[pos + 1]):
                    k = obj_items[idx]
                    if broken[k] == 0 and cnt[k] == size[k] - 1 and col[k] == c:
                        ok = False
                        break
                if ok:
                    for idx in range(obj_starts[pos], obj_starts[pos + 1]):
                        k = obj_items[idx]
                        if broken[k] == 0:
                            if cnt[k] == 0:
                                col[k] = c
                            elif col[k] != c:
                                broken[k] = 1
                                log[log_top] = k
                                log_top += 1
                        cnt[k] += 1
                    advanced = True
                    break
                c += 1
            if advanced:
                coloring[pos] = c
                next_color[pos] = c
                pos += 1
                if pos == num_objects:
                    return [coloring[i] for i in range(num_objects)]
                next_color[pos] = 0
            else:
                pos -= 1
                if pos < base:
                    return None
                for idx in range(obj_starts[pos], obj_starts[pos + 1]):
                    cnt[obj_items[idx]] -= 1
                while log_top > level_log_top[pos]:
                    log_top -= 1
                    broken[log[log_top]] = 0
                next_color[pos] += 1
    finally:
        free(size); free(cnt); free(col); free(broken)
        free(log); free(level_log_top); free(coloring); free(next_color)
