"""Backend selection and the uniform bad-coloring search entry point.

A "bad" coloring is one under which no candidate set is monochromatic; the
verifiers phrase every Ramsey question as "does a bad coloring exist".  The
compiled Cython kernel is preferred when it was built; the pure-Python twin
is the fallback, selected at import.  Set POSETRAMSEY_KERNEL=python (or
=compiled) to force a backend.

All backends return the lexicographically least bad coloring, so results are
identical across backends, symmetry settings, and job counts.
"""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import _kernel_py

_forced = os.environ.get("POSETRAMSEY_KERNEL", "").strip().lower()
if _forced in ("python", "pure", "py"):
    _default_backend = _kernel_py
else:
    try:
        from . import _kernel as _default_backend  # type: ignore[no-redef]
    except ImportError:
        if _forced == "compiled":
            raise
        _default_backend = _kernel_py

BACKEND_NAME = _default_backend.BACKEND_NAME


def get_backend(name: str | None = None):
    if name in (None, "auto"):
        return _default_backend
    if name == "python":
        return _kernel_py
    if name == "compiled":
        from . import _kernel

        return _kernel
    raise ValueError(f"unknown kernel backend {name!r}")


def _csr(sets: Sequence[Sequence[int]], num_objects: int):
    cand_starts = array("i", [0])
    cand_items = array("i")
    membership: list[list[int]] = [[] for _ in range(num_objects)]
    for k, s in enumerate(sets):
        cand_items.extend(s)
        cand_starts.append(len(cand_items))
        for i in s:
            membership[i].append(k)
    obj_starts = array("i", [0])
    obj_items = array("i")
    for row in membership:
        obj_items.extend(row)
        obj_starts.append(len(obj_items))
    return cand_starts, cand_items, obj_starts, obj_items


def _run(backend_name, num_objects, d, sets, prefix):
    if backend_name == "baseline":
        return _kernel_py.search_bruteforce(num_objects, d, sets, prefix)
    backend = get_backend(backend_name)
    cand_starts, cand_items, obj_starts, obj_items = _csr(sets, num_objects)
    return backend.search(
        num_objects, d, cand_starts, cand_items, obj_starts, obj_items,
        array("i", prefix),
    )


def _branch(args):
    return _run(*args)


def find_bad_coloring(
    num_objects: int,
    d: int,
    sets: Sequence[Sequence[int]],
    symmetry: bool = True,
    jobs: int = 1,
    backend: str | None = None,
) -> tuple[int, ...] | None:
    """Lexicographically least d-coloring of 0..num_objects-1 under which no
    candidate set is monochromatic, or None when every coloring leaves some
    set monochromatic.

    Candidate sets must have at least two elements (smaller sets are
    monochromatic always; callers short-circuit those).  With symmetry on,
    the first object's color is pinned to 0: color permutations preserve
    badness, so the least bad coloring starts with 0 and the prune is exact.
    """
    if d < 1:
        raise ValueError("need at least one color")
    for s in sets:
        if len(s) < 2:
            raise ValueError("candidate sets of size < 2 admit no bad coloring")
    sets = tuple(tuple(s) for s in sets)
    backend_name = backend or "auto"
    base: tuple[int, ...] = (0,) if symmetry and num_objects >= 1 else ()

    if jobs > 1 and num_objects > len(base) and d > 1:
        branches = [base + (c,) for c in range(d)]
        with ProcessPoolExecutor(max_workers=min(jobs, len(branches))) as pool:
            results = list(
                pool.map(
                    _branch,
                    [(backend_name, num_objects, d, sets, br) for br in branches],
                )
            )
        # canonical merge: branches are ordered by the color at the branch
        # position, so the first hit is the lexicographic minimum
        for res in results:
            if res is not None:
                return tuple(res)
        return None

    res = _run(backend_name, num_objects, d, sets, base)
    return None if res is None else tuple(res)


def check_coloring(
    coloring: Sequence[int], sets: Sequence[Sequence[int]]
) -> int | None:
    """Index of the first monochromatic candidate set, or None.

    Deliberately independent of the DFS kernels; used to re-validate every
    counterexample before it is emitted.
    """
    for k, s in enumerate(sets):
        s = tuple(s)
        if not s:
            return k
        c0 = coloring[s[0]]
        if all(coloring[i] == c0 for i in s):
            return k
    return None
