"""Finite structures: a ground set {0..n-1} with a strict partial order and p
linear orders extending it, plus embeddings and copies.

The partial order is stored transitively closed.  Every linear order is kept
as its increasing enumeration.  Because embeddings must preserve the first
linear order in both directions, there is at most one embedding per image
subset; copies can therefore be handled as plain subsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linext import position_map

Pair = tuple[int, int]
EmbeddingMap = tuple[int, ...]
Copy = tuple[int, ...]


class StructureError(ValueError):
    """Raised when raw data does not describe a valid structure."""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


def transitive_closure(pairs: Iterable[Pair]) -> frozenset[Pair]:
    closure = set(tuple(p) for p in pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    return frozenset(closure)


def _structure_errors(size, partial_order, linear_orders, p) -> list[str]:
    errors = []
    if p is not None and p != len(linear_orders):
        errors.append(
            f"wrong number of linear orders: p={p} but {len(linear_orders)} given"
        )
    if len(linear_orders) < 1:
        errors.append("at least one linear order is required")
    for a, b in partial_order:
        if a == b:
            errors.append(f"reflexive pair ({a},{a}) in partial order")
        if not (0 <= a < size and 0 <= b < size):
            errors.append(f"pair ({a},{b}) outside the ground set")
    pairs = set(partial_order)
    for a, b in pairs:
        for c, d in pairs:
            if b == c and (a, d) not in pairs:
                errors.append(
                    f"partial order not transitively closed: ({a},{b}),({c},{d}) "
                    f"without ({a},{d})"
                )
                break
        else:
            continue
        break
    for i, order in enumerate(linear_orders):
        if sorted(order) != list(range(size)):
            errors.append(f"linear order {i} is not a permutation of the ground set")
            continue
        pos = position_map(order)
        for a, b in partial_order:
            if a != b and 0 <= a < size and 0 <= b < size and pos[a] >= pos[b]:
                errors.append(f"linear order {i} does not extend the partial order")
                break
    return errors


@dataclass(frozen=True)
class Structure:
    """Immutable (ground set, partial order, linear orders) value."""

    size: int
    partial_order: frozenset[Pair]
    linear_orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "partial_order", frozenset((a, b) for a, b in self.partial_order)
        )
        object.__setattr__(
            self, "linear_orders", tuple(tuple(o) for o in self.linear_orders)
        )
        errors = _structure_errors(self.size, self.partial_order, self.linear_orders, None)
        if errors:
            raise StructureError(errors)

    @property
    def p(self) -> int:
        return len(self.linear_orders)

    def comparable(self, a: int, b: int) -> bool:
        return (a, b) in self.partial_order or (b, a) in self.partial_order

    def sorted_pairs(self) -> tuple[Pair, ...]:
        return tuple(sorted(self.partial_order))

    def canonical_key(self):
        return (self.size, self.sorted_pairs(), self.linear_orders)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "size": self.size,
            "partial_order": [list(p) for p in self.sorted_pairs()],
            "linear_orders": [list(o) for o in self.linear_orders],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def validate_structure(data: Mapping) -> Structure:
    """Check raw structure data (the JSON shape) and build a Structure.

    A true "hasse" flag means the partial order is given by covers and gets
    transitively closed first.  Raises StructureError carrying every problem
    found.
    """
    errors = []
    try:
        size = int(data["size"])
    except (KeyError, TypeError, ValueError):
        raise StructureError("missing or malformed 'size'") from None
    raw_pairs = data.get("partial_order", [])
    try:
        pairs = {(int(a), int(b)) for a, b in raw_pairs}
    except (TypeError, ValueError):
        raise StructureError("malformed 'partial_order'") from None
    for a, b in pairs:
        if a == b:
            errors.append(f"reflexive pair ({a},{a}) in partial order")
    if not errors and data.get("hasse"):
        pairs = set(transitive_closure(pairs))
        for a, b in pairs:
            if a == b:
                errors.append("cycle in partial order")
                break
    try:
        orders = tuple(tuple(int(x) for x in o) for o in data.get("linear_orders", []))
    except (TypeError, ValueError):
        raise StructureError("malformed 'linear_orders'") from None
    p = data.get("p", len(orders))
    errors.extend(_structure_errors(size, pairs, orders, p))
    if errors:
        raise StructureError(errors)
    return Structure(size, frozenset(pairs), orders)


def structure_from_json(text: str) -> Structure:
    return validate_structure(json.loads(text))


def chain(n: int, p: int = 1) -> Structure:
    """The n-chain: total partial order with p copies of the natural order."""
    order = tuple(range(n))
    pairs = frozenset((i, j) for i in range(n) for j in range(i + 1, n))
    return Structure(n, pairs, (order,) * p)


def antichain(n: int, p: int = 1) -> Structure:
    """n pairwise incomparable points, natural linear orders."""
    return Structure(n, frozenset(), (tuple(range(n)),) * p)


def restrict(s: Structure, subset: Iterable[int]) -> Structure:
    """The induced structure on a subset, relabeled to 0..|subset|-1 along
    the first linear order."""
    subset = set(subset)
    if not subset <= set(range(s.size)):
        raise StructureError("subset is not contained in the ground set")
    listing = [x for x in s.linear_orders[0] if x in subset]
    relabel = {x: i for i, x in enumerate(listing)}
    pairs = frozenset(
        (relabel[a], relabel[b])
        for a, b in s.partial_order
        if a in subset and b in subset
    )
    orders = tuple(
        tuple(relabel[x] for x in order if x in subset) for order in s.linear_orders
    )
    return Structure(len(subset), pairs, orders)


def is_embedding(f: Sequence[int], x: Structure, y: Structure) -> bool:
    """Both-direction preservation of the partial order and every linear
    order, for a total map given as the tuple of images."""
    if x.p != y.p:
        raise ValueError(f"arity mismatch: {x.p} vs {y.p}")
    if len(f) != x.size or any(not 0 <= v < y.size for v in f):
        raise ValueError("map does not send the ground set into the target")
    for a in range(x.size):
        for b in range(x.size):
            if ((a, b) in x.partial_order) != ((f[a], f[b]) in y.partial_order):
                return False
    for xo, yo in zip(x.linear_orders, y.linear_orders):
        xpos = position_map(xo)
        ypos = position_map(yo)
        for a in range(x.size):
            for b in range(x.size):
                if (xpos[a] < xpos[b]) != (ypos[f[a]] < ypos[f[b]]):
                    return False
    return True


def compose_embeddings(outer: Sequence[int], inner: Sequence[int]) -> EmbeddingMap:
    return tuple(outer[v] for v in inner)


def enumerate_embeddings(x: Structure, y: Structure) -> list[EmbeddingMap]:
    """All embeddings of x into y, lexicographic in the image tuples.

    An embedding preserves the first linear order, so each image subset
    admits at most one candidate map: the one pairing the orders' listings.
    """
    if x.p != y.p:
        raise ValueError(f"arity mismatch: {x.p} vs {y.p}")
    if x.size > y.size:
        return []
    src_listing = x.linear_orders[0]
    y_pos = position_map(y.linear_orders[0])
    out = []
    for image in combinations(range(y.size), x.size):
        ordered_image = sorted(image, key=y_pos.__getitem__)
        f = [0] * x.size
        for k, elem in enumerate(src_listing):
            f[elem] = ordered_image[k]
        f = tuple(f)
        if is_embedding(f, x, y):
            out.append(f)
    out.sort()
    return out


def enumerate_copies(x: Structure, z: Structure) -> list[Copy]:
    """Images of embeddings of x in z, as sorted tuples, lexicographic."""
    return sorted(tuple(sorted(f)) for f in enumerate_embeddings(x, z))


def hasse_pairs(s: Structure) -> list[Pair]:
    """Cover pairs of the partial order."""
    covers = []
    for a, b in s.partial_order:
        if not any(
            (a, c) in s.partial_order and (c, b) in s.partial_order
            for c in range(s.size)
        ):
            covers.append((a, b))
    return sorted(covers)


def structure_to_dot(s: Structure, labels: Sequence[str] | None = None) -> str:
    """DOT rendering of the Hasse diagram, nodes annotated with their rank in
    the first linear order."""
    pos = position_map(s.linear_orders[0])
    lines = ["digraph structure {", "  rankdir=BT;", "  node [shape=circle];"]
    for v in range(s.size):
        name = labels[v] if labels is not None else str(v)
        lines.append(f'  n{v} [label="{name}\\nL0 rank {pos[v]}"];')
    for a, b in hasse_pairs(s):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines)
