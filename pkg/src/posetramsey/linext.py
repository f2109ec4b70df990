"""The ordered space of linear orders on a finite set and its extension
subspaces.

A linear order is its increasing enumeration: a tuple listing the ground set
from smallest to largest.  Relative to a reference order L, the space of all
linear orders on the same ground set is itself linearly ordered ("below"):
compare enumerations lexicographically, ranking elements by their position in
L.  The reference is the minimum.  An equivalent cut-based characterization is
kept alongside as a cross-check, not as the working definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .rigsurj import AnchoredRigidSurjection

Order = tuple[int, ...]
Pair = tuple[int, int]


def position_map(order: Sequence[int]) -> dict[int, int]:
    return {x: i for i, x in enumerate(order)}


def order_pairs(order: Sequence[int]) -> frozenset[Pair]:
    """All strict pairs (a, b) with a before b in the order."""
    return frozenset(
        (order[i], order[j])
        for i in range(len(order))
        for j in range(i + 1, len(order))
    )


def extends(order: Sequence[int], pairs: Iterable[Pair]) -> bool:
    pos = position_map(order)
    return all(pos[a] < pos[b] for a, b in pairs)


def restrict_order(order: Sequence[int], subset: Iterable[int]) -> Order:
    keep = set(subset)
    return tuple(x for x in order if x in keep)


def restrict_pairs(pairs: Iterable[Pair], subset: Iterable[int]) -> frozenset[Pair]:
    keep = set(subset)
    return frozenset((a, b) for a, b in pairs if a in keep and b in keep)


def cut(order: Sequence[int], x: int) -> Order:
    """The strict initial segment of the order below x, with its order."""
    if x not in order:
        raise ValueError(f"{x} is not in the ground set")
    return tuple(order)[: order.index(x)]


def below(l1: Sequence[int], l2: Sequence[int], ref: Sequence[int]) -> bool:
    """True iff l1 precedes l2: enumerations compared lexicographically with
    elements ranked by the reference order."""
    if set(l1) != set(ref) or set(l2) != set(ref):
        raise ValueError("orders must share the ground set")
    pos = position_map(ref)
    return [pos[x] for x in l1] < [pos[x] for x in l2]


def below_by_cuts(l1: Sequence[int], l2: Sequence[int], ref: Sequence[int]) -> bool:
    """Cut-based characterization of `below`: some literally equal pair of
    cuts (l1)_x = (l2)_y with x before y in the reference.  Cross-check only.
    """
    if set(l1) != set(ref) or set(l2) != set(ref):
        raise ValueError("orders must share the ground set")
    pos = position_map(ref)
    l1 = tuple(l1)
    l2 = tuple(l2)
    for x in l1:
        cx = cut(l1, x)
        for y in l2:
            if cx == cut(l2, y) and pos[x] < pos[y]:
                return True
    return False


def linear_extensions(
    ground: Sequence[int], pairs: Iterable[Pair]
) -> Iterator[Order]:
    """All linear orders on ground extending the given strict pairs.

    Generates permutations prefix-first, skipping any prefix that places an
    element before one of its predecessors.
    """
    ground = list(ground)
    preds: dict[int, set[int]] = {x: set() for x in ground}
    for a, b in pairs:
        preds[b].add(a)
    placed: list[int] = []
    placed_set: set[int] = set()

    def extend() -> Iterator[Order]:
        if len(placed) == len(ground):
            yield tuple(placed)
            return
        for x in ground:
            if x not in placed_set and preds[x] <= placed_set:
                placed.append(x)
                placed_set.add(x)
                yield from extend()
                placed.pop()
                placed_set.remove(x)

    return extend()


@dataclass(frozen=True)
class OrderedExtensionSpace:
    """A set of linear orders on one ground set, sorted by `below` relative
    to a reference order.

    With a partial order present the members are exactly its linear
    extensions and the reference (which must be one of them) sits at index 0.
    """

    reference: Order
    members: tuple[Order, ...]
    partial_order: frozenset[Pair] | None = None

    def __post_init__(self):
        pos = position_map(self.reference)
        keys = [tuple(pos[x] for x in mem) for mem in self.members]
        if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
            raise ValueError("members must be strictly below-sorted")
        for mem in self.members:
            if set(mem) != set(self.reference) or len(mem) != len(self.reference):
                raise ValueError("member is not an order on the ground set")
            if self.partial_order is not None and not extends(mem, self.partial_order):
                raise ValueError("member does not extend the partial order")

    @property
    def ground(self) -> Order:
        return tuple(sorted(self.reference))

    def __len__(self) -> int:
        return len(self.members)

    def index_of(self, member: Sequence[int]) -> int:
        try:
            return self.members.index(tuple(member))
        except ValueError:
            raise ValueError("order is not a member of the space") from None

    def anchor_indices(self, orders: Sequence[Sequence[int]]) -> tuple[int, ...]:
        """Positions of the given member orders, for use as anchor sequences."""
        return tuple(self.index_of(o) for o in orders)


def sort_by_below(orders: Iterable[Sequence[int]], ref: Sequence[int]) -> list[Order]:
    pos = position_map(ref)
    return sorted(
        (tuple(o) for o in orders), key=lambda o: tuple(pos[x] for x in o)
    )


def extension_space(
    reference: Sequence[int], pairs: Iterable[Pair] | None = None
) -> OrderedExtensionSpace:
    """The space of all linear orders on the reference's ground set, or of
    all linear extensions of the given partial order, below-sorted."""
    reference = tuple(reference)
    if pairs is None:
        members = linear_extensions(sorted(reference), ())
        partial = None
    else:
        partial = frozenset(pairs)
        if not extends(reference, partial):
            raise ValueError("reference order does not extend the partial order")
        members = linear_extensions(sorted(reference), partial)
    return OrderedExtensionSpace(
        reference, tuple(sort_by_below(members, reference)), partial
    )


def ordered_subspace(
    reference: Sequence[int], members: Iterable[Sequence[int]]
) -> OrderedExtensionSpace:
    """An explicit subset of lin_reference, below-sorted.  The reference need
    not belong to it."""
    reference = tuple(reference)
    dedup = {tuple(m) for m in members}
    return OrderedExtensionSpace(reference, tuple(sort_by_below(dedup, reference)))


def res_restriction(
    space: OrderedExtensionSpace, subset: Iterable[int]
) -> OrderedExtensionSpace:
    """The extension space the restriction map lands in."""
    subset = sorted(subset)
    ref = restrict_order(space.reference, subset)
    if space.partial_order is None:
        return extension_space(ref)
    return extension_space(ref, restrict_pairs(space.partial_order, subset))


def res_X(
    space: OrderedExtensionSpace,
    subset: Iterable[int],
    anchors: Sequence[Sequence[int]] | None = None,
) -> AnchoredRigidSurjection:
    """The restriction map L' -> L'|subset between below-sorted spaces, as an
    index map.  It is a rigid surjection and sends each anchor order to its
    restriction (both facts are exercised by the test suite, not assumed).

    anchors: orders in the space serving as the anchored sequence; defaults
    to the reference alone.
    """
    subset = sorted(subset)
    if not set(subset) <= set(space.reference):
        raise ValueError("subset is not contained in the ground set")
    target = res_restriction(space, subset)
    mapping = tuple(
        target.index_of(restrict_order(mem, subset)) for mem in space.members
    )
    if anchors is None:
        anchors = (space.reference,)
    source_anchor = space.anchor_indices(anchors)
    target_anchor = target.anchor_indices(
        [restrict_order(o, subset) for o in anchors]
    )
    return AnchoredRigidSurjection(
        len(space.members), len(target.members), mapping, source_anchor, target_anchor
    )
