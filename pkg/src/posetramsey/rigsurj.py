"""Rigid surjections between finite linear orders, anchored sequences, and the
twisted product.

Finite linear orders are kept in index form: a linear order of size n is the
chain 0 < 1 < ... < n-1, and a map between two orders is a tuple of target
indices.  Ordered sets whose elements are themselves linear orders (extension
spaces) are handled the same way: a map into such a space is a tuple of member
indices; see linext.OrderedExtensionSpace.

A map r: B -> A between linear orders is a rigid surjection when it is onto
and the images of initial segments of B are initial segments of A;
equivalently, scanning B in increasing order, the first occurrences of the
elements of A appear in increasing A-order.  An anchored sequence is a length-p
tuple of positions whose first entry is 0 (the minimum).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterator, Sequence

if TYPE_CHECKING:
    from .linext import OrderedExtensionSpace


def is_rigid_surjection(mapping: Sequence[int], target_size: int) -> bool:
    """True iff mapping is onto 0..target_size-1 and opens targets in order."""
    opened = 0
    for v in mapping:
        if v == opened:
            opened += 1
        elif not 0 <= v < opened:
            return False
    return opened == target_size


def is_anchored(seq: Sequence[int], size: int) -> bool:
    """Anchored sequences start at the minimum of their ambient order."""
    return len(seq) >= 1 and seq[0] == 0 and all(0 <= i < size for i in seq)


@dataclass(frozen=True)
class AnchoredRigidSurjection:
    """A rigid surjection source -> target carrying anchor constraints.

    map[b] is the target index of source position b; map must send the j-th
    source anchor to the j-th target anchor.
    """

    source_size: int
    target_size: int
    map: tuple[int, ...]
    source_anchor: tuple[int, ...] = (0,)
    target_anchor: tuple[int, ...] = (0,)

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        object.__setattr__(self, "source_anchor", tuple(self.source_anchor))
        object.__setattr__(self, "target_anchor", tuple(self.target_anchor))
        if len(self.map) != self.source_size:
            raise ValueError("map length does not match source size")
        if not is_rigid_surjection(self.map, self.target_size):
            raise ValueError("map is not a rigid surjection")
        if len(self.source_anchor) != len(self.target_anchor):
            raise ValueError("anchor sequences differ in length")
        if not is_anchored(self.source_anchor, self.source_size):
            raise ValueError("source anchor sequence is not anchored")
        if not is_anchored(self.target_anchor, self.target_size):
            raise ValueError("target anchor sequence is not anchored")
        for b, a in zip(self.source_anchor, self.target_anchor):
            if self.map[b] != a:
                raise ValueError("map violates anchor constraint")

    @property
    def p(self) -> int:
        return len(self.source_anchor)

    def __call__(self, b: int) -> int:
        return self.map[b]

    def to_dict(self) -> dict:
        return {
            "map": list(self.map),
            "source_anchor": list(self.source_anchor),
            "target_anchor": list(self.target_anchor),
        }


def identity_rs(size: int, anchor: Sequence[int] = (0,)) -> AnchoredRigidSurjection:
    anchor = tuple(anchor)
    return AnchoredRigidSurjection(size, size, tuple(range(size)), anchor, anchor)


def enumerate_rs(
    source_size: int,
    target_size: int,
    source_anchor: Sequence[int] = (0,),
    target_anchor: Sequence[int] = (0,),
) -> list[AnchoredRigidSurjection]:
    """All anchored rigid surjections, in lexicographic order of their maps.

    Generates exactly the rigid maps: at each source position either reuse an
    already-opened target value or open the next one, pruned so the remaining
    positions can still open all remaining targets and so anchors are hit.
    Empty when target_size > source_size.
    """
    source_anchor = tuple(source_anchor)
    target_anchor = tuple(target_anchor)
    if not is_anchored(source_anchor, source_size) and source_size > 0:
        raise ValueError("source anchor sequence is not anchored")
    if not is_anchored(target_anchor, target_size) and target_size > 0:
        raise ValueError("target anchor sequence is not anchored")
    if len(source_anchor) != len(target_anchor):
        raise ValueError("anchor sequences differ in length")
    anchor_at = dict(zip(source_anchor, target_anchor))
    if len(anchor_at) != len(set(source_anchor)) or any(
        anchor_at[b] != a for b, a in zip(source_anchor, target_anchor)
    ):
        # the same source position anchored to two different targets
        return []
    if target_size > source_size or target_size == 0:
        return []

    out: list[AnchoredRigidSurjection] = []
    prefix = [0] * source_size

    def extend(pos: int, opened: int) -> None:
        if pos == source_size:
            if opened == target_size:
                out.append(
                    AnchoredRigidSurjection(
                        source_size, target_size, tuple(prefix),
                        source_anchor, target_anchor,
                    )
                )
            return
        if target_size - opened > source_size - pos:
            return
        forced = anchor_at.get(pos)
        if forced is not None:
            if forced < opened:
                choices: Sequence[int] = (forced,)
            elif forced == opened:
                choices = (forced,)
            else:
                return
        else:
            choices = range(min(opened + 1, target_size))
        for v in choices:
            prefix[pos] = v
            extend(pos + 1, opened + 1 if v == opened else opened)

    extend(0, 0)
    return out


def compose(
    r: AnchoredRigidSurjection, t: AnchoredRigidSurjection
) -> AnchoredRigidSurjection:
    """r after t; anchors must chain (t's targets are r's sources)."""
    if t.target_size != r.source_size:
        raise ValueError("composition size mismatch")
    if t.target_anchor != r.source_anchor:
        raise ValueError("composition anchor mismatch")
    return AnchoredRigidSurjection(
        t.source_size,
        r.target_size,
        tuple(r.map[v] for v in t.map),
        t.source_anchor,
        r.target_anchor,
    )


def divide(
    s: AnchoredRigidSurjection, t: AnchoredRigidSurjection
) -> AnchoredRigidSurjection | None:
    """The unique r with s = r . t, or None.

    s and t share a source; since t is onto, r is determined on fibers of t
    and exists iff s is constant on each fiber and the induced map is a rigid
    surjection honoring the anchors.
    """
    if s.source_size != t.source_size:
        raise ValueError("divide requires a common source")
    if s.source_anchor != t.source_anchor:
        raise ValueError("divide requires matching source anchors")
    induced = [-1] * t.target_size
    for sv, tv in zip(s.map, t.map):
        if induced[tv] == -1:
            induced[tv] = sv
        elif induced[tv] != sv:
            return None
    try:
        return AnchoredRigidSurjection(
            t.target_size,
            s.target_size,
            tuple(induced),
            t.target_anchor,
            s.target_anchor,
        )
    except ValueError:
        return None


@dataclass(frozen=True)
class SetTuple:
    """The (T_0, ..., T_{m-1}, t) objects: finite subsets of a linearly
    ordered carrier plus an anchored rigid surjection.

    sets are stored sorted; rs maps into `space`, whose members interpret the
    rs values as actual linear orders when transporting sets through the
    coordinate isomorphisms.
    """

    sets: tuple[tuple[int, ...], ...]
    rs: AnchoredRigidSurjection
    space: "OrderedExtensionSpace"

    def __post_init__(self):
        object.__setattr__(
            self, "sets", tuple(tuple(sorted(s)) for s in self.sets)
        )
        sizes = {len(s) for s in self.sets}
        if len(sizes) > 1:
            raise ValueError("sets must share one cardinality")
        for s in self.sets:
            if len(set(s)) != len(s):
                raise ValueError("sets must not repeat elements")
        if self.rs.target_size != len(self.space.members):
            raise ValueError("rs target does not match the carried space")

    @property
    def set_size(self) -> int:
        return len(self.sets[0]) if self.sets else 0

    def order_at(self, i: int) -> tuple[int, ...]:
        """The linear order the rs assigns to coordinate i."""
        return self.space.members[self.rs.map[i]]

    def to_dict(self) -> dict:
        return {"sets": [list(s) for s in self.sets], "rs": self.rs.to_dict()}


def ll(sigma: SetTuple, tau: SetTuple) -> bool:
    """The componentwise-inclusion-plus-divisibility relation on tuples.

    sigma and tau must share the frame (m and the source anchors of their
    maps); their maps may target different spaces.
    """
    if len(sigma.sets) != len(tau.sets):
        raise ValueError("tuple dimension mismatch")
    if sigma.rs.source_size != tau.rs.source_size:
        raise ValueError("rigid-surjection source mismatch")
    if sigma.rs.source_anchor != tau.rs.source_anchor:
        raise ValueError("anchor frame mismatch")
    for s, t in zip(sigma.sets, tau.sets):
        if not set(s) <= set(t):
            return False
    return divide(sigma.rs, tau.rs) is not None


def coordinate_isomorphism(
    order: Sequence[int], target_set: Sequence[int]
) -> dict[int, int]:
    """The unique isomorphism from (ground, order) onto target_set with <."""
    if len(order) != len(target_set):
        raise ValueError("isomorphism requires equal cardinalities")
    return dict(zip(order, sorted(target_set)))


def twisted_compose(tau: SetTuple, sigma: SetTuple) -> SetTuple:
    """The twisted product: transport sigma's sets through tau's coordinate
    isomorphisms and compose the rigid surjections.

    tau's rs picks a linear order tau.order_at(i) on the ground set Y of
    tau.space for every coordinate; sigma's sets must be subsets of Y and
    sigma's rs must start where tau's rs lands.
    """
    m = len(tau.sets)
    if tau.rs.source_size != m:
        raise ValueError("tau is not an m-coordinate tuple")
    if len(sigma.sets) != m:
        raise ValueError("tuple dimension mismatch")
    if sigma.rs.source_size != tau.rs.target_size:
        raise ValueError("rigid surjections do not chain")
    ground = set(tau.space.ground)
    y_size = len(tau.space.ground)
    new_sets = []
    for i in range(m):
        if len(tau.sets[i]) != y_size:
            raise ValueError("tau sets must have the carrier-order size")
        s_i = sigma.sets[i]
        if not set(s_i) <= ground:
            raise ValueError("sigma sets must live inside the carrier ground set")
        iso = coordinate_isomorphism(tau.order_at(i), tau.sets[i])
        new_sets.append(tuple(sorted(iso[y] for y in s_i)))
    return SetTuple(tuple(new_sets), compose(sigma.rs, tau.rs), sigma.space)


def iter_set_tuples(
    carrier: Sequence[int], set_size: int, m: int,
    rs_list: Sequence[AnchoredRigidSurjection], space: "OrderedExtensionSpace",
) -> Iterator[SetTuple]:
    """All (sets, rs) tuples over a carrier, in canonical order: product of
    k-subsets (lexicographic) outermost, rs list innermost."""
    from itertools import product

    subsets = list(combinations(sorted(carrier), set_size))
    for sets in product(subsets, repeat=m):
        for rs in rs_list:
            yield SetTuple(tuple(sets), rs, space)
