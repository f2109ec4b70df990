"""Desk-scale search and verification engines.

Every statement verified here has the same shape: a finite family of objects
is d-colored, and the statement holds iff every coloring leaves some
candidate set monochromatic.  Verification is therefore a search for a "bad"
coloring (one breaking every candidate set); None found means the witness
property holds.  Certificates carry either the least bad coloring or an
example candidate, and every counterexample is re-checked by an independent
validator before being emitted.

The true parameters promised by the composed existence proofs are
astronomically large; the engines guard every search with explicit ceilings
and refuse with an error rather than silently degrade.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Sequence

from . import kernel
from .linext import OrderedExtensionSpace
from .rigsurj import (
    AnchoredRigidSurjection,
    SetTuple,
    compose,
    divide,
    enumerate_rs,
    is_anchored,
    iter_set_tuples,
    twisted_compose,
)

WITNESS_HOLDS = "witness-holds"
COUNTEREXAMPLE = "counterexample"

DEFAULT_MAX_COLORINGS = 1 << 22
DEFAULT_MAX_OBJECTS = 200_000
DEFAULT_MAX_GROUND_SIZE = 512


class InfeasibleSearchError(RuntimeError):
    """A search would exceed its configured ceiling; no answer is produced."""


@dataclass(frozen=True)
class RunLimits:
    max_colorings: int = DEFAULT_MAX_COLORINGS
    max_objects: int = DEFAULT_MAX_OBJECTS
    max_ground_size: int = DEFAULT_MAX_GROUND_SIZE

    def __post_init__(self):
        if self.max_colorings < 1 or self.max_objects < 1 or self.max_ground_size < 1:
            raise ValueError("ceilings must be positive")


DEFAULT_LIMITS = RunLimits()


def colorings_within(d: int, num_objects: int, ceiling: int) -> bool:
    """d ** num_objects <= ceiling, without forming the full power."""
    total = 1
    for _ in range(num_objects):
        total *= d
        if total > ceiling:
            return False
    return True


def guard_colorings(d: int, num_objects: int, limits: RunLimits) -> None:
    if num_objects > limits.max_objects:
        raise InfeasibleSearchError(
            f"{num_objects} objects exceed the ceiling of {limits.max_objects}"
        )
    if d > 1 and not colorings_within(d, num_objects, limits.max_colorings):
        raise InfeasibleSearchError(
            f"{d}^{num_objects} colorings exceed the ceiling of "
            f"{limits.max_colorings}"
        )


def guard_count(count: int, what: str, limits: RunLimits) -> None:
    if count > limits.max_objects:
        raise InfeasibleSearchError(
            f"{count} {what} exceed the ceiling of {limits.max_objects}"
        )


@dataclass(frozen=True)
class ColoringCertificate:
    """Outcome of one exhaustive coloring search.

    witness-holds carries an example candidate object (the first one, which
    is monochromatic under the constant coloring); the verdict itself is
    certified by the exhausted search.  counterexample carries the
    lexicographically least bad coloring.
    """

    verdict: str
    d: int
    num_objects: int
    coloring: tuple[int, ...] | None = None
    homogeneous_object: Any = None

    def __post_init__(self):
        if self.verdict not in (WITNESS_HOLDS, COUNTEREXAMPLE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == WITNESS_HOLDS and self.coloring is not None:
            raise ValueError("witness-holds certificates carry no coloring")
        if self.verdict == COUNTEREXAMPLE and (
            self.coloring is None or self.homogeneous_object is not None
        ):
            raise ValueError("counterexample certificates carry only a coloring")

    @property
    def holds(self) -> bool:
        return self.verdict == WITNESS_HOLDS

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "d": self.d,
            "num_objects": self.num_objects,
            "coloring": None if self.coloring is None else list(self.coloring),
            "homogeneous_object": self.homogeneous_object,
        }


@dataclass(frozen=True)
class WitnessParams:
    """The (m, n, anchor sequence) data produced by witness composition.

    n is None when the product stage was infeasible at desk scale; verified
    is False whenever any stage was not machine-checked.  color_count is the
    exact induced color count of the product stage.
    """

    m: int
    n: int | None
    i_anchor: tuple[int, ...]
    verified: bool = True
    color_count: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "i_anchor", tuple(self.i_anchor))
        if not is_anchored(self.i_anchor, self.m):
            raise ValueError("anchor sequence is not anchored in m")

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "i_anchor": list(self.i_anchor),
            "verified": self.verified,
            "color_count": self.color_count,
        }


@dataclass(frozen=True)
class SearchInstance:
    """A coloring-search domain: indexed objects plus candidate index sets.

    candidates[j] describes the j-th candidate (JSON-able); candidate_sets[j]
    lists the object indices it would make monochromatic.
    """

    num_objects: int
    objects: tuple
    candidate_sets: tuple[tuple[int, ...], ...]
    candidates: tuple

    def __post_init__(self):
        if len(self.candidate_sets) != len(self.candidates):
            raise ValueError("candidate payloads and sets must align")


def run_coloring_search(
    instance: SearchInstance,
    d: int,
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
    symmetry: bool = True,
    backend: str | None = None,
) -> ColoringCertificate:
    """Decide whether every d-coloring of the instance admits a monochromatic
    candidate set; exact, exhaustive, and deterministic."""
    if d < 1:
        raise ValueError("need at least one color")
    guard_colorings(d, instance.num_objects, limits)
    guard_count(len(instance.candidate_sets), "candidate sets", limits)

    if any(len(s) < 2 for s in instance.candidate_sets):
        # such a set is monochromatic under every coloring
        return ColoringCertificate(
            WITNESS_HOLDS, d, instance.num_objects,
            homogeneous_object=_payload(instance, 0),
        )
    if not instance.candidate_sets:
        coloring = (0,) * instance.num_objects
        _validate_or_die(coloring, instance)
        return ColoringCertificate(
            COUNTEREXAMPLE, d, instance.num_objects, coloring=coloring
        )

    bad = kernel.find_bad_coloring(
        instance.num_objects, d, instance.candidate_sets,
        symmetry=symmetry, jobs=jobs, backend=backend,
    )
    if bad is None:
        return ColoringCertificate(
            WITNESS_HOLDS, d, instance.num_objects,
            homogeneous_object=_payload(instance, 0),
        )
    _validate_or_die(bad, instance)
    return ColoringCertificate(
        COUNTEREXAMPLE, d, instance.num_objects, coloring=tuple(bad)
    )


def _payload(instance: SearchInstance, j: int):
    return instance.candidates[j] if instance.candidates else None


def _validate_or_die(coloring: Sequence[int], instance: SearchInstance) -> None:
    mono = kernel.check_coloring(coloring, instance.candidate_sets)
    if mono is not None:
        raise AssertionError(
            f"search returned a coloring with monochromatic candidate {mono}; "
            "this is a bug, refusing to emit the certificate"
        )


def validate_counterexample(
    coloring: Sequence[int], candidate_sets: Sequence[Sequence[int]]
) -> bool:
    """Independent re-check: True iff no candidate set is monochromatic."""
    return kernel.check_coloring(coloring, candidate_sets) is None


# -- Product Ramsey ----------------------------------------------------------

def build_product_instance(
    n: int, k: int, l: int, m: int, limits: RunLimits = DEFAULT_LIMITS
) -> SearchInstance:
    """Objects: m-tuples of k-subsets of n.  Candidates: for each m-tuple of
    l-subsets, the componentwise-contained objects."""
    import math

    if not (0 <= k <= l <= n):
        raise ValueError("need k <= l <= n")
    if m < 1:
        raise ValueError("need m >= 1")
    guard_count(math.comb(n, k) ** m, "objects", limits)
    guard_count(math.comb(n, l) ** m, "candidate sets", limits)

    objects = list(product(combinations(range(n), k), repeat=m))
    index = {obj: i for i, obj in enumerate(objects)}
    candidate_sets = []
    candidates = []
    for big in product(combinations(range(n), l), repeat=m):
        members = tuple(
            index[small]
            for small in product(*(combinations(t, k) for t in big))
        )
        candidate_sets.append(tuple(sorted(members)))
        candidates.append({"sets": [list(t) for t in big]})
    return SearchInstance(
        len(objects),
        tuple({"sets": [list(s) for s in obj]} for obj in objects),
        tuple(candidate_sets),
        tuple(candidates),
    )


def verify_product_witness(
    n: int, d: int, k: int, l: int, m: int,
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
    symmetry: bool = True,
    backend: str | None = None,
) -> ColoringCertificate:
    instance = build_product_instance(n, k, l, m, limits)
    return run_coloring_search(instance, d, limits, jobs, symmetry, backend)


@dataclass(frozen=True)
class ProductSearchResult:
    n: int
    certificate: ColoringCertificate
    below_certificate: ColoringCertificate | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "certificate": self.certificate.to_dict(),
            "below_certificate": (
                None if self.below_certificate is None
                else self.below_certificate.to_dict()
            ),
        }


def search_product(
    d: int, k: int, l: int, m: int, n_max: int,
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> ProductSearchResult:
    """Least n <= n_max making the product statement hold, scanning up from
    the trivial lower bound n = l, with the n-1 counterexample kept as the
    minimality trail."""
    previous = None
    for n in range(l, n_max + 1):
        cert = verify_product_witness(n, d, k, l, m, limits, jobs)
        if cert.holds:
            return ProductSearchResult(n, cert, previous)
        previous = cert
    raise InfeasibleSearchError(
        f"no witness n <= {n_max} for d={d}, k={k}, l={l}, m={m}"
    )


# -- Dual Ramsey with anchors -----------------------------------------------

def build_dual_instance(
    m: int,
    i_anchor: Sequence[int],
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    limits: RunLimits = DEFAULT_LIMITS,
) -> SearchInstance:
    """Objects: anchored rigid surjections m -> A.  Candidates: for each
    anchored t: m -> B, its composition set {s . t : s anchored B -> A}."""
    if not (a_size <= b_size <= m):
        raise ValueError("need |A| <= |B| <= m")
    objects = enumerate_rs(m, a_size, i_anchor, a_anchor)
    guard_count(len(objects), "objects", limits)
    index = {rs.map: i for i, rs in enumerate(objects)}
    through = enumerate_rs(b_size, a_size, b_anchor, a_anchor)
    candidate_sets = []
    candidates = []
    ts = enumerate_rs(m, b_size, i_anchor, b_anchor)
    guard_count(len(ts), "candidate sets", limits)
    for t in ts:
        members = sorted({index[compose(s, t).map] for s in through})
        candidate_sets.append(tuple(members))
        candidates.append({"rs": t.to_dict()})
    return SearchInstance(
        len(objects),
        tuple({"rs": rs.to_dict()} for rs in objects),
        tuple(candidate_sets),
        tuple(candidates),
    )


def verify_dual_witness(
    m: int,
    i_anchor: Sequence[int],
    d: int,
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
    symmetry: bool = True,
    backend: str | None = None,
) -> ColoringCertificate:
    instance = build_dual_instance(
        m, i_anchor, a_size, a_anchor, b_size, b_anchor, limits
    )
    return run_coloring_search(instance, d, limits, jobs, symmetry, backend)


@dataclass(frozen=True)
class DualSearchResult:
    m: int
    i_anchor: tuple[int, ...]
    certificate: ColoringCertificate

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "i_anchor": list(self.i_anchor),
            "certificate": self.certificate.to_dict(),
        }


def search_dual(
    d: int,
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    m_max: int,
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> DualSearchResult:
    """Least m (scanning anchored sequences lexicographically within each m)
    making the dual statement hold."""
    p = len(tuple(a_anchor))
    for m in range(b_size, m_max + 1):
        for free in product(range(m), repeat=p - 1):
            i_anchor = (0,) + free
            cert = verify_dual_witness(
                m, i_anchor, d, a_size, a_anchor, b_size, b_anchor, limits, jobs
            )
            if cert.holds:
                return DualSearchResult(m, i_anchor, cert)
    raise InfeasibleSearchError(
        f"no dual witness m <= {m_max} for d={d}, |A|={a_size}, |B|={b_size}"
    )


# -- The composed product statement (cones) ----------------------------------

def build_prop2_instance(
    params: WitnessParams,
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    k: int,
    l: int,
    limits: RunLimits = DEFAULT_LIMITS,
) -> SearchInstance:
    """Objects: (m-tuple of k-subsets of n, anchored rigid surjection m -> A).
    Candidates: the full cone below each (l-subset tuple, t: m -> B) under
    componentwise inclusion plus divisibility."""
    import math

    if params.n is None:
        raise ValueError("params carry no concrete n")
    n, m, i_anchor = params.n, params.m, params.i_anchor
    if not (0 <= k <= l <= n):
        raise ValueError("need k <= l <= n")
    rs_a = enumerate_rs(m, a_size, i_anchor, a_anchor)
    guard_count(math.comb(n, k) ** m * len(rs_a), "objects", limits)
    sets_k = list(product(combinations(range(n), k), repeat=m))
    objects = [(s, rs) for s in sets_k for rs in rs_a]
    index = {obj: i for i, obj in enumerate(objects)}

    ts = enumerate_rs(m, b_size, i_anchor, b_anchor)
    guard_count(math.comb(n, l) ** m * len(ts), "candidate sets", limits)
    candidate_sets = []
    candidates = []
    for big in product(combinations(range(n), l), repeat=m):
        for t in ts:
            cone_rs = [s for s in rs_a if divide(s, t) is not None]
            members = [
                index[(small, s)]
                for small in product(*(combinations(ti, k) for ti in big))
                for s in cone_rs
            ]
            candidate_sets.append(tuple(sorted(members)))
            candidates.append(
                {"sets": [list(ti) for ti in big], "rs": t.to_dict()}
            )
    return SearchInstance(
        len(objects),
        tuple(
            {"sets": [list(si) for si in s], "rs": rs.to_dict()}
            for s, rs in objects
        ),
        tuple(candidate_sets),
        tuple(candidates),
    )


def verify_prop2_witness(
    params: WitnessParams,
    d: int,
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    k: int,
    l: int,
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
    symmetry: bool = True,
    backend: str | None = None,
) -> ColoringCertificate:
    instance = build_prop2_instance(
        params, a_size, a_anchor, b_size, b_anchor, k, l, limits
    )
    return run_coloring_search(instance, d, limits, jobs, symmetry, backend)


def compose_prop2_witness(
    d: int,
    a_size: int,
    a_anchor: Sequence[int],
    b_size: int,
    b_anchor: Sequence[int],
    k: int,
    l: int,
    dual_params: WitnessParams,
    product_n_oracle: Callable[[int, int, int, int], int] | None = None,
    n_max: int = 64,
    limits: RunLimits = DEFAULT_LIMITS,
) -> WitnessParams:
    """Compose a witness the way the existence proof does: take a verified
    dual stage (m, anchors), blow the colors up to d^(number of anchored maps
    m -> A), and ask the product stage for n at that color count.

    When the product stage is infeasible the result keeps the exact color
    count but is flagged unverified with n = None.
    """
    if not dual_params.verified:
        raise ValueError("dual stage parameters are not verified")
    m, i_anchor = dual_params.m, dual_params.i_anchor
    rs_a = enumerate_rs(m, a_size, i_anchor, a_anchor)
    guard_count(len(rs_a), "anchored maps in the color blow-up", limits)
    colors = d ** len(rs_a)
    if product_n_oracle is None:
        def product_n_oracle(cc, kk, ll, mm):
            return search_product(cc, kk, ll, mm, n_max, limits).n

    try:
        n = product_n_oracle(colors, k, l, m)
    except InfeasibleSearchError:
        return WitnessParams(m, None, i_anchor, verified=False, color_count=colors)
    return WitnessParams(m, n, i_anchor, verified=True, color_count=colors)


# -- The twisted-product statement -------------------------------------------

def build_prop5_instance(
    params: WitnessParams,
    a_space: OrderedExtensionSpace,
    a_anchor: Sequence[int],
    b_space: OrderedExtensionSpace,
    b_anchor: Sequence[int],
    limits: RunLimits = DEFAULT_LIMITS,
) -> SearchInstance:
    """Like the cone instance, but candidate sets are generated through the
    twisted product: for each tau over B, the tuples tau . sigma with sigma
    ranging over subset tuples of B's ground set and anchored maps B -> A."""
    import math

    if params.n is None:
        raise ValueError("params carry no concrete n")
    n, m, i_anchor = params.n, params.m, params.i_anchor
    a_size, b_size = len(a_space), len(b_space)
    x_size, y_size = len(a_space.ground), len(b_space.ground)
    if not (x_size <= y_size <= n):
        raise ValueError("need |X| <= |Y| <= n")
    rs_a = enumerate_rs(m, a_size, i_anchor, a_anchor)
    guard_count(math.comb(n, x_size) ** m * len(rs_a), "objects", limits)
    objects = list(iter_set_tuples(range(n), x_size, m, rs_a, a_space))
    index = {obj: i for i, obj in enumerate(objects)}

    ts = enumerate_rs(m, b_size, i_anchor, b_anchor)
    guard_count(math.comb(n, y_size) ** m * len(ts), "candidate sets", limits)
    sigmas = list(
        iter_set_tuples(
            b_space.ground, x_size, m,
            enumerate_rs(b_size, a_size, b_anchor, a_anchor), a_space,
        )
    )
    candidate_sets = []
    candidates = []
    for tau in iter_set_tuples(range(n), y_size, m, ts, b_space):
        members = sorted({index[twisted_compose(tau, sigma)] for sigma in sigmas})
        candidate_sets.append(tuple(members))
        candidates.append(tau.to_dict())
    return SearchInstance(
        len(objects),
        tuple(obj.to_dict() for obj in objects),
        tuple(candidate_sets),
        tuple(candidates),
    )


def verify_prop5_witness(
    params: WitnessParams,
    d: int,
    a_space: OrderedExtensionSpace,
    a_anchor: Sequence[int],
    b_space: OrderedExtensionSpace,
    b_anchor: Sequence[int],
    limits: RunLimits = DEFAULT_LIMITS,
    jobs: int = 1,
    symmetry: bool = True,
    backend: str | None = None,
) -> ColoringCertificate:
    instance = build_prop5_instance(
        params, a_space, a_anchor, b_space, b_anchor, limits
    )
    return run_coloring_search(instance, d, limits, jobs, symmetry, backend)
