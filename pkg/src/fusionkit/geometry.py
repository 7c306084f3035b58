"""The generator metric on irreducibles: distances, balls, growth.

A generator is a self-conjugate element containing the unit.  The distance
between irreducibles ``a`` and ``b`` is the least ``n`` with ``b``
contained in ``v^(x)n (x) a``; it is computed by breadth-first search on
the graph whose edges join ``c`` to the support of ``v (x) c``.  Since
``v`` is self-conjugate that adjacency is symmetric, so distance queries
run bidirectional BFS (meet in the middle), which matters for families
with exponential growth.  Frontiers store supports only; multiplicities
are irrelevant to the metric.

Whether the coefficients of ``v`` generate the whole object is not
decidable at this level; searches carry an explicit budget and failure to
reach a target reports budget exhaustion instead of guessing.  Adjacency
lists are cached on the system per generator support, shared across
queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    BudgetExceededError,
    FusionElement,
    FusionError,
    FusionSystem,
    IrrLabel,
)


def validate_generator(sys: FusionSystem, v: FusionElement) -> FusionElement:
    """Check ``1 in v`` and ``v = conj(v)``; return ``v`` unchanged."""
    sys.check_element(v)
    if v.mult(sys.unit) < 1:
        raise FusionError("generator must contain the unit class")
    if sys.conj_element(v) != v:
        raise FusionError("generator must be self-conjugate")
    return v


def _neighbor_fn(sys: FusionSystem, v: FusionElement):
    vs = v.support()
    caches = sys.__dict__.setdefault("_neighbor_caches", {})
    cache: dict[IrrLabel, tuple[IrrLabel, ...]] = caches.setdefault(vs, {})

    def neighbors(c: IrrLabel) -> tuple[IrrLabel, ...]:
        hit = cache.get(c)
        if hit is None:
            acc: set[IrrLabel] = set()
            for g in vs:
                acc.update(sys.tensor_pair(g, c).support())
            hit = tuple(acc)
            cache[c] = hit
        return hit

    return neighbors


def distance(sys: FusionSystem, v: FusionElement, a: IrrLabel, b: IrrLabel,
             budget: int = 64) -> int:
    """The generator metric ``d_v(a, b)``, by bidirectional BFS.

    Raises BudgetExceededError if ``b`` is not reached within ``budget``
    steps (the generator may not generate, or the budget is too small).
    """
    validate_generator(sys, v)
    sys.check_label(a)
    sys.check_label(b)
    if a == b:
        return 0
    neighbors = _neighbor_fn(sys, v)
    visited_a, frontier_a = {a}, {a}
    visited_b, frontier_b = {b}, {b}
    steps = 0
    while steps < budget:
        if not frontier_a and not frontier_b:
            break
        # expand the smaller live frontier by one layer
        if frontier_a and (not frontier_b or len(frontier_a) <= len(frontier_b)):
            visited, frontier, other = visited_a, frontier_a, visited_b
            nxt: set[IrrLabel] = set()
            for c in frontier:
                for nb in neighbors(c):
                    if nb not in visited:
                        visited.add(nb)
                        nxt.add(nb)
            frontier_a = nxt
        else:
            visited, frontier, other = visited_b, frontier_b, visited_a
            nxt = set()
            for c in frontier:
                for nb in neighbors(c):
                    if nb not in visited:
                        visited.add(nb)
                        nxt.add(nb)
            frontier_b = nxt
        steps += 1
        if not nxt.isdisjoint(other):
            return steps
    raise BudgetExceededError(
        f"not reached within budget {budget}: d({a!r}, {b!r})")


def _distances_up_to(sys: FusionSystem, v: FusionElement, center: IrrLabel,
                     r: int) -> dict[IrrLabel, int]:
    validate_generator(sys, v)
    sys.check_label(center)
    if r < 0:
        raise FusionError(f"radius must be >= 0, got {r}")
    neighbors = _neighbor_fn(sys, v)
    dist = {center: 0}
    frontier = [center]
    for layer in range(1, r + 1):
        nxt: list[IrrLabel] = []
        for c in frontier:
            for nb in neighbors(c):
                if nb not in dist:
                    dist[nb] = layer
                    nxt.append(nb)
        if not nxt:
            break
        frontier = nxt
    return dist


def ball(sys: FusionSystem, v: FusionElement, center: IrrLabel, r: int,
         ) -> frozenset[IrrLabel]:
    """All irreducibles at distance <= r from the center."""
    return frozenset(_distances_up_to(sys, v, center, r))


def sphere(sys: FusionSystem, v: FusionElement, center: IrrLabel, r: int,
           ) -> frozenset[IrrLabel]:
    """All irreducibles at distance exactly r from the center."""
    dist = _distances_up_to(sys, v, center, r)
    return frozenset(lab for lab, d in dist.items() if d == r)


def growth_table(sys: FusionSystem, v: FusionElement, center: IrrLabel,
                 rmax: int) -> list[tuple[int, int]]:
    """Rows ``(radius, ball size)`` for radius = 0..rmax."""
    dist = _distances_up_to(sys, v, center, rmax)
    sizes = [0] * (rmax + 1)
    for d in dist.values():
        sizes[d] += 1
    out = []
    total = 0
    for r in range(rmax + 1):
        total += sizes[r]
        out.append((r, total))
    return out


@dataclass(slots=True)
class QuasiIsometryReport:
    """Result of checking ``d_v <= K * d_{v+w}`` on sampled pairs."""

    K: int
    holds: bool
    pairs_checked: int
    max_ratio: float
    failures: list[tuple[IrrLabel, IrrLabel, int, int]] = field(default_factory=list)


def containment_index(sys: FusionSystem, v: FusionElement, w: FusionElement,
                      budget: int = 64) -> int:
    """Least n with ``w`` contained in ``v^(x)n`` (all multiplicities dominated)."""
    sys.check_element(w)
    acc = sys.unit_element()
    for n in range(budget + 1):
        if acc.contains(w):
            return n
        acc = sys.tensor(acc, v)
    raise BudgetExceededError(
        f"not reached within budget {budget}: containment of {w!r}")


def quasi_isometry_check(sys: FusionSystem, v: FusionElement, w: FusionElement,
                         pairs, budget: int = 64) -> QuasiIsometryReport:
    """Verify the comparison constant between the v- and (v+w)-metrics.

    ``K = 1 + n_w`` where ``n_w`` is the containment index of ``w`` in
    powers of ``v``; the inequality ``d_v(a,b) <= K * d_{v+w}(a,b)`` is
    checked on every sampled pair and the largest observed ratio reported.
    """
    validate_generator(sys, v)
    validate_generator(sys, w)
    K = 1 + containment_index(sys, v, w, budget)
    vw = v + w
    holds = True
    max_ratio = 0.0
    checked = 0
    failures: list[tuple[IrrLabel, IrrLabel, int, int]] = []
    for a, b in pairs:
        dv = distance(sys, v, a, b, budget)
        dvw = distance(sys, vw, a, b, budget)
        checked += 1
        if a != b:
            max_ratio = max(max_ratio, dv / dvw)
        if dv > K * dvw:
            holds = False
            failures.append((a, b, dv, dvw))
    return QuasiIsometryReport(K=K, holds=holds, pairs_checked=checked,
                               max_ratio=max_ratio, failures=failures)
