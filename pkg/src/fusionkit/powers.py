"""Set calculus on irreducibles: products, involution, paradoxicality witnesses.

The product of two subsets collects every irreducible appearing in some
``a (x) b``.  For group duals this is the pointwise set product of the
group, and infinite subsets are represented exactly as unions of
*cylinders* of the normal-form prefix tree (all reduced words extending a
stated prefix), plus finitely many included words, minus finitely many
excluded ones.  That representation is closed under union, intersection
and complement, so witness conditions of the form ``F o D /\\ D = empty``
and ``r_i o E /\\ r_j o E = empty`` are decided exactly.

Left translation of a cylinder is computed by case analysis on how the
multiplier's tail interacts with the prefix: cancellation can travel along
an integer-exponent ray, and the image is a finite union of cylinders and
words.  Right translation uses a frontier decomposition: deep enough
extensions translate to whole subtrees, the shallow shell is enumerated.
A product of two infinite cylinder sets is everything for nonelementary
free products (both factors can be steered to hit any target); the single
integer-factor case is ray arithmetic, and the order-2 * order-2 case is
refused rather than approximated.

The module is a witness checker and bounded searcher, not a decision
procedure for the paradoxicality property itself: a failed bounded search
proves nothing, and reports say so.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import FamilyMismatchError, FusionError, FusionSystem, IrrLabel
from .families import GroupDualSystem, Word


class UnsupportedSetOperation(FusionError):
    """The requested set operation has no exact finite representation here."""


def _word_key(sys: GroupDualSystem, w: Word):
    return (sys.letter_length(w), len(w), w)


# ---------------------------------------------------------------------------
# the two set representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FiniteIrrSet:
    """An explicit finite set of irreducibles (any family)."""

    system: FusionSystem
    labels: frozenset[IrrLabel]

    def member(self, a: IrrLabel) -> bool:
        return a in self.labels

    def is_empty(self) -> bool:
        return not self.labels


class WordSet:
    """Finitely described subset of a group dual's irreducibles.

    Membership: ``(covered by a cylinder and not excluded) or included``.
    The canonical form keeps cylinder prefixes an antichain, includes
    outside the coverage, excludes inside it.
    """

    __slots__ = ("system", "cylinders", "includes", "excludes")

    def __init__(self, system: GroupDualSystem, cylinders: frozenset[Word],
                 includes: frozenset[Word], excludes: frozenset[Word]):
        self.system = system
        self.cylinders = cylinders
        self.includes = includes
        self.excludes = excludes

    # construction ---------------------------------------------------------

    @classmethod
    def make(cls, sys: GroupDualSystem, cylinders: Iterable[Word] = (),
             includes: Iterable[Word] = (), excludes: Iterable[Word] = ()) -> "WordSet":
        cyls: list[Word] = []
        for p in sorted(set(cylinders), key=lambda w: _word_key(sys, w)):
            if not any(sys.extends(p, q) for q in cyls):
                cyls.append(p)

        def covered(w: Word) -> bool:
            return any(sys.extends(w, q) for q in cyls)

        includes = set(includes)
        inc = frozenset(w for w in includes if not covered(w))
        exc = frozenset(w for w in set(excludes) if covered(w) and w not in includes)
        return cls(sys, frozenset(cyls), inc, exc)

    @classmethod
    def empty(cls, sys: GroupDualSystem) -> "WordSet":
        return cls.make(sys)

    @classmethod
    def full(cls, sys: GroupDualSystem) -> "WordSet":
        return cls.make(sys, cylinders=[()])

    @classmethod
    def finite(cls, sys: GroupDualSystem, labels: Iterable[IrrLabel]) -> "WordSet":
        words = []
        for lab in labels:
            sys.check_label(lab)
            words.append(lab.payload)
        return cls.make(sys, includes=words)

    def labels_of(self, words: Iterable[Word]) -> list[IrrLabel]:
        return [self.system.word(w) for w in words]

    # membership -----------------------------------------------------------

    def _covered(self, w: Word) -> bool:
        return any(self.system.extends(w, q) for q in self.cylinders)

    def member_word(self, w: Word) -> bool:
        if w in self.includes:
            return True
        return self._covered(w) and w not in self.excludes

    def member(self, a: IrrLabel) -> bool:
        self.system.check_label(a)
        return self.member_word(a.payload)

    def is_empty(self) -> bool:
        return not self.cylinders and not self.includes

    def is_finite(self) -> bool:
        return not self.cylinders

    def finite_words(self) -> frozenset[Word]:
        if not self.is_finite():
            raise UnsupportedSetOperation("set is infinite")
        return self.includes

    # boolean algebra --------------------------------------------------------

    def union(self, other: "WordSet") -> "WordSet":
        self._same(other)
        exc = {w for w in self.excludes | other.excludes
               if not self.member_word(w) and not other.member_word(w)}
        return WordSet.make(self.system,
                            self.cylinders | other.cylinders,
                            self.includes | other.includes,
                            exc)

    def intersect(self, other: "WordSet") -> "WordSet":
        self._same(other)
        sys = self.system
        cyls: set[Word] = set()
        for p in self.cylinders:
            for q in other.cylinders:
                if sys.extends(p, q):
                    cyls.add(p)
                elif sys.extends(q, p):
                    cyls.add(q)
        inc = ({w for w in self.includes if other.member_word(w)}
               | {w for w in other.includes if self.member_word(w)})
        exc = self.excludes | other.excludes
        return WordSet.make(sys, cyls, inc, exc)

    def complement(self) -> "WordSet":
        sys = self.system
        cyls_out: list[Word] = []
        words_out: list[Word] = []

        def walk(node: Word) -> None:
            if any(sys.extends(node, q) for q in self.cylinders):
                return  # inside the coverage
            if not any(sys.extends(q, node) for q in self.cylinders):
                cyls_out.append(node)  # whole subtree misses the coverage
                return
            words_out.append(node)
            for c in sys.children(node):
                walk(c)

        walk(())
        inc = (set(words_out) | set(self.excludes)) - set(self.includes)
        return WordSet.make(sys, cyls_out, inc, self.includes)

    def minus(self, other: "WordSet") -> "WordSet":
        return self.intersect(other.complement())

    def is_subset(self, other: "WordSet") -> bool:
        return self.minus(other).is_empty()

    def __eq__(self, other) -> bool:
        if isinstance(other, WordSet):
            return self.is_subset(other) and other.is_subset(self)
        return NotImplemented

    __hash__ = None

    def _same(self, other: "WordSet") -> None:
        if not isinstance(other, WordSet) or other.system is not self.system:
            raise FamilyMismatchError(f"set operands disagree: {self!r} vs {other!r}")

    def __repr__(self) -> str:
        sys = self.system

        def fmt(w: Word) -> str:
            return sys.format_label(sys.word(w))

        bits = [f"Cyl({fmt(p)})"
                for p in sorted(self.cylinders, key=lambda w: _word_key(sys, w))]
        bits += [fmt(w) for w in sorted(self.includes, key=lambda w: _word_key(sys, w))]
        body = " | ".join(bits) if bits else "{}"
        if self.excludes:
            body += " \\ {" + ", ".join(
                fmt(w) for w in sorted(self.excludes, key=lambda w: _word_key(sys, w))) + "}"
        return f"WordSet({body})"


@dataclass(frozen=True, slots=True)
class ConjugatedSet:
    """Lazy elementwise conjugate of an infinite word set.

    Prefix cylinders conjugate to suffix-described sets, which fall outside
    the cylinder representation; membership stays exact through this
    wrapper, but products with it are unsupported.
    """

    base: WordSet

    def member(self, a: IrrLabel) -> bool:
        sys = self.base.system
        return self.base.member(sys.conj_irr(a))

    def is_empty(self) -> bool:
        return self.base.is_empty()


# ---------------------------------------------------------------------------
# translations
# ---------------------------------------------------------------------------

def _cross_children(sys: GroupDualSystem, w: Word) -> list[Word]:
    return [c for c in sys.children(w) if len(c) > len(w)]


def _left_mul_cyl(sys: GroupDualSystem, x: Word, q: Word) -> tuple[set[Word], set[Word]]:
    """Image of ``x . Cyl(q)`` as (cylinder prefixes, single words)."""
    if not q:
        return {()}, set()  # translation permutes the whole tree
    r1 = sys.reduce_word(x + q[:-1])
    f, e = q[-1]
    if not r1 or r1[-1][0] != f:
        return {r1 + ((f, e),)}, set()
    r2, a = r1[:-1], r1[-1][1]
    m = sys.factors[f]
    cyls: set[Word] = set()
    words: set[Word] = set()
    if m is not None:
        me = (a + e) % m
        if me:
            return {r2 + ((f, me),)}, set()
        words.add(r2)
        for c in _cross_children(sys, q):
            h = c[-1][0]
            if r2 and r2[-1][0] == h:
                cc, ww = _left_mul_cyl(sys, x, c)  # cancellation cascades into x
                cyls |= cc
                words |= ww
            else:
                cyls.add(r2 + (c[-1],))
        return cyls, words
    # integer factor: walk the exponent ray until the merged sign stabilizes
    s = 1 if e > 0 else -1
    j = 0
    while True:
        Mj = a + e + j * s
        if Mj != 0 and (Mj > 0) == (s > 0):
            cyls.add(r2 + ((f, Mj),))
            return cyls, words
        qj = q[:-1] + ((f, e + j * s),)
        words.add(r2 if Mj == 0 else r2 + ((f, Mj),))
        for c in _cross_children(sys, qj):
            h, eps = c[-1]
            if Mj != 0:
                cyls.add(r2 + ((f, Mj), (h, eps)))
            elif r2 and r2[-1][0] == h:
                cc, ww = _left_mul_cyl(sys, x, c)
                cyls |= cc
                words |= ww
            else:
                cyls.add(r2 + ((h, eps),))
        j += 1


def _left_translate(sys: GroupDualSystem, x: Word, S: WordSet) -> WordSet:
    cyls: set[Word] = set()
    words: set[Word] = set()
    for q in S.cylinders:
        cc, ww = _left_mul_cyl(sys, x, q)
        cyls |= cc
        words |= ww
    # translation is injective: excluded preimages remove exactly their images
    excl = {sys.reduce_word(x + w) for w in S.excludes}
    words -= excl
    reincluded = {sys.reduce_word(x + w) for w in S.includes}
    return WordSet.make(sys, cyls, words | reincluded, excl - reincluded)


def _right_translate(sys: GroupDualSystem, S: WordSet, x: Word) -> WordSet:
    if x == ():
        return S
    cyls: set[Word] = set()
    words: set[Word] = set()
    lx = sys.letter_length(x)
    deep, shell = lx + 2, 2 * lx + 2
    for q in S.cylinders:
        # extensions at depth >= deep translate to whole subtrees; products
        # from the shallow shell may land anywhere and are enumerated
        shell_interior, _ = sys.descend(q, shell)
        frontier = [d for d in shell_interior if _rel_depth(sys, d, q) == deep]
        cyls.update(frontier)
        for w in [q, *shell_interior]:
            words.add(sys.reduce_word(w + x))
    excl = {sys.reduce_word(w + x) for w in S.excludes}
    words -= excl
    reincluded = {sys.reduce_word(w + x) for w in S.includes}
    return WordSet.make(sys, cyls, words | reincluded, excl - reincluded)


def _rel_depth(sys: GroupDualSystem, w: Word, q: Word) -> int:
    return sys.letter_length(w) - sys.letter_length(q)


def _is_nonelementary(sys: GroupDualSystem) -> bool:
    if len(sys.factors) < 2:
        return False
    return not (len(sys.factors) == 2 and sys.factors[0] == 2 and sys.factors[1] == 2)


def _single_z_ray_product(sys: GroupDualSystem, S: WordSet, T: WordSet) -> WordSet:
    # dual of Z: words are g^k, cylinders are the half-rays {g^(s*k) : k >= a}

    def parts(W: WordSet):
        rays = [(1 if p[0][1] > 0 else -1, abs(p[0][1])) for p in W.cylinders]
        points = {w[0][1] if w else 0 for w in W.includes}
        exc = {w[0][1] if w else 0 for w in W.excludes}
        return rays, points, exc

    def word_at(k: int) -> Word:
        return () if k == 0 else ((0, k),)

    rays_s, pts_s, exc_s = parts(S)
    rays_t, pts_t, exc_t = parts(T)
    out_values: set[int] = set()
    out_rays: set[tuple[int, int]] = set()  # (sign, first magnitude fully reached)

    for (s1, a1), (s2, a2) in itertools.product(rays_s, rays_t):
        if s1 != s2:
            # opposite rays: every integer has infinitely many decompositions
            return WordSet.full(sys)
        margin = a1 + a2 + len(exc_s) + len(exc_t) + 1
        out_rays.add((s1, margin))
        for k in range(a1 + a2, margin):
            if any(s1 * i not in exc_s and s1 * (k - i) not in exc_t
                   for i in range(a1, k - a2 + 1)):
                out_values.add(s1 * k)

    def ray_plus_point(s: int, a: int, exc: set[int], j: int) -> None:
        # {s*k + j : k >= a, s*k not excluded}
        biggest = max((abs(v) for v in exc), default=0)
        k0 = max(a, biggest + abs(j) + 2)
        for k in range(a, k0):
            if s * k not in exc:
                out_values.add(s * k + j)
        out_rays.add((s, abs(s * k0 + j)))

    for (s1, a1) in rays_s:
        for j in pts_t:
            ray_plus_point(s1, a1, exc_s, j)
    for (s2, a2) in rays_t:
        for i in pts_s:
            ray_plus_point(s2, a2, exc_t, i)
    for i in pts_s:
        for j in pts_t:
            out_values.add(i + j)

    cylinders = [word_at(s * a) for s, a in out_rays]
    includes = [word_at(v) for v in out_values]
    return WordSet.make(sys, cylinders, includes)


def set_product(sys: FusionSystem, S, T):
    """``S o T``: all irreducibles contained in some ``a (x) b``."""
    if isinstance(S, FiniteIrrSet) and isinstance(T, FiniteIrrSet):
        out: set[IrrLabel] = set()
        for a in S.labels:
            for b in T.labels:
                out.update(sys.tensor_pair(a, b).support())
        return FiniteIrrSet(sys, frozenset(out))
    if isinstance(S, ConjugatedSet) or isinstance(T, ConjugatedSet):
        raise UnsupportedSetOperation("products with conjugated cylinder sets "
                                      "are not representable; normalize first")
    if not isinstance(sys, GroupDualSystem):
        raise UnsupportedSetOperation("infinite set products need a group dual")
    S = _as_wordset(sys, S)
    T = _as_wordset(sys, T)
    if S.is_finite():
        acc = WordSet.empty(sys)
        for w in sorted(S.finite_words(), key=lambda w: _word_key(sys, w)):
            acc = acc.union(_left_translate(sys, w, T))
        return acc
    if T.is_finite():
        acc = WordSet.empty(sys)
        for w in sorted(T.finite_words(), key=lambda w: _word_key(sys, w)):
            acc = acc.union(_right_translate(sys, S, w))
        return acc
    if _is_nonelementary(sys):
        # two infinite cylinder sets steer onto any target word
        return WordSet.full(sys)
    if len(sys.factors) == 1 and sys.factors[0] is None:
        return _single_z_ray_product(sys, S, T)
    raise UnsupportedSetOperation(
        "products of two infinite cylinder sets are unsupported for this group")


def _as_wordset(sys: GroupDualSystem, S) -> WordSet:
    if isinstance(S, WordSet):
        if S.system is not sys:
            raise FamilyMismatchError("set belongs to a different system")
        return S
    if isinstance(S, FiniteIrrSet):
        return WordSet.finite(sys, S.labels)
    if isinstance(S, (list, tuple, set, frozenset)):
        return WordSet.finite(sys, S)
    raise FusionError(f"not an irreducible set: {S!r}")


def set_conj(sys: FusionSystem, S):
    """Elementwise conjugate of a set of irreducibles."""
    if isinstance(S, FiniteIrrSet):
        return FiniteIrrSet(sys, frozenset(sys.conj_irr(a) for a in S.labels))
    if isinstance(S, ConjugatedSet):
        return S.base
    if isinstance(S, WordSet):
        if S.is_finite():
            return WordSet.make(sys, includes=[sys.inverse_word(w) for w in S.includes])
        return ConjugatedSet(S)
    raise FusionError(f"not an irreducible set: {S!r}")


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class PowersWitness:
    """A finite F avoiding the unit, a partition D | E of the irreducibles,
    and three irreducibles whose E-translates should be pairwise disjoint."""

    F: list[IrrLabel]
    D: object
    E: object
    r1: IrrLabel
    r2: IrrLabel
    r3: IrrLabel
    truncation_radius: int | None = None

    def r_labels(self) -> tuple[IrrLabel, IrrLabel, IrrLabel]:
        return (self.r1, self.r2, self.r3)


@dataclass(slots=True)
class WitnessCheck:
    holds: bool
    exact: bool
    detail: str = ""


def _singleton(sys: FusionSystem, lab: IrrLabel):
    if isinstance(sys, GroupDualSystem):
        return WordSet.finite(sys, [lab])
    return FiniteIrrSet(sys, frozenset([lab]))


def _set_union(sys, A, B):
    if isinstance(A, WordSet):
        return A.union(B)
    return FiniteIrrSet(sys, A.labels | B.labels)


def _set_intersection_empty(sys, A, B) -> bool:
    if isinstance(A, WordSet) and isinstance(B, WordSet):
        return A.intersect(B).is_empty()
    if isinstance(A, FiniteIrrSet) and isinstance(B, FiniteIrrSet):
        return not (A.labels & B.labels)
    fin, other = (A, B) if isinstance(A, FiniteIrrSet) else (B, A)
    return not any(other.member(lab) for lab in fin.labels)


def _coerce_finite(sys: FusionSystem, S) -> FiniteIrrSet:
    if isinstance(S, FiniteIrrSet):
        return S
    if isinstance(S, WordSet) and S.is_finite():
        return FiniteIrrSet(sys, frozenset(S.labels_of(S.finite_words())))
    if isinstance(S, (list, tuple, set, frozenset)):
        return FiniteIrrSet(sys, frozenset(S))
    raise FusionError(f"expected a finite set, got {S!r}")


def check_witness(sys: FusionSystem, w: PowersWitness) -> WitnessCheck:
    """Evaluate both witness conditions; exact only when the partition is.

    Group-dual cylinder descriptions are decided exactly.  Finite D, E can
    only partition a truncated universe; those checks run the same product
    conditions but are flagged ``exact=False``.
    """
    for lab in w.F:
        sys.check_label(lab)
        if lab == sys.unit:
            raise FusionError("F must avoid the unit class")
    details: list[str] = []
    if (isinstance(sys, GroupDualSystem)
            and isinstance(w.D, WordSet) and isinstance(w.E, WordSet)):
        exact = True
        D, E = w.D, w.E
        if not D.intersect(E).is_empty():
            return WitnessCheck(False, True, "D and E overlap")
        if not D.union(E).complement().is_empty():
            return WitnessCheck(False, True, "D and E do not cover all irreducibles")
    else:
        exact = False
        if w.truncation_radius is None:
            raise FusionError("finite witnesses need a truncation_radius")
        from .families import fundamental
        from .geometry import ball
        fund = fundamental(sys)
        gen = sys.unit_element() + fund + sys.conj_element(fund)
        universe = ball(sys, gen, sys.unit, w.truncation_radius)
        D = _coerce_finite(sys, w.D)
        E = _coerce_finite(sys, w.E)
        if D.labels & E.labels:
            return WitnessCheck(False, False, "D and E overlap")
        missing = universe - (D.labels | E.labels)
        if missing:
            return WitnessCheck(
                False, False,
                f"{len(missing)} irreducibles within radius {w.truncation_radius} uncovered")
        details.append(f"partition verified within radius {w.truncation_radius} only")
    FD = None
    for lab in w.F:
        part = set_product(sys, _singleton(sys, lab), D)
        FD = part if FD is None else _set_union(sys, FD, part)
    if FD is not None and not _set_intersection_empty(sys, FD, D):
        return WitnessCheck(False, exact, "F o D meets D")
    if FD is None:
        details.append("F empty: first condition vacuous")
    translates = [set_product(sys, _singleton(sys, r), E) for r in w.r_labels()]
    for (i, A), (j, B) in itertools.combinations(enumerate(translates), 2):
        if not _set_intersection_empty(sys, A, B):
            return WitnessCheck(False, exact, f"r{i + 1} o E meets r{j + 1} o E")
    return WitnessCheck(True, exact, "; ".join(details) if details else "all conditions hold")


def search_witness(sys: FusionSystem, F: Iterable[IrrLabel], budget: int = 2,
                   ) -> PowersWitness | None:
    """Bounded deterministic search over cylinder partitions and r-triples.

    Candidates: D a union of depth-1 cylinders (optionally with the unit),
    E its complement, and r-triples drawn from words of tree depth at most
    ``budget``, in lexicographic candidate order.  The first witness
    passing the exact check wins; ``None`` proves nothing beyond the
    budget.
    """
    if not isinstance(sys, GroupDualSystem):
        raise UnsupportedSetOperation("witness search needs a group-dual family")
    F = list(F)
    for lab in F:
        sys.check_label(lab)
        if lab == sys.unit:
            raise FusionError("F must avoid the unit class")
    letters = sorted(sys.children(()), key=lambda w: _word_key(sys, w))
    interior, frontier = sys.descend((), budget)
    r_pool = sorted({(), *interior, *frontier}, key=lambda w: _word_key(sys, w))
    for mask in range(1, 2 ** len(letters) - 1):
        chosen = [letters[i] for i in range(len(letters)) if mask >> i & 1]
        for unit_in_d in (False, True):
            D = WordSet.make(sys, cylinders=chosen,
                             includes=[()] if unit_in_d else [])
            if any(not _left_translate(sys, lab.payload, D).intersect(D).is_empty()
                   for lab in F):
                continue
            E = D.complement()
            translates = [_left_translate(sys, w, E) for w in r_pool]
            for i, j, k in itertools.combinations(range(len(r_pool)), 3):
                if not translates[i].intersect(translates[j]).is_empty():
                    continue
                if not translates[i].intersect(translates[k]).is_empty():
                    continue
                if not translates[j].intersect(translates[k]).is_empty():
                    continue
                witness = PowersWitness(
                    F=F, D=D, E=E, r1=sys.word(r_pool[i]),
                    r2=sys.word(r_pool[j]), r3=sys.word(r_pool[k]))
                verdict = check_witness(sys, witness)
                if verdict.holds and verdict.exact:
                    return witness
    return None
