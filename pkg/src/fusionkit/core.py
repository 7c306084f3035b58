"""Family-agnostic fusion semiring arithmetic.

A fusion system describes a semiring whose additive structure is freely
generated by a set of irreducible classes: it bundles the unit class, the
tensor rule on pairs of irreducibles, conjugation and the dimension
function.  Elements are finite maps ``irreducible -> multiplicity`` with
exact (arbitrary precision) non-negative integer multiplicities; the empty
map is the zero element.

All values are immutable.  Tensor products of irreducible pairs are
memoized per system; the cache tolerates concurrent readers and idempotent
concurrent inserts, so operations are safe to call from multiple threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping


class FusionError(Exception):
    """Base class for errors raised by fusion computations."""


class FamilyMismatchError(FusionError):
    """Operands belong to different fusion systems."""


class InvalidLabelError(FusionError):
    """A label payload is malformed or not canonical for its family."""


class BudgetExceededError(FusionError):
    """A bounded search ran out of budget before reaching its target."""


@dataclass(frozen=True, slots=True)
class IrrLabel:
    """An irreducible class, identified by a family id and a canonical payload.

    Payloads are family specific (an integer index, a letter word or a
    reduced group word) and are normalized by the owning system before a
    label is created.  Two labels are equal iff both fields are equal.
    """

    family: str
    payload: Any

    def __repr__(self) -> str:
        return f"IrrLabel({self.family!r}, {self.payload!r})"


class FusionElement:
    """A finite non-negative integer combination of irreducible classes.

    Immutable.  Supports ``+`` (pointwise addition) and multiplication by a
    non-negative integer.  The zero element is the empty combination and is
    compatible with every family.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[IrrLabel, int] | Iterable[tuple[IrrLabel, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IrrLabel, int] = {}
        family = None
        for label, mult in items:
            if not isinstance(label, IrrLabel):
                raise InvalidLabelError(f"not an IrrLabel: {label!r}")
            if not isinstance(mult, int) or isinstance(mult, bool):
                raise FusionError(f"multiplicity must be an int, got {mult!r}")
            if mult < 0:
                raise FusionError(f"negative multiplicity {mult} for {label!r}")
            if mult == 0:
                continue
            if family is None:
                family = label.family
            elif label.family != family:
                raise FamilyMismatchError(
                    f"labels from {family!r} and {label.family!r} in one element")
            acc[label] = acc.get(label, 0) + mult
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("FusionElement is immutable")

    @classmethod
    def zero(cls) -> "FusionElement":
        return cls()

    @classmethod
    def from_label(cls, label: IrrLabel, mult: int = 1) -> "FusionElement":
        return cls(((label, mult),))

    @property
    def terms(self) -> Mapping[IrrLabel, int]:
        return MappingProxyType(self._terms)

    @property
    def family(self) -> str | None:
        """Family id of the labels, or None for the zero element."""
        for label in self._terms:
            return label.family
        return None

    def support(self) -> frozenset[IrrLabel]:
        return frozenset(self._terms)

    def mult(self, label: IrrLabel) -> int:
        return self._terms.get(label, 0)

    __getitem__ = mult

    def items(self) -> Iterator[tuple[IrrLabel, int]]:
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[IrrLabel]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FusionElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "FusionElement":
        if not isinstance(other, FusionElement):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for label, mult in other._terms.items():
            acc[label] = acc.get(label, 0) + mult
        return FusionElement(acc)

    def __radd__(self, other) -> "FusionElement":
        if other == 0:  # allows sum(...) over elements
            return self
        return NotImplemented

    def __mul__(self, other) -> "FusionElement":
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return FusionElement.zero()
            return FusionElement({lab: m * other for lab, m in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def contains(self, other: "FusionElement") -> bool:
        """Whether ``other`` is a subobject: every multiplicity dominated."""
        return all(self.mult(lab) >= m for lab, m in other.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "FusionElement(0)"
        bits = []
        for label, mult in self._terms.items():
            head = f"{mult}*" if mult != 1 else ""
            bits.append(f"{head}{label.payload!r}")
        return "FusionElement(" + " + ".join(bits) + ")"


class FusionSystem(ABC):
    """Descriptor of one fusion family.

    Subclasses implement the irreducible-pair tensor rule, conjugation, the
    dimension function and payload canonicalization.  This base class
    provides the bilinear extension, powers, multiplicities and the pair
    memo cache (optionally backed by an on-disk cache).
    """

    def __init__(self, family_id: str):
        self.family_id = family_id
        self._pair_cache: dict[tuple[IrrLabel, IrrLabel], FusionElement] = {}
        self._disk_cache = None

    # -- family rules -----------------------------------------------------

    @abstractmethod
    def _tensor_irr(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        """Uncached tensor rule on a pair of irreducibles."""

    @abstractmethod
    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        """The conjugate irreducible."""

    @abstractmethod
    def dim_irr(self, a: IrrLabel) -> int:
        """Dimension of an irreducible; a positive integer."""

    @abstractmethod
    def validate_payload(self, payload) -> Any:
        """Return the canonical form of ``payload`` or raise InvalidLabelError."""

    @abstractmethod
    def sort_key(self, label: IrrLabel):
        """A total order on labels, used for deterministic serialization."""

    # -- labels ------------------------------------------------------------

    def label(self, payload) -> IrrLabel:
        return IrrLabel(self.family_id, self.validate_payload(payload))

    @property
    def unit(self) -> IrrLabel:
        return self._unit

    def unit_element(self) -> FusionElement:
        return FusionElement.from_label(self._unit)

    def check_label(self, a: IrrLabel) -> None:
        if not isinstance(a, IrrLabel) or a.family != self.family_id:
            raise FamilyMismatchError(
                f"label {a!r} does not belong to family {self.family_id!r}")

    def check_element(self, x: FusionElement) -> None:
        if not isinstance(x, FusionElement):
            raise FusionError(f"not a FusionElement: {x!r}")
        fam = x.family
        if fam is not None and fam != self.family_id:
            raise FamilyMismatchError(
                f"element of family {fam!r} used with {self.family_id!r}")

    # -- cached pair product ------------------------------------------------

    def tensor_pair(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        key = (a, b)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        if self._disk_cache is not None:
            hit = self._disk_cache.lookup(self, a, b)
            if hit is not None:
                self._pair_cache[key] = hit
                return hit
        result = self._tensor_irr(a, b)
        # idempotent insert: concurrent writers compute identical values
        self._pair_cache[key] = result
        if self._disk_cache is not None:
            self._disk_cache.store(self, a, b, result)
        return result

    def attach_disk_cache(self, cache) -> None:
        self._disk_cache = cache

    # -- semiring operations -------------------------------------------------

    def tensor(self, x: FusionElement, y: FusionElement) -> FusionElement:
        """Bilinear extension of the irreducible tensor rule."""
        self.check_element(x)
        self.check_element(y)
        if not x or not y:
            return FusionElement.zero()
        acc: dict[IrrLabel, int] = {}
        for a, ma in x.items():
            for b, mb in y.items():
                m = ma * mb
                for c, mc in self.tensor_pair(a, b).items():
                    acc[c] = acc.get(c, 0) + m * mc
        return FusionElement(acc)

    def conj_element(self, x: FusionElement) -> FusionElement:
        self.check_element(x)
        return FusionElement({self.conj_irr(a): m for a, m in x.items()})

    def dim(self, x: FusionElement) -> int:
        self.check_element(x)
        return sum(m * self.dim_irr(a) for a, m in x.items())

    def multiplicity(self, c: IrrLabel, x: FusionElement) -> int:
        self.check_element(x)
        return x.mult(c)

    def power(self, x: FusionElement, k: int) -> FusionElement:
        """k-fold tensor power; the 0th power is the unit class."""
        if k < 0:
            raise FusionError(f"negative tensor power {k}")
        self.check_element(x)
        acc = self.unit_element()
        for _ in range(k):
            acc = self.tensor(acc, x)
        return acc

    def sorted_items(self, x: FusionElement) -> list[tuple[IrrLabel, int]]:
        return sorted(x.items(), key=lambda it: self.sort_key(it[0]))

    def fingerprint(self) -> str:
        """Stable identifier of the family, used to key persistent caches."""
        return self.family_id

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.family_id}>"


# Functional spellings of the element operations.

def tensor(sys: FusionSystem, x: FusionElement, y: FusionElement) -> FusionElement:
    return sys.tensor(x, y)


def add(x: FusionElement, y: FusionElement) -> FusionElement:
    """Pointwise multiplicity addition (the semiring sum)."""
    return x + y


def conj_element(sys: FusionSystem, x: FusionElement) -> FusionElement:
    return sys.conj_element(x)


def multiplicity(sys: FusionSystem, c: IrrLabel, x: FusionElement) -> int:
    return sys.multiplicity(c, x)


def element_power(sys: FusionSystem, x: FusionElement, k: int) -> FusionElement:
    return sys.power(x, k)


def dim_element(sys: FusionSystem, x: FusionElement) -> int:
    return sys.dim(x)
