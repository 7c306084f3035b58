"""Concrete fusion systems.

Four families are provided:

* duals of discrete groups (free products of ``Z`` and ``Z/m`` factors, or
  ``Z^d``): fusion is group multiplication on reduced words;
* ``AoSystem`` (free orthogonal type): integer labels ``r_k`` with the
  step-2 interval rule of the 2x2 unitary group;
* ``AutSystem`` (quantum automorphism type): integer labels ``s_k`` with
  the step-1 interval rule of the rotation group in 3 dimensions;
* ``AuSystem`` (free unitary type): labels are words over ``{a, b}`` with
  the free cancellation rule, where ``bar`` reverses a word and swaps the
  two letters.

Label wire formats: ``r<k>`` (k >= 1), ``s<k>`` (k >= 0), plain ``a/b``
words with ``e`` for the empty word, and ``g1 g2^-1``-style reduced group
words.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .core import (
    FusionElement,
    FusionError,
    FusionSystem,
    InvalidLabelError,
    IrrLabel,
)

Letter = tuple[int, int]          # (factor index, exponent)
Word = tuple[Letter, ...]


# ---------------------------------------------------------------------------
# group duals
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_SYLLABLE_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


class GroupDualSystem(FusionSystem):
    """Dual of a free product of cyclic groups.

    ``factors`` is a sequence with one entry per free factor: ``None`` for
    ``Z`` and an integer ``m >= 2`` for ``Z/m``.  Labels are reduced words,
    stored as tuples of ``(factor, exponent)`` syllables with nonzero
    exponents (``1..m-1`` for finite factors) and no two consecutive
    syllables in the same factor.  All irreducibles have dimension 1 and
    fusion is word concatenation followed by reduction.
    """

    def __init__(self, factors: Sequence[int | None], names: Sequence[str] | None = None):
        factors = tuple(factors)
        if not factors:
            raise FusionError("a group dual needs at least one factor")
        for m in factors:
            if m is not None and (not isinstance(m, int) or m < 2):
                raise FusionError(f"cyclic factor order must be None or an int >= 2, got {m!r}")
        if names is None:
            names = tuple(f"g{i + 1}" for i in range(len(factors)))
        else:
            names = tuple(names)
            if len(names) != len(factors):
                raise FusionError("one generator name per factor required")
            for nm in names:
                if not _NAME_RE.match(nm) or nm == "e":
                    raise FusionError(f"bad generator name {nm!r}")
            if len(set(names)) != len(names):
                raise FusionError("generator names must be distinct")
        desc = ",".join("Z" if m is None else f"Z/{m}" for m in factors)
        super().__init__(f"group_dual({desc};{','.join(names)})")
        self.factors = factors
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}
        self._unit = IrrLabel(self.family_id, ())

    # word algebra ----------------------------------------------------------

    def _norm_exp(self, factor: int, e: int) -> int:
        m = self.factors[factor]
        return e if m is None else e % m

    def reduce_word(self, letters: Iterable[Letter]) -> Word:
        out: list[Letter] = []
        for f, e in letters:
            e = self._norm_exp(f, e)
            if e == 0:
                continue
            if out and out[-1][0] == f:
                _, e0 = out.pop()
                e = self._norm_exp(f, e0 + e)
                if e == 0:
                    continue
            out.append((f, e))
        return tuple(out)

    def inverse_word(self, w: Word) -> Word:
        return self.reduce_word((f, -e) for f, e in reversed(w))

    def word(self, letters: Iterable[Letter]) -> IrrLabel:
        return IrrLabel(self.family_id, self.reduce_word(letters))

    def generators(self) -> list[IrrLabel]:
        return [self.word([(i, 1)]) for i in range(len(self.factors))]

    def letter_length(self, w: Word) -> int:
        """Syllable-tree depth: |exponent| for Z syllables, 1 for Z/m ones."""
        total = 0
        for f, e in w:
            total += abs(e) if self.factors[f] is None else 1
        return total

    # the normal-form prefix tree (used by metric oracles and set calculus)

    def children(self, w: Word) -> list[Word]:
        out: list[Word] = []
        last = w[-1][0] if w else None
        for i, m in enumerate(self.factors):
            if i == last:
                if m is None:
                    f, e = w[-1]
                    step = 1 if e > 0 else -1
                    out.append(w[:-1] + ((f, e + step),))
            elif m is None:
                out.append(w + ((i, 1),))
                out.append(w + ((i, -1),))
            else:
                out.extend(w + ((i, e),) for e in range(1, m))
        return out

    def extends(self, w: Word, p: Word) -> bool:
        """Whether the normal-form prefix tree path to ``w`` passes ``p``."""
        if not p:
            return True
        if len(w) < len(p):
            return False
        if w[: len(p) - 1] != p[: len(p) - 1]:
            return False
        (fw, ew), (fp, ep) = w[len(p) - 1], p[-1]
        if fw != fp:
            return False
        if self.factors[fp] is None:
            return (ew > 0) == (ep > 0) and abs(ew) >= abs(ep)
        return ew == ep

    def descend(self, w: Word, depth: int) -> tuple[list[Word], list[Word]]:
        """All strict tree extensions of ``w``: (interior at depth < k, frontier at k)."""
        interior: list[Word] = []
        frontier: list[Word] = []
        layer = [w]
        for step in range(depth):
            nxt: list[Word] = []
            for node in layer:
                nxt.extend(self.children(node))
            if step + 1 == depth:
                frontier = nxt
            else:
                interior.extend(nxt)
            layer = nxt
        return interior, frontier

    # fusion rules ------------------------------------------------------------

    def validate_payload(self, payload) -> Word:
        if not isinstance(payload, tuple):
            raise InvalidLabelError(f"group word payload must be a tuple, got {payload!r}")
        for item in payload:
            if (not isinstance(item, tuple) or len(item) != 2
                    or not isinstance(item[0], int) or not isinstance(item[1], int)):
                raise InvalidLabelError(f"bad syllable {item!r}")
            f, _ = item
            if not 0 <= f < len(self.factors):
                raise InvalidLabelError(f"factor index {f} out of range")
        if self.reduce_word(payload) != payload:
            raise InvalidLabelError(f"group word {payload!r} is not reduced")
        return payload

    def _tensor_irr(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        return FusionElement.from_label(self.word(a.payload + b.payload))

    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        return IrrLabel(self.family_id, self.inverse_word(a.payload))

    def dim_irr(self, a: IrrLabel) -> int:
        return 1

    def sort_key(self, label: IrrLabel):
        w = label.payload
        return (self.letter_length(w), len(w), w)

    # serialization -------------------------------------------------------------

    def format_label(self, a: IrrLabel) -> str:
        if not a.payload:
            return "e"
        bits = []
        for f, e in a.payload:
            bits.append(self.names[f] if e == 1 else f"{self.names[f]}^{e}")
        return " ".join(bits)

    def parse_label(self, text: str) -> IrrLabel:
        text = text.strip()
        if text == "e":
            return self._unit
        letters: list[Letter] = []
        for tok in text.split():
            m = _SYLLABLE_RE.match(tok)
            if not m or m.group(1) not in self._index:
                raise InvalidLabelError(f"bad group word syllable {tok!r}")
            exp = int(m.group(2)) if m.group(2) is not None else 1
            letters.append((self._index[m.group(1)], exp))
        return self.word(letters)


class ZdDualSystem(FusionSystem):
    """Dual of ``Z^d``: labels are integer vectors, fusion is addition."""

    def __init__(self, d: int, names: Sequence[str] | None = None):
        if not isinstance(d, int) or d < 1:
            raise FusionError(f"rank must be a positive integer, got {d!r}")
        if names is None:
            names = tuple(f"g{i + 1}" for i in range(d))
        else:
            names = tuple(names)
            if len(names) != d:
                raise FusionError("one generator name per coordinate required")
        super().__init__(f"group_dual(Z^{d};{','.join(names)})")
        self.d = d
        self.names = names
        self._index = {nm: i for i, nm in enumerate(names)}
        self._unit = IrrLabel(self.family_id, (0,) * d)

    def vector(self, v: Sequence[int]) -> IrrLabel:
        return self.label(tuple(v))

    def generators(self) -> list[IrrLabel]:
        return [self.vector(tuple(1 if j == i else 0 for j in range(self.d)))
                for i in range(self.d)]

    def validate_payload(self, payload) -> tuple[int, ...]:
        if (not isinstance(payload, tuple) or len(payload) != self.d
                or not all(isinstance(c, int) for c in payload)):
            raise InvalidLabelError(f"payload must be a tuple of {self.d} ints, got {payload!r}")
        return payload

    def _tensor_irr(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        return FusionElement.from_label(
            self.vector(tuple(x + y for x, y in zip(a.payload, b.payload))))

    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        return self.vector(tuple(-x for x in a.payload))

    def dim_irr(self, a: IrrLabel) -> int:
        return 1

    def sort_key(self, label: IrrLabel):
        v = label.payload
        return (sum(abs(c) for c in v), v)

    def format_label(self, a: IrrLabel) -> str:
        bits = []
        for i, c in enumerate(a.payload):
            if c == 1:
                bits.append(self.names[i])
            elif c != 0:
                bits.append(f"{self.names[i]}^{c}")
        return " ".join(bits) if bits else "e"

    def parse_label(self, text: str) -> IrrLabel:
        text = text.strip()
        v = [0] * self.d
        if text != "e":
            for tok in text.split():
                m = _SYLLABLE_RE.match(tok)
                if not m or m.group(1) not in self._index:
                    raise InvalidLabelError(f"bad syllable {tok!r}")
                exp = int(m.group(2)) if m.group(2) is not None else 1
                v[self._index[m.group(1)]] += exp
        return self.vector(tuple(v))


# ---------------------------------------------------------------------------
# interval-rule families
# ---------------------------------------------------------------------------

class AoSystem(FusionSystem):
    """Free orthogonal type fusion on labels ``r_k`` (k >= 1, ``r_1`` the unit).

    The tensor rule is the step-2 interval
    ``r_a (x) r_b = r_{|a-b|+1} + r_{|a-b|+3} + ... + r_{a+b-1}``
    and dimensions follow ``d_1 = 1``, ``d_2 = n``,
    ``d_{k+1} = n*d_k - d_{k-1}``.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise FusionError(f"AoSystem needs an integer n >= 2, got {n!r}")
        super().__init__(f"a_o(n={n})")
        self.n = n
        self._dims = [0, 1, n]  # 1-indexed
        self._unit = IrrLabel(self.family_id, 1)

    def r(self, k: int) -> IrrLabel:
        return self.label(k)

    def fundamental(self) -> FusionElement:
        return FusionElement.from_label(self.r(2))

    def validate_payload(self, payload) -> int:
        if not isinstance(payload, int) or isinstance(payload, bool) or payload < 1:
            raise InvalidLabelError(f"label index must be an int >= 1, got {payload!r}")
        return payload

    def _tensor_irr(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        ka, kb = a.payload, b.payload
        return FusionElement(
            ((self.r(c), 1) for c in range(abs(ka - kb) + 1, ka + kb, 2)))

    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        return a

    def dim_irr(self, a: IrrLabel) -> int:
        k = a.payload
        while len(self._dims) <= k:
            self._dims.append(self.n * self._dims[-1] - self._dims[-2])
        return self._dims[k]

    def sort_key(self, label: IrrLabel):
        return label.payload

    def format_label(self, a: IrrLabel) -> str:
        return f"r{a.payload}"

    def parse_label(self, text: str) -> IrrLabel:
        m = re.match(r"^r(\d+)$", text.strip())
        if not m:
            raise InvalidLabelError(f"expected r<k>, got {text!r}")
        return self.r(int(m.group(1)))


class AutSystem(FusionSystem):
    """Quantum automorphism type fusion on labels ``s_k`` (k >= 0).

    The tensor rule is the step-1 interval
    ``s_a (x) s_b = s_{|a-b|} + ... + s_{a+b}``; the fundamental coaction
    element is ``s_0 + s_1`` of dimension ``n``.  Only ``n >= 4`` yields
    this rule; smaller ``n`` (classical symmetric groups) is rejected.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 4:
            raise FusionError(
                f"AutSystem needs an integer n >= 4 (got {n!r}); "
                "n <= 3 is classical symmetric-group fusion, out of scope")
        super().__init__(f"aut(n={n})")
        self.n = n
        self._dims = [1, n - 1]
        self._unit = IrrLabel(self.family_id, 0)

    def s(self, k: int) -> IrrLabel:
        return self.label(k)

    def fundamental(self) -> FusionElement:
        return FusionElement(((self.s(0), 1), (self.s(1), 1)))

    def validate_payload(self, payload) -> int:
        if not isinstance(payload, int) or isinstance(payload, bool) or payload < 0:
            raise InvalidLabelError(f"label index must be an int >= 0, got {payload!r}")
        return payload

    def _tensor_irr(self, a: IrrLabel, b: IrrLabel) -> FusionElement:
        ka, kb = a.payload, b.payload
        return FusionElement(
            ((self.s(c), 1) for c in range(abs(ka - kb), ka + kb + 1)))

    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        return a

    def dim_irr(self, a: IrrLabel) -> int:
        k = a.payload
        while len(self._dims) <= k:
            self._dims.append((self.n - 2) * self._dims[-1] - self._dims[-2])
        return self._dims[k]

    def sort_key(self, label: IrrLabel):
        return label.payload

    def format_label(self, a: IrrLabel) -> str:
        return f"s{a.payload}"

    def parse_label(self, text: str) -> IrrLabel:
        m = re.match(r"^s(\d+)$", text.strip())
        if not m:
            raise InvalidLabelError(f"expected s<k>, got {text!r}")
        return self.s(int(m.group(1)))


# ---------------------------------------------------------------------------
# free unitary type
# ---------------------------------------------------------------------------

def au_bar(w: str) -> str:
    """The involution on words over {a, b}: reverse and swap the letters.

    Extends the generator swap antimultiplicatively, which is the extension
    compatible with conjugation (validated by the unit-multiplicity tests).
    """
    return w[::-1].translate(_AU_SWAP)


_AU_SWAP = str.maketrans("ab", "ba")


class AuSystem(FusionSystem):
    """Free unitary type fusion on words over ``{a, b}``.

    ``a`` is the class of the fundamental, ``b`` of its conjugate; the
    empty word is the unit.  The tensor rule sums over matched
    suffix/prefix cancellations:
    ``r_x (x) r_y = sum over splits x = u.g, y = bar(g).v of r_{u.v}``.
    Dimensions are computed by the memoized recursion
    ``dim(r_{wc}) = n*dim(r_w) - [w ends with bar(c)]*dim(r_{w[:-1]})``,
    which is forced by the fusion rule and the dimension homomorphism.
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise FusionError(f"AuSystem needs an integer n >= 2, got {n!r}")
        super().__init__(f"a_u(n={n})")
        self.n = n
        self._dim_cache: dict[str, int] = {"": 1}
        self._unit = IrrLabel(self.family_id, "")

    def word(self, w: str) -> IrrLabel:
        return self.label(w)

    def fundamental(self) -> FusionElement:
        return FusionElement.from_label(self.word("a"))

    def validate_payload(self, payload) -> str:
        if not isinstance(payload, str) or any(c not in "ab" for c in payload):
            raise InvalidLabelError(f"label must be a word over 'a','b', got {payload!r}")
        return payload

    def _tensor_irr(self, x: IrrLabel, y: IrrLabel) -> FusionElement:
        wx, wy = x.payload, y.payload
        acc: dict[IrrLabel, int] = {}
        for k in range(min(len(wx), len(wy)) + 1):
            if k == 0 or au_bar(wx[len(wx) - k:]) == wy[:k]:
                lab = self.word(wx[: len(wx) - k] + wy[k:])
                acc[lab] = acc.get(lab, 0) + 1
        return FusionElement(acc)

    def conj_irr(self, a: IrrLabel) -> IrrLabel:
        return self.word(au_bar(a.payload))

    def dim_irr(self, a: IrrLabel) -> int:
        return self._dim_word(a.payload)

    def _dim_word(self, w: str) -> int:
        hit = self._dim_cache.get(w)
        if hit is not None:
            return hit
        head, c = w[:-1], w[-1]
        d = self.n * self._dim_word(head)
        if head and head[-1] == au_bar(c):
            d -= self._dim_word(head[:-1])
        self._dim_cache[w] = d
        return d

    def sort_key(self, label: IrrLabel):
        return (len(label.payload), label.payload)

    def format_label(self, a: IrrLabel) -> str:
        return a.payload if a.payload else "e"

    def parse_label(self, text: str) -> IrrLabel:
        text = text.strip()
        return self.word("" if text == "e" else text)


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def fundamental(sys: FusionSystem, generators: Iterable[IrrLabel] | None = None) -> FusionElement:
    """The canonical generating element of a family.

    Interval families and the free unitary family have a distinguished
    fundamental.  For group duals the generating set is the caller's
    choice; by default the full symmetric standard set is used and the
    unit is included, i.e. ``1 + sum over g, g^-1``.
    """
    if isinstance(sys, (AoSystem, AutSystem, AuSystem)):
        if generators is not None:
            raise FusionError("explicit generators are only meaningful for group duals")
        return sys.fundamental()
    if isinstance(sys, (GroupDualSystem, ZdDualSystem)):
        gens = list(generators) if generators is not None else sys.generators()
        seen: dict[IrrLabel, int] = {sys.unit: 1}
        for g in gens:
            sys.check_label(g)
            for lab in (g, sys.conj_irr(g)):
                seen.setdefault(lab, 1)
        return FusionElement(seen)
    raise FusionError(f"no fundamental rule for {sys!r}")


def group_tensor(sys: FusionSystem, g: IrrLabel, h: IrrLabel) -> FusionElement:
    if not isinstance(sys, (GroupDualSystem, ZdDualSystem)):
        raise FusionError("group_tensor needs a group dual")
    sys.check_label(g)
    sys.check_label(h)
    return sys.tensor_pair(g, h)


def ao_tensor(sys: AoSystem, a: IrrLabel | int, b: IrrLabel | int) -> FusionElement:
    a = sys.r(a) if isinstance(a, int) else a
    b = sys.r(b) if isinstance(b, int) else b
    return sys.tensor_pair(a, b)


def ao_dim(sys: AoSystem, k: IrrLabel | int) -> int:
    return sys.dim_irr(sys.r(k) if isinstance(k, int) else k)


def aut_tensor(sys: AutSystem, a: IrrLabel | int, b: IrrLabel | int) -> FusionElement:
    a = sys.s(a) if isinstance(a, int) else a
    b = sys.s(b) if isinstance(b, int) else b
    return sys.tensor_pair(a, b)


def au_tensor(sys: AuSystem, x: IrrLabel | str, y: IrrLabel | str) -> FusionElement:
    x = sys.word(x) if isinstance(x, str) else x
    y = sys.word(y) if isinstance(y, str) else y
    return sys.tensor_pair(x, y)


# ---------------------------------------------------------------------------
# configuration and wire formats
# ---------------------------------------------------------------------------

_FAMILY_KEYS = {
    "group_dual": {"family", "factors"},
    "a_o": {"family", "n"},
    "aut": {"family", "n"},
    "a_u": {"family", "n"},
}
_TOP_LEVEL_EXTRA = {"params", "cache_dir"}


def system_from_config(cfg: dict) -> FusionSystem:
    """Build a system from a family config mapping.

    Accepted shapes::

        {"family": "group_dual", "factors": [{"type": "Z"}, {"type": "Zmod", "m": 3}]}
        {"family": "group_dual", "factors": [{"type": "Zd", "d": 2}]}
        {"family": "a_o", "n": 3} | {"family": "aut", "n": 4} | {"family": "a_u", "n": 2}

    Factors may carry an optional ``"name"``.  Optional top-level keys
    ``params`` and ``cache_dir`` are ignored here (the CLI consumes them);
    any other unknown key is rejected.
    """
    if not isinstance(cfg, dict):
        raise FusionError(f"family config must be a mapping, got {type(cfg).__name__}")
    family = cfg.get("family")
    if family not in _FAMILY_KEYS:
        raise FusionError(f"unknown family {family!r}")
    allowed = _FAMILY_KEYS[family] | _TOP_LEVEL_EXTRA
    unknown = set(cfg) - allowed
    if unknown:
        raise FusionError(f"unknown config keys: {sorted(unknown)}")
    if family == "a_o":
        return AoSystem(_expect_int(cfg, "n"))
    if family == "aut":
        return AutSystem(_expect_int(cfg, "n"))
    if family == "a_u":
        return AuSystem(_expect_int(cfg, "n"))
    factors_cfg = cfg.get("factors")
    if not isinstance(factors_cfg, list) or not factors_cfg:
        raise FusionError("group_dual config needs a non-empty 'factors' list")
    if any(not isinstance(f, dict) for f in factors_cfg):
        raise FusionError("each factor must be a mapping")
    kinds = [f.get("type") for f in factors_cfg]
    if kinds == ["Zd"]:
        f = factors_cfg[0]
        unknown = set(f) - {"type", "d", "names"}
        if unknown:
            raise FusionError(f"unknown factor keys: {sorted(unknown)}")
        return ZdDualSystem(_expect_int(f, "d"), f.get("names"))
    factors: list[int | None] = []
    names: list[str] = []
    for i, f in enumerate(factors_cfg):
        unknown = set(f) - {"type", "m", "name"}
        if unknown:
            raise FusionError(f"unknown factor keys: {sorted(unknown)}")
        kind = f.get("type")
        if kind == "Z":
            factors.append(None)
        elif kind == "Zmod":
            factors.append(_expect_int(f, "m"))
        elif kind == "Zd":
            raise FusionError("a Zd factor must be the only factor")
        else:
            raise FusionError(f"unknown factor type {kind!r}")
        names.append(f.get("name", f"g{i + 1}"))
    return GroupDualSystem(factors, names)


def _expect_int(cfg: dict, key: str) -> int:
    v = cfg.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FusionError(f"config key {key!r} must be an integer, got {v!r}")
    return v


def format_label(sys: FusionSystem, a: IrrLabel) -> str:
    sys.check_label(a)
    return sys.format_label(a)


def parse_label(sys: FusionSystem, text: str) -> IrrLabel:
    return sys.parse_label(text)


def parse_element(sys: FusionSystem, text: str) -> FusionElement:
    """Parse ``"2*r1 + r3"`` / ``"e + g1 + g1^-1"`` into an element."""
    text = text.strip()
    if text in ("", "0"):
        return FusionElement.zero()
    terms: list[tuple[IrrLabel, int]] = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise InvalidLabelError("empty summand in element expression")
        mult = 1
        if "*" in chunk:
            head, chunk = chunk.split("*", 1)
            try:
                mult = int(head.strip())
            except ValueError:
                raise InvalidLabelError(f"bad multiplicity {head!r}") from None
        terms.append((sys.parse_label(chunk.strip()), mult))
    return FusionElement(terms)


def format_element(sys: FusionSystem, x: FusionElement) -> str:
    sys.check_element(x)
    if not x:
        return "0"
    bits = []
    for lab, m in sys.sorted_items(x):
        head = f"{m}*" if m != 1 else ""
        bits.append(head + sys.format_label(lab))
    return " + ".join(bits)


def element_to_json(sys: FusionSystem, x: FusionElement) -> list[dict[str, str]]:
    """Wire format: array of {"label": ..., "mult": decimal string}."""
    sys.check_element(x)
    return [{"label": sys.format_label(lab), "mult": str(m)}
            for lab, m in sys.sorted_items(x)]


def element_from_json(sys: FusionSystem, data: Iterable[dict]) -> FusionElement:
    terms = []
    for item in data:
        terms.append((sys.parse_label(item["label"]), int(item["mult"])))
    return FusionElement(terms)
