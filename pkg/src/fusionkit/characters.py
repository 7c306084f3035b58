"""Character star-moments computed through fusion, plus combinatorial oracles.

The moment of a two-letter monomial ``M`` in ``X, X*`` against a pointed
system ``(sys, u)`` is the multiplicity of the unit in the tensor word
obtained by substituting ``X -> u`` and ``X* -> conj(u)``.  Noncrossing
pairing enumeration and the Catalan recurrence provide independent
cross-checks for these counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FusionElement, FusionError, FusionSystem


@dataclass(frozen=True, slots=True)
class StarWord:
    """A finite word in the letters ``X`` and ``X*``.

    ``stars[i]`` is True where the i-th letter is starred.  The empty word
    stands for the constant monomial 1.
    """

    stars: tuple[bool, ...] = ()

    @classmethod
    def from_string(cls, text: str) -> "StarWord":
        stars: list[bool] = []
        for c in text.strip():
            if c == "X":
                stars.append(False)
            elif c == "*":
                if not stars:
                    raise FusionError(f"stray '*' in star word {text!r}")
                if stars[-1]:
                    raise FusionError(f"double star in {text!r}")
                stars[-1] = True
            elif not c.isspace():
                raise FusionError(f"bad character {c!r} in star word {text!r}")
        return cls(tuple(stars))

    @classmethod
    def alternating(cls, k: int) -> "StarWord":
        """The word ``(X X*)^k``."""
        return cls((False, True) * k)

    @classmethod
    def plain(cls, k: int) -> "StarWord":
        """The word ``X^k``."""
        return cls((False,) * k)

    def reversed_star(self) -> "StarWord":
        """Reverse the word and star every letter (the adjoint monomial)."""
        return StarWord(tuple(not s for s in reversed(self.stars)))

    def __len__(self) -> int:
        return len(self.stars)

    def __str__(self) -> str:
        return "".join("X*" if s else "X" for s in self.stars) or "1"


def as_star_word(w: StarWord | str) -> StarWord:
    return StarWord.from_string(w) if isinstance(w, str) else w


def moment(sys: FusionSystem, u: FusionElement, w: StarWord | str) -> int:
    """Multiplicity of the unit in the word ``w`` evaluated at ``(u, conj u)``."""
    w = as_star_word(w)
    sys.check_element(u)
    ubar = sys.conj_element(u)
    acc = sys.unit_element()
    for starred in w.stars:
        acc = sys.tensor(acc, ubar if starred else u)
    return acc.mult(sys.unit)


def moment_sequence(sys: FusionSystem, u: FusionElement, K: int) -> list[int]:
    """Moments of the plain words ``X^l`` for l = 1..K.

    For self-conjugate ``u`` these are the moments of its character; in the
    step-2 interval family all odd entries vanish.
    """
    if K < 1:
        raise FusionError(f"K must be >= 1, got {K}")
    sys.check_element(u)
    out: list[int] = []
    acc = u
    for _ in range(K):
        out.append(acc.mult(sys.unit))
        if len(out) < K:
            acc = sys.tensor(acc, u)
    return out


def noncrossing_pairing_count(w: StarWord | str, kind: str = "self-adjoint") -> int:
    """Number of noncrossing pair partitions of the letter positions.

    ``kind="self-adjoint"`` places no constraint on the paired letters;
    ``kind="alternating"`` requires every pair to join an X with an X*.
    """
    w = as_star_word(w)
    if kind not in ("self-adjoint", "alternating"):
        raise FusionError(f"unknown kind {kind!r}")
    alternating = kind == "alternating"
    stars = w.stars
    memo: dict[tuple[int, int], int] = {}

    def count(i: int, j: int) -> int:
        if i == j:
            return 1
        if (j - i) % 2:
            return 0
        key = (i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for m in range(i + 1, j, 2):
            if alternating and stars[i] == stars[m]:
                continue
            total += count(i + 1, m) * count(m + 1, j)
        memo[key] = total
        return total

    return count(0, len(stars))


def catalan(k: int) -> int:
    """The k-th Catalan number, by the exact convolution recurrence."""
    if k < 0:
        raise FusionError(f"k must be >= 0, got {k}")
    cache = _CATALAN_CACHE
    while len(cache) <= k:
        n = len(cache) - 1
        cache.append(sum(cache[i] * cache[n - i] for i in range(n + 1)))
    return cache[k]


_CATALAN_CACHE = [1]
