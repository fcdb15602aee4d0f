"""Free-group word arithmetic.

A letter is a nonzero integer: ``+i`` is the i-th generator (1-based),
``-i`` its inverse.  Words are stored freely reduced; all operations
return freely reduced results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_letters(letters, n_generators=None):
    for ell in letters:
        if not isinstance(ell, int) or isinstance(ell, bool) or ell == 0:
            raise ValueError(f"bad letter {ell!r}: letters are nonzero integers")
        if n_generators is not None and abs(ell) > n_generators:
            raise ValueError(f"unknown generator index {abs(ell)} (alphabet size {n_generators})")


@dataclass(frozen=True)
class Word:
    """A freely reduced word, as a tuple of signed generator indices."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise ValueError(f"not freely reduced: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        return word_power(self, n)

    def inverse(self) -> "Word":
        return Word(tuple(-ell for ell in reversed(self.letters)))

    def max_index(self) -> int:
        """Largest generator index appearing (0 for the empty word)."""
        return max((abs(ell) for ell in self.letters), default=0)

    def exponent_sum(self, gen: int) -> int:
        return sum(1 if ell == gen else -1 if ell == -gen else 0 for ell in self.letters)


EPSILON = Word()


@dataclass(frozen=True)
class RootDecomposition:
    """Maximal-power structure of a word: input = conjugator * root^exponent * conjugator^-1.

    ``root`` is cyclically reduced and primitive.  For the empty word the
    exponent is 0, a marker for "any power works" (see ``nu_p``).
    """

    root: Word
    exponent: int
    conjugator: Word

    def exact_root(self) -> Word:
        """The word u with u^exponent freely equal to the decomposed word."""
        return self.conjugator * self.root * self.conjugator.inverse()

    def reassemble(self) -> Word:
        return word_power(self.exact_root(), self.exponent) if self.exponent else EPSILON


def reduce(letters, n_generators=None) -> Word:
    """Freely reduce a raw letter sequence.

    Raises ValueError on a zero letter, or on an index beyond
    ``n_generators`` when an alphabet size is given.
    """
    letters = tuple(letters)
    _check_letters(letters, n_generators)
    out: list[int] = []
    for ell in letters:
        if out and out[-1] == -ell:
            out.pop()
        else:
            out.append(ell)
    return Word(tuple(out))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split w = conjugator * core * conjugator^-1 with core cyclically reduced."""
    ls = w.letters
    i, j = 0, len(ls)
    while j - i >= 2 and ls[i] == -ls[j - 1]:
        i += 1
        j -= 1
    return Word(ls[:i]), Word(ls[i:j])


def word_power(w: Word, n: int) -> Word:
    """Reduced n-th power of w (negative n gives inverse powers)."""
    if n == 0 or not w:
        return EPSILON
    if n < 0:
        return word_power(w.inverse(), -n)
    conj, core = cyclic_reduce(w)
    # powers of a cyclically reduced word are plain concatenations
    return reduce(conj.letters + core.letters * n + conj.inverse().letters)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def primitive_root(w: Word) -> RootDecomposition:
    """Decompose w as conjugator * root^m * conjugator^-1 with m maximal.

    A cyclically reduced word of length n equal to a proper power repeats
    a block whose length divides n, so only divisor-length prefixes of the
    cyclic core need testing.
    """
    if not w:
        return RootDecomposition(EPSILON, 0, EPSILON)
    conj, core = cyclic_reduce(w)
    n = len(core)
    for d in _divisors(n):
        block = core.letters[:d]
        if block * (n // d) == core.letters:
            return RootDecomposition(Word(block), n // d, conj)
    raise AssertionError("unreachable: d = n always matches")


def nu_p(w: Word, p: int):
    """Largest k such that w is a p^k-th power in the free group.

    Returns math.inf for the empty word (every power of the identity is
    the identity), else the p-adic valuation of the maximal root exponent.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not w:
        return math.inf
    m = primitive_root(w).exponent
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k
