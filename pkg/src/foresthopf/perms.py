"""Permutations in word form and their decorated variant.

A permutation sigma of {1..n} is stored as the word (sigma(1),...,sigma(n)).
Composition is (alpha @ beta)(i) = alpha(beta(i)).  A decorated permutation
carries a second row of letters below the word, b_i = ell(sigma(i)), as in
the two-row notation "213;bac"; the decoration of the VALUE v is recovered
as ell(v) = b at the position where v occurs.
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations

from .errors import ParseError
from .words import Word, parse_letters, render_letters


class Perm:
    __slots__ = ("word",)

    def __init__(self, word):
        word = tuple(int(v) for v in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation word: {word}")
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        try:
            return cls(parse_letters(text))
        except (ValueError, ParseError) as exc:
            raise ParseError(f"bad permutation {text!r}") from exc

    @property
    def n(self):
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __call__(self, i):
        return self.word[i - 1]

    def __iter__(self):
        return iter(self.word)

    def inverse(self):
        inv = [0] * len(self.word)
        for pos, v in enumerate(self.word, start=1):
            inv[v - 1] = pos
        return Perm(inv)

    def __matmul__(self, other):
        if len(self.word) != len(other.word):
            raise ValueError("size mismatch in composition")
        return Perm(self.word[v - 1] for v in other.word)

    def tensor(self, other):
        """Block sum: acts as self on {1..k} and shifted other above."""
        k = len(self.word)
        return Perm(self.word + tuple(v + k for v in other.word))

    def is_shuffle(self, k):
        """True if the inverse is increasing on {1..k} and on {k+1..n}."""
        inv = self.inverse().word
        left = inv[:k]
        right = inv[k:]
        return all(a < b for a, b in zip(left, left[1:])) and \
            all(a < b for a, b in zip(right, right[1:]))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.word == other.word

    def __hash__(self):
        return hash(("Perm", self.word))

    def sort_key(self):
        return (len(self.word), self.word)

    def __str__(self):
        if len(self.word) == 0:
            return "()"
        if max(self.word) <= 9:
            return "(" + "".join(str(v) for v in self.word) + ")"
        return "(" + ",".join(str(v) for v in self.word) + ")"

    def __repr__(self):
        return f"Perm({self.word!r})"


def all_perms(n):
    """Sigma_n in lexicographic word order."""
    return [Perm(w) for w in _itertools_permutations(range(1, n + 1))]


def standardize(seq):
    """The unique increasing relabeling of distinct values onto {1..k}."""
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return Perm(ranks[v] for v in seq)


def shuffles(k, l):
    """All (k,l)-shuffles of {1..k+l}, lexicographic.

    zeta is a shuffle iff zeta^{-1} is increasing on both blocks;
    equivalently zeta is determined by the set of positions where the
    values 1..k land, in order.
    """
    if k < 0 or l < 0:
        raise ValueError("k and l must be >= 0")
    n = k + l
    out = []
    from itertools import combinations
    for positions in combinations(range(n), k):
        word = [0] * n
        pos_set = set(positions)
        a = 1
        b = k + 1
        for i in range(n):
            if i in pos_set:
                word[i] = a
                a += 1
            else:
                word[i] = b
                b += 1
        out.append(Perm(word))
    return out


class DecoratedPerm:
    """A permutation with a letter attached to every value.

    Stored as the word plus the bottom display row (bottom[i-1] is the
    letter under sigma(i)).  ell(v), the letter on the value v, is the
    display entry at v's position.
    """

    __slots__ = ("perm", "bottom")

    def __init__(self, perm, bottom):
        if not isinstance(perm, Perm):
            perm = Perm(perm)
        bottom = tuple(int(v) for v in bottom)
        if len(bottom) != len(perm):
            raise ValueError("decoration row length mismatch")
        if any(v < 1 for v in bottom):
            raise ValueError("letters must be positive")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "bottom", bottom)

    def __setattr__(self, name, value):
        raise AttributeError("DecoratedPerm is immutable")

    @classmethod
    def from_ell(cls, perm, ell):
        """Build from the letter-on-value map, ell[v-1] for value v."""
        if not isinstance(perm, Perm):
            perm = Perm(perm)
        ell = tuple(ell)
        return cls(perm, tuple(ell[v - 1] for v in perm.word))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        if ";" not in text:
            raise ParseError(f"expected 'perm;letters', got {text!r}")
        top, bottom = text.split(";", 1)
        try:
            return cls(Perm.parse(top), parse_letters(bottom))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self):
        return len(self.perm)

    def ell(self, v):
        """Letter attached to the value v."""
        return self.bottom[self.perm.inverse()(v) - 1]

    def ell_word(self):
        """All letters by value, (ell(1),...,ell(n))."""
        inv = self.perm.inverse()
        return tuple(self.bottom[inv(v) - 1] for v in range(1, self.n + 1))

    def undecorated(self):
        return self.perm

    def __eq__(self, other):
        return (isinstance(other, DecoratedPerm)
                and self.perm == other.perm and self.bottom == other.bottom)

    def __hash__(self):
        return hash(("DecoratedPerm", self.perm.word, self.bottom))

    def sort_key(self):
        return (self.n, self.perm.word, self.bottom)

    def __str__(self):
        top = str(self.perm)[1:-1]
        return f"({top};{render_letters(self.bottom)})"

    def __repr__(self):
        return f"DecoratedPerm({self.perm!r}, {self.bottom!r})"


def bottom_word(p):
    """The lower row of a decorated permutation, as a Word."""
    return Word(p.bottom)
