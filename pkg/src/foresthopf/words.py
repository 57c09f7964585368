"""Words over the alphabet {1..d} and their text forms.

A word doubles as the decoration sequence of a trunk tree read root to
leaf, so the same letter conventions are used for decoration arguments
throughout the library: single characters ("abc" or "123", with a = 1),
or a comma-separated list of integers when the alphabet is large.
"""

from __future__ import annotations

from .errors import ParseError


def parse_letters(text):
    """Parse a letter sequence into a tuple of positive integers.

    Accepts "abc" (a = 1, b = 2, ...), "123" (each digit one letter,
    zero excluded), a mix of the two, or "1,2,10" for letters past 9.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        out = []
        for part in text.split(","):
            part = part.strip()
            try:
                v = int(part)
            except ValueError as exc:
                raise ParseError(f"bad letter {part!r} in {text!r}") from exc
            if v < 1:
                raise ParseError(f"letters must be >= 1, got {v}")
            out.append(v)
        return tuple(out)
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if ch.isdigit():
            v = int(ch)
            if v == 0:
                raise ParseError("letter 0 is not allowed")
        elif "a" <= ch <= "z":
            v = ord(ch) - ord("a") + 1
        else:
            raise ParseError(f"bad letter {ch!r} in {text!r}")
        out.append(v)
    return tuple(out)


def render_letters(letters):
    """Inverse of parse_letters, preferring "abc" over comma lists."""
    if not letters:
        return ""
    if max(letters) <= 26:
        return "".join(chr(ord("a") + v - 1) for v in letters)
    return ",".join(str(v) for v in letters)


class Word:
    """A finite sequence of letters in {1..d}; the shuffle-algebra basis."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(int(v) for v in letters)
        if any(v < 1 for v in letters):
            raise ValueError("letters must be positive")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        return cls(parse_letters(text))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other):
        return Word(self.letters + other.letters)

    def reverse(self):
        return Word(self.letters[::-1])

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(("Word", self.letters))

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __str__(self):
        return "(" + render_letters(self.letters) + ")"

    def __repr__(self):
        return f"Word({self.letters!r})"


EMPTY_WORD = Word(())


def all_words(n, d):
    """All words of length n over {1..d}, lexicographic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    words = [()]
    for _ in range(n):
        words = [w + (a,) for w in words for a in range(1, d + 1)]
    return [Word(w) for w in words]
