"""Finite words over exact-rational alphabets.

A word is an immutable finite sequence of letters; every letter is a
``fractions.Fraction``, so weights and average weights are exact.  The empty
word is a valid value everywhere except where an average weight is required.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError, EmptyWordError, ParseError

LetterLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_letter(value: LetterLike) -> Fraction:
    """Coerce an int, Fraction, or token such as ``"-1/2"`` to an exact letter."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational letter: {value!r}") from exc
    raise ParseError(f"cannot interpret {value!r} as a letter")


class Word:
    """An immutable finite word; supports slicing, hashing, and concatenation.

    Words compare equal iff they have the same letters in the same order.
    ``a + b`` concatenates.  ``w[i:j]`` and :meth:`subword` both give the
    letters ``i .. j-1`` as a new word.
    """

    __slots__ = ("_letters", "_int_letters", "_hash")

    def __init__(self, letters: Iterable[LetterLike] = ()):
        self._letters: tuple[Fraction, ...] = tuple(as_letter(a) for a in letters)
        ints: tuple[int, ...] | None = tuple(
            a.numerator for a in self._letters if a.denominator == 1
        )
        if len(ints) != len(self._letters):
            ints = None
        self._int_letters = ints
        self._hash: int | None = None

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse the shared serialization: plain digit strings, or
        comma-separated rational tokens when any letter is not a digit."""
        text = text.strip()
        if text == "":
            return cls()
        if "," in text:
            return cls(as_letter(tok) for tok in text.split(","))
        if not text.isdigit():
            raise ParseError(
                f"word text must be digits or comma-separated rationals: {text!r}"
            )
        return cls(int(ch) for ch in text)

    @classmethod
    def _from_fractions(cls, letters: tuple[Fraction, ...]) -> "Word":
        w = cls.__new__(cls)
        w._letters = letters
        ints = tuple(a.numerator for a in letters if a.denominator == 1)
        w._int_letters = ints if len(ints) == len(letters) else None
        w._hash = None
        return w

    # -- basic container behaviour ------------------------------------------

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._from_fractions(self._letters[index])
        return self._letters[index]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._letters)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._letters)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word._from_fractions(self._letters + other._letters)

    def __mul__(self, times: int) -> "Word":
        return Word._from_fractions(self._letters * times)

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        """Digit string when every letter is a single digit 0..9, else
        comma-separated exact-rational tokens."""
        if self._int_letters is not None and all(
            0 <= a <= 9 for a in self._int_letters
        ):
            return "".join(str(a) for a in self._int_letters)
        return ",".join(str(a) for a in self._letters)

    # -- weights -------------------------------------------------------------

    @property
    def letters(self) -> tuple[Fraction, ...]:
        return self._letters

    def weight(self) -> Fraction:
        """Sum of the letters; the empty word has weight 0."""
        if self._int_letters is not None:
            return Fraction(sum(self._int_letters))
        return sum(self._letters, _ZERO)

    def average_weight(self) -> Fraction:
        """weight / length; undefined (raises) for the empty word."""
        if not self._letters:
            raise EmptyWordError("the empty word has no average weight")
        return self.weight() / len(self._letters)

    def prefix_sums(self) -> list[Fraction]:
        """Cumulative sums s_1 .. s_n of the letters."""
        out: list[Fraction] = []
        s = _ZERO
        for a in self._letters:
            s += a
            out.append(s)
        return out

    # -- the basic operators -------------------------------------------------

    def subword(self, i: int, j: int) -> "Word":
        """Letters i .. j-1.  Requires 0 <= i <= j <= len; subword(i, i) is empty."""
        if not (0 <= i <= j <= len(self._letters)):
            raise IndexError(f"subword bounds ({i}, {j}) out of range for length {len(self)}")
        return Word._from_fractions(self._letters[i:j])

    def transpose(self) -> "Word":
        """The word read right to left."""
        return Word._from_fractions(self._letters[::-1])

    def conjugate(self) -> "Word":
        """Swap 0 and 1 letterwise; only defined for binary words."""
        if not self.is_binary():
            raise DomainError(f"conjugate needs a binary word, got {self.to_text()!r}")
        return Word._from_fractions(
            tuple(_ONE - a for a in self._letters)
        )

    def reversal(self) -> "Word":
        """Transpose with every letter negated; weight(reversal) == -weight."""
        return Word._from_fractions(tuple(-a for a in self._letters[::-1]))

    def is_binary(self) -> bool:
        if self._int_letters is None:
            return False
        return all(a in (0, 1) for a in self._int_letters)

    def int_letters(self) -> tuple[int, ...] | None:
        """The letters as plain ints when all are integral, else None.

        Fast path used by the scanning code; never exposes rounding."""
        return self._int_letters


def word(text_or_letters: Union[str, Iterable[LetterLike]]) -> Word:
    """Convenience constructor: ``word("0110")``, ``word([1, 0])``, ``word("0,0,-1")``."""
    if isinstance(text_or_letters, str):
        return Word.from_text(text_or_letters)
    return Word(text_or_letters)


def concat(*parts: Word) -> Word:
    """Concatenation of any number of words."""
    letters: tuple[Fraction, ...] = ()
    for p in parts:
        letters += p.letters
    return Word._from_fractions(letters)
