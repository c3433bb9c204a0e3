"""Reduced words in free groups and Cayley ball enumeration.

Words are flat tuples of letters, reduced by a single stack scan.  Balls
are enumerated in a fixed (length, lexicographic) order so that any Gram
matrix built over them is reproducible bit for bit across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import BadInput, CapExceeded

DEFAULT_BALL_CAP = 200_000


class Letter(NamedTuple):
    """A generator a_k (sign +1) or its inverse a_k^-1 (sign -1)."""

    gen: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def sort_key(self) -> tuple[int, int]:
        # a1 < a1^-1 < a2 < a2^-1 < ...
        return (self.gen, 0 if self.sign > 0 else 1)


def _check_letter(letter: Letter) -> Letter:
    gen, sign = letter
    if not isinstance(gen, int) or isinstance(gen, bool) or gen < 1:
        raise BadInput(f"generator index must be a positive integer, got {gen!r}")
    if sign not in (1, -1):
        raise BadInput(f"letter sign must be +1 or -1, got {sign!r}")
    return Letter(gen, sign)


@dataclass(frozen=True)
class Rank:
    """Free group parameter: finite rank r >= 1 (with q = 2r - 1) or infinite.

    ``r`` is None for the infinite-rank group.
    """

    r: Optional[int] = None

    def __post_init__(self):
        if self.r is not None:
            if not isinstance(self.r, int) or isinstance(self.r, bool) or self.r < 1:
                raise BadInput(f"finite rank must be an integer >= 1, got {self.r!r}")

    @staticmethod
    def finite(r: int) -> "Rank":
        if r is None:
            raise BadInput("finite rank requires an integer")
        return Rank(r)

    @staticmethod
    def infinite() -> "Rank":
        return Rank(None)

    @staticmethod
    def parse(text) -> "Rank":
        """Accepts an int, "inf"/"infinity", or a decimal string."""
        if isinstance(text, Rank):
            return text
        if isinstance(text, int) and not isinstance(text, bool):
            return Rank(text)
        if isinstance(text, str):
            t = text.strip().lower()
            if t in ("inf", "infinity", "oo"):
                return Rank.infinite()
            if re.fullmatch(r"[+-]?\d+", t):
                return Rank(int(t))
        raise BadInput(f"cannot parse rank from {text!r}")

    @property
    def is_finite(self) -> bool:
        return self.r is not None

    @property
    def is_infinite(self) -> bool:
        return self.r is None

    @property
    def q(self) -> int:
        """Branching parameter 2r - 1 of the Cayley tree."""
        if self.r is None:
            raise BadInput("q is undefined for infinite rank")
        return 2 * self.r - 1

    def json_value(self):
        return self.r if self.is_finite else "infinity"

    def __str__(self):
        return str(self.r) if self.is_finite else "infinity"


@dataclass(frozen=True)
class Word:
    """A reduced word; the length |x| is the number of letters."""

    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return Word(tuple(l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def sort_key(self):
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = Word()


def reduce(letters: Iterable[Letter]) -> Word:
    """Reduce a letter sequence by cancelling adjacent inverse pairs.

    Single left-to-right stack scan; linear in the input length.
    """
    stack: list[Letter] = []
    for raw in letters:
        letter = _check_letter(Letter(*raw))
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def multiply(x: Word, y: Word) -> Word:
    """Product in the free group; cancels across the junction only."""
    left = list(x.letters)
    right = list(y.letters)
    i = len(left) - 1
    j = 0
    while i >= 0 and j < len(right) and left[i] == right[j].inverse():
        i -= 1
        j += 1
    return Word(tuple(left[: i + 1]) + tuple(right[j:]))


def inverse(x: Word) -> Word:
    return x.inverse()


def sphere_size(rank: Rank, n: int) -> int:
    """Number of words of length exactly n: 1 for n=0, else (q+1) q^(n-1)."""
    if not rank.is_finite:
        raise BadInput("sphere_size requires a finite rank")
    if n < 0:
        raise BadInput(f"sphere index must be >= 0, got {n}")
    if n == 0:
        return 1
    q = rank.q
    return (q + 1) * q ** (n - 1)


def ball_size(rank: Rank, radius: int) -> int:
    return sum(sphere_size(rank, n) for n in range(radius + 1))


def ball(rank: Rank, radius: int, cap: int = DEFAULT_BALL_CAP) -> list[Word]:
    """All reduced words of length <= radius, sorted by (length, lex).

    The size is predicted from the counting formula first; CapExceeded is
    raised before any enumeration work if it would exceed ``cap``.
    """
    if not rank.is_finite:
        raise BadInput("ball enumeration requires a finite rank")
    if radius < 0:
        raise BadInput(f"radius must be >= 0, got {radius}")
    predicted = ball_size(rank, radius)
    if predicted > cap:
        raise CapExceeded(
            f"ball(r={rank.r}, radius={radius}) has {predicted} words, cap is {cap}"
        )
    alphabet = sorted(
        (Letter(g, s) for g in range(1, rank.r + 1) for s in (1, -1)),
        key=Letter.sort_key,
    )
    out = [IDENTITY]
    frontier = [IDENTITY]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            blocked = w.letters[-1].inverse() if w.letters else None
            for letter in alphabet:
                if letter != blocked:
                    nxt.append(Word(w.letters + (letter,)))
        out.extend(nxt)
        frontier = nxt
    out.sort(key=Word.sort_key)
    return out


_TOKEN = re.compile(r"a(\d+)(\^-1)?$")


def parse_word(text: str) -> Word:
    """Parse the "a1 a2^-1" token format; "e" is the identity."""
    tokens = text.split()
    if not tokens:
        raise BadInput("empty word text; use 'e' for the identity")
    letters: list[Letter] = []
    for tok in tokens:
        if tok == "e":
            continue
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise BadInput(f"bad word token {tok!r}; expected a<k>, a<k>^-1, or e")
        gen = int(m.group(1))
        if gen < 1:
            raise BadInput(f"generator index must be >= 1 in token {tok!r}")
        letters.append(Letter(gen, -1 if m.group(2) else 1))
    return reduce(letters)


def format_word(word: Word) -> str:
    if word.is_identity:
        return "e"
    return " ".join(
        f"a{l.gen}" + ("^-1" if l.sign < 0 else "") for l in word.letters
    )
