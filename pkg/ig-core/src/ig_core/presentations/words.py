# src/ig_core/presentations/words.py

"""Words in a free group and the elementary operations on them.

Letters are stored as ``(generator name, exponent)`` pairs with exponent
``+1`` or ``-1``; the generator objects themselves live on the presentation.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Mapping, Tuple

Letter = Tuple[str, int]


@dataclass(frozen=True)
class Word:
    """An (not necessarily reduced) word over generator names."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for name, exponent in self.letters:
            if exponent not in (1, -1):
                raise ValueError(f"Letter {name!r} has exponent {exponent}, expected +1 or -1.")

    @classmethod
    def empty(cls) -> "Word":
        return cls(())

    @classmethod
    def of(cls, *names: str) -> "Word":
        """Builds the positive word spelling ``names`` in order."""
        return cls(tuple((name, 1) for name in names))

    @classmethod
    def power(cls, name: str, exponent: int) -> "Word":
        sign = 1 if exponent > 0 else -1
        return cls(tuple((name, sign) for _ in range(abs(exponent))))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return self.render()

    @cached_property
    def names(self) -> FrozenSet[str]:
        return frozenset(name for name, _ in self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(exponent == 1 for _, exponent in self.letters)

    def inverse(self) -> "Word":
        return Word(tuple((name, -exponent) for name, exponent in reversed(self.letters)))

    def count(self, name: str) -> int:
        """Number of occurrences of ``name`` with either exponent."""
        return sum(1 for letter, _ in self.letters if letter == name)

    def render(self) -> str:
        """Renders the word in the presentation grammar, e.g. ``a^2*b^-1``.

        The empty word renders as ``1``.
        """
        if not self.letters:
            return "1"
        parts: List[str] = []
        run_name, run_exp = self.letters[0][0], 0
        for name, exponent in self.letters:
            if name == run_name and (run_exp == 0 or (run_exp > 0) == (exponent > 0)):
                run_exp += exponent
                continue
            parts.append(_render_power(run_name, run_exp))
            run_name, run_exp = name, exponent
        parts.append(_render_power(run_name, run_exp))
        return "*".join(parts)


def _render_power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def free_reduce(w: Word) -> Word:
    """Cancels adjacent inverse letters until none remain."""
    stack: List[Letter] = []
    for name, exponent in w.letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -exponent:
            stack.pop()
        else:
            stack.append((name, exponent))
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> Word:
    """Freely and cyclically reduces ``w``; the result is a conjugate of ``w``."""
    letters = free_reduce(w).letters
    start, end = 0, len(letters)
    while end - start >= 2:
        first, last = letters[start], letters[end - 1]
        if first[0] == last[0] and first[1] == -last[1]:
            start += 1
            end -= 1
        else:
            break
    return Word(letters[start:end])


def canonical_relator(w: Word) -> Tuple[Letter, ...]:
    """A key shared by all relators that define the same normal closure trivially.

    Two relators get the same key when one is a cyclic permutation of the
    other or of its inverse, after free and cyclic reduction.
    """
    reduced = cyclic_reduce(w)
    if reduced.is_empty():
        return ()
    candidates = []
    for letters in (reduced.letters, reduced.inverse().letters):
        for shift in range(len(letters)):
            candidates.append(letters[shift:] + letters[:shift])
    return min(candidates, key=_letters_key)


def _letters_key(letters: Tuple[Letter, ...]) -> Tuple[Tuple[str, int], ...]:
    return tuple((name, -exponent) for name, exponent in letters)


def substitute(w: Word, images: Mapping[str, Word]) -> Word:
    """Replaces every generator named in ``images`` and freely reduces the result."""
    letters: List[Letter] = []
    for name, exponent in w.letters:
        image = images.get(name)
        if image is None:
            letters.append((name, exponent))
        elif exponent == 1:
            letters.extend(image.letters)
        else:
            letters.extend(image.inverse().letters)
    return free_reduce(Word(tuple(letters)))


def concat(words: Iterable[Word]) -> Word:
    letters: List[Letter] = []
    for word in words:
        letters.extend(word.letters)
    return Word(tuple(letters))
