"""
Type-A Weyl group combinatorics: permutations in one-line notation,
compositions, longest elements and the palindrome/involution criterion.

Permutations act on ``1..N``; ``p * q`` applies ``q`` first.

>>> parabolic_longest(Composition((2, 1)))
Permutation(images=(2, 1, 3))
>>> assumption_a_typeA(Composition((2, 1, 2)))["assumption_a"]
True
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import InvalidInput

__all__ = [
    "Permutation", "Composition", "compositions", "longest_element",
    "parabolic_longest", "is_involution", "assumption_a_typeA",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..N}`` stored by its images."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInput(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise InvalidInput(f"permutation must look like [3,2,1]: {text!r}")
        body = body[1:-1].strip()
        try:
            images = tuple(int(t) for t in body.split(",")) if body else ()
        except ValueError as exc:
            raise InvalidInput(f"bad permutation {text!r}") from exc
        return cls(images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise InvalidInput("cannot compose permutations of different degree")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, p in enumerate(self.images, start=1):
            inv[p - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions (Coxeter length)."""
        return sum(1 for a, b in combinations(self.images, 2) if a > b)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True)
class Composition:
    """An ordered sequence of positive block sizes.

    The empty composition is allowed; it stands for the trivial parabolic
    data of rank zero (e.g. ``kappa = ()``).
    """
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise InvalidInput(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        body = text.strip()
        if body in ("", "()", "-", "[]"):
            return cls(())
        try:
            return cls(tuple(int(t) for t in body.strip("()[]").split(",")))
        except ValueError as exc:
            raise InvalidInput(f"bad composition {text!r}") from exc

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def partial_sums(self) -> tuple[int, ...]:
        """``(k*_0, k*_1, ..., k*_s)`` with ``k*_0 = 0``."""
        out = [0]
        for p in self.parts:
            out.append(out[-1] + p)
        return tuple(out)

    def is_palindrome(self) -> bool:
        return self.parts == self.parts[::-1]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` (``2**(n-1)`` of them for ``n >= 1``)."""
    if n == 0:
        yield Composition(())
        return
    for mask in range(2 ** (n - 1)):
        parts, run = [], 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise InvalidInput(f"longest element needs N >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def parabolic_longest(c: Composition | Sequence[int]) -> Permutation:
    """Longest element of the Levi Weyl group: reverse each block of ``c``."""
    c = c if isinstance(c, Composition) else Composition(tuple(c))
    images: list[int] = []
    for start, part in zip(c.partial_sums(), c.parts):
        images.extend(range(start + part, start, -1))
    return Permutation(tuple(images))


def is_involution(p: Permutation) -> bool:
    return all(p(p(i)) == i for i in range(1, len(p) + 1))


def assumption_a_typeA(c: Composition | Sequence[int], type_: str = "A") -> dict:
    """
    Report the palindrome and involution conditions for the parabolic of ``c``.

    In type A every involution of the Weyl group is a Duflo involution, so
    ``duflo`` equals ``involution``. Other root system types are refused.
    """
    if type_ != "A":
        raise InvalidInput(f"Duflo involutions are only determined in type A, not {type_!r}")
    c = c if isinstance(c, Composition) else Composition(tuple(c))
    if c.total < 1:
        raise InvalidInput("composition must have positive total")
    palindrome = c.is_palindrome()
    involution = is_involution(longest_element(c.total) * parabolic_longest(c))
    return {
        "palindrome": palindrome,
        "involution": involution,
        "duflo": involution,
        "assumption_a": palindrome,
    }
