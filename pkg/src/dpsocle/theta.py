"""
theta-stable parabolic data for U(m,n) and associated varieties of the
corresponding derived functor modules.

A pair ``((m_1..m_l), (n_1..n_l))`` labels the block-upper-triangular
theta-stable parabolic with Levi ``U(m_1,n_1) x ... x U(m_l,n_l)``. Its
associated variety (good range) is computed by starting from the zero orbit
of ``U(m_1,n_1)`` and adding ``m_i`` pluses and ``n_i`` minuses for each
further block, one sign per row end, highest rows first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .diagrams import (
    SignedYoungDiagram, YoungDiagram, orbit_dimension, young_from_composition,
)
from .errors import InvalidInput
from .rational import RationalLike, fmt_seq, fractions
from .weyl import Composition

__all__ = [
    "SignedPair", "DFMParam", "enumerate_pairs", "nilrad_dimension",
    "trapa_add", "associated_shape", "is_normal", "omega_set", "phi_map",
    "gk_dimension",
]


@dataclass(frozen=True)
class SignedPair:
    m_parts: tuple[int, ...]
    n_parts: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.m_parts)
        n = tuple(int(x) for x in self.n_parts)
        if len(m) != len(n):
            raise InvalidInput(f"m and n parts differ in length: {m} vs {n}")
        if any(x < 0 for x in m + n):
            raise InvalidInput("pair entries must be non-negative")
        if any(a + b == 0 for a, b in zip(m, n)):
            raise InvalidInput(f"every block needs m_j + n_j > 0: {m}, {n}")
        object.__setattr__(self, "m_parts", m)
        object.__setattr__(self, "n_parts", n)

    @classmethod
    def parse(cls, text: str) -> "SignedPair":
        """Parse ``"m=1,0,1 n=0,1,0"``."""
        match = re.fullmatch(r"\s*m=([\d,\s]*?)\s+n=([\d,\s]*?)\s*", text)
        if not match:
            raise InvalidInput(f"pair must look like 'm=1,0 n=0,1': {text!r}")

        def ints(s: str) -> tuple[int, ...]:
            s = s.strip()
            return tuple(int(t) for t in s.split(",")) if s else ()

        return cls(ints(match.group(1)), ints(match.group(2)))

    @property
    def length(self) -> int:
        return len(self.m_parts)

    @property
    def blocks(self) -> tuple[int, ...]:
        """The composition ``m + n`` of block sizes."""
        return tuple(a + b for a, b in zip(self.m_parts, self.n_parts))

    @property
    def signature(self) -> tuple[int, int]:
        return sum(self.m_parts), sum(self.n_parts)

    def swapped(self) -> "SignedPair":
        return SignedPair(self.n_parts, self.m_parts)

    def __str__(self) -> str:
        return ("m=" + ",".join(map(str, self.m_parts))
                + " n=" + ",".join(map(str, self.n_parts)))


@dataclass(frozen=True)
class DFMParam:
    """Label ``A_(m,n)[h]`` of a derived functor module."""
    pair: SignedPair
    h: tuple[Fraction, ...]

    def __post_init__(self):
        h = fractions(self.h)
        if len(h) != self.pair.length:
            raise InvalidInput(f"h has length {len(h)}, pair has {self.pair.length} blocks")
        object.__setattr__(self, "h", h)

    @classmethod
    def of(cls, m_parts: Sequence[int], n_parts: Sequence[int],
           h: Sequence[RationalLike]) -> "DFMParam":
        return cls(SignedPair(tuple(m_parts), tuple(n_parts)), fractions(h))

    def to_json(self) -> dict:
        return {"pair": str(self.pair), "h": fmt_seq(self.h)}


def _as_parts(c) -> tuple[int, ...]:
    return tuple(c.parts) if isinstance(c, Composition) else tuple(int(x) for x in c)


def enumerate_pairs(m: int, n: int, c: Composition | Sequence[int]) -> list[SignedPair]:
    """All pairs with block sizes ``c`` and signature ``(m, n)``, lexicographic in ``m_parts``."""
    parts = _as_parts(c)
    if any(p < 1 for p in parts):
        raise InvalidInput(f"block sizes must be positive: {parts}")
    if m < 0 or n < 0 or sum(parts) != m + n:
        raise InvalidInput(f"sum of {parts} does not equal m + n = {m + n}")

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == len(parts):
            if left == 0:
                yield ()
            return
        rest = sum(parts[i + 1:])
        for a in range(max(0, left - rest), min(parts[i], left) + 1):
            for tail in rec(i + 1, left - a):
                yield (a,) + tail

    return [SignedPair(ms, tuple(p - a for p, a in zip(parts, ms))) for ms in rec(0, m)]


def nilrad_dimension(pair: SignedPair) -> int:
    b = pair.blocks
    return sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))


def _add_signs(rows: list[str], p: int, q: int) -> list[str]:
    # rows must be ordered by weakly decreasing length; order within a
    # group of equal length is arbitrary
    budget = {"+": p, "-": q}
    out = []
    for row in rows:
        sign = "-" if row[-1] == "+" else "+"
        if budget[sign] > 0:
            budget[sign] -= 1
            row += sign
        out.append(row)
    out += ["+"] * budget["+"] + ["-"] * budget["-"]
    return out


def trapa_add(t: SignedYoungDiagram, p: int, q: int) -> SignedYoungDiagram:
    """
    Add ``p`` pluses and ``q`` minuses to the row ends of ``t``.

    At most one sign per row end, rows stay alternating, and each sign goes
    to the highest row that can take it; leftovers start new rows.

    >>> str(trapa_add(SignedYoungDiagram.parse("+-"), 1, 1))
    '+-+/-'
    """
    if p < 0 or q < 0:
        raise InvalidInput("sign counts must be non-negative")
    return SignedYoungDiagram(tuple(_add_signs(list(t.rows), p, q)))


def _associated_rows(pair: SignedPair,
                     reorder: Callable[[list[str]], list[str]] | None = None) -> list[str]:
    if pair.length == 0:
        return []
    rows = ["+"] * pair.m_parts[0] + ["-"] * pair.n_parts[0]
    for p, q in zip(pair.m_parts[1:], pair.n_parts[1:]):
        rows = sorted(rows, key=len, reverse=True)
        if reorder is not None:
            rows = reorder(rows)
        rows = _add_signs(rows, p, q)
    return rows


@lru_cache(maxsize=65536)
def associated_shape(pair: SignedPair) -> SignedYoungDiagram:
    """Signed diagram of the associated variety of ``A_(m,n)[h]``, h good."""
    return SignedYoungDiagram(tuple(_associated_rows(pair)))


def is_normal(pair: SignedPair) -> bool:
    return associated_shape(pair).shape == young_from_composition(pair.blocks)


def omega_set(m: int, n: int, c: Composition | Sequence[int]) -> list[SignedPair]:
    """Normal pairs with block sizes exactly ``c``."""
    return list(_omega_cached(m, n, _as_parts(c)))


@lru_cache(maxsize=4096)
def _omega_cached(m: int, n: int, parts: tuple[int, ...]) -> tuple[SignedPair, ...]:
    return tuple(pair for pair in enumerate_pairs(m, n, parts) if is_normal(pair))


def phi_map(m: int, n: int, c: Composition | Sequence[int]) -> dict[SignedPair, SignedYoungDiagram]:
    """Map each normal pair with blocks ``c`` to its associated signed diagram.

    Injectivity is checked on every call; a violation raises ``AssertionError``.
    """
    mapping = {pair: associated_shape(pair) for pair in omega_set(m, n, c)}
    if len(set(mapping.values())) != len(mapping):
        raise AssertionError(f"phi is not injective for m={m} n={n} c={_as_parts(c)}")
    return mapping


def gk_dimension(pair: SignedPair) -> int:
    dim = orbit_dimension(associated_shape(pair).shape)
    if dim % 2:
        raise AssertionError(f"odd orbit dimension {dim} for {pair}")
    return dim // 2


def shape_of(pair: SignedPair) -> YoungDiagram:
    return associated_shape(pair).shape
