"""
Young diagrams, signed Young diagrams and nilpotent orbit dimensions.

A signed row is a string over ``+``/``-`` with alternating signs, so it is
determined by its length and leading sign. Canonical order of rows is
(length descending, ``+`` leading before ``-`` leading).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidInput
from .weyl import Composition

__all__ = [
    "YoungDiagram", "SignedYoungDiagram", "young_from_composition",
    "orbit_dimension", "enumerate_signed", "canonicalize", "signed_row",
]


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise InvalidInput(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidInput(f"rows must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        body = text.strip()
        if body in ("", "()", "-"):
            return cls(())
        try:
            return cls(tuple(int(t) for t in body.split(",")))
        except ValueError as exc:
            raise InvalidInput(f"bad Young diagram {text!r}") from exc

    @property
    def boxes(self) -> int:
        return sum(self.rows)

    def columns(self) -> tuple[int, ...]:
        """Column lengths, i.e. the transpose partition."""
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0]))

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))


def signed_row(length: int, lead: str) -> str:
    other = "-" if lead == "+" else "+"
    return "".join(lead if j % 2 == 0 else other for j in range(length))


def _check_row(row: str) -> None:
    if not row or any(ch not in "+-" for ch in row):
        raise InvalidInput(f"signed row must be a non-empty string over '+-': {row!r}")
    if any(a == b for a, b in zip(row, row[1:])):
        raise InvalidInput(f"signs must alternate along a row: {row!r}")


def _row_key(row: str) -> tuple[int, int]:
    return (-len(row), 0 if row[0] == "+" else 1)


@dataclass(frozen=True)
class SignedYoungDiagram:
    """Equivalence class of signed Young diagrams, stored in canonical row order."""
    rows: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        for row in rows:
            _check_row(row)
        object.__setattr__(self, "rows", tuple(sorted(rows, key=_row_key)))

    @classmethod
    def parse(cls, text: str) -> "SignedYoungDiagram":
        body = text.strip()
        if body in ("", "()", "-/") or body == "∅":
            return cls(())
        return cls(tuple(r.strip() for r in body.split("/")))

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def signature(self) -> tuple[int, int]:
        joined = "".join(self.rows)
        return joined.count("+"), joined.count("-")

    def flipped(self) -> "SignedYoungDiagram":
        table = str.maketrans("+-", "-+")
        return SignedYoungDiagram(tuple(r.translate(table) for r in self.rows))

    def __str__(self) -> str:
        return "/".join(self.rows)


def canonicalize(rows: SignedYoungDiagram | Iterable[str]) -> SignedYoungDiagram:
    """
    Canonical representative of the class of ``rows`` under interchange of
    equal-length rows.

    >>> str(canonicalize(["+", "+-+"]))
    '+-+/+'
    """
    if isinstance(rows, SignedYoungDiagram):
        rows = rows.rows
    return SignedYoungDiagram(tuple(rows))


def young_from_composition(c: Composition | Sequence[int]) -> YoungDiagram:
    """The diagram whose columns are the parts of ``c`` (zero parts ignored)."""
    parts = [p for p in c if p > 0]
    if not parts:
        return YoungDiagram(())
    return YoungDiagram(tuple(sum(1 for p in parts if p >= i) for i in range(1, max(parts) + 1)))


def orbit_dimension(y: YoungDiagram) -> int:
    """Complex dimension of the nilpotent GL(N) orbit with Jordan type ``y``."""
    return y.boxes ** 2 - sum(t * t for t in y.columns())


def _row_groups(y: YoungDiagram) -> list[tuple[int, int]]:
    groups: list[tuple[int, int]] = []
    for r in y.rows:
        if groups and groups[-1][0] == r:
            groups[-1] = (r, groups[-1][1] + 1)
        else:
            groups.append((r, 1))
    return groups


def enumerate_signed(y: YoungDiagram, m: int, n: int) -> list[SignedYoungDiagram]:
    """
    All classes of signed diagrams of shape ``y`` with ``m`` pluses and ``n``
    minuses, sorted by text form.

    Each group of ``r`` equal rows of length ``L`` is described by how many of
    its rows lead with ``+``; this avoids generating permuted duplicates.
    """
    if m < 0 or n < 0 or m + n != y.boxes:
        raise InvalidInput(f"signature ({m},{n}) does not match {y.boxes} boxes")
    groups = _row_groups(y)
    out = []
    for leads in product(*(range(r + 1) for _, r in groups)):
        plus = 0
        rows: list[str] = []
        for (length, r), a in zip(groups, leads):
            plus += a * ((length + 1) // 2) + (r - a) * (length // 2)
            rows += [signed_row(length, "+")] * a + [signed_row(length, "-")] * (r - a)
        if plus == m:
            out.append(SignedYoungDiagram(tuple(rows)))
    return sorted(out, key=str)
