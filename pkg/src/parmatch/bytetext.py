"""Immutable byte-string values with exact slicing and chunking.

ByteText is the domain of every matcher in this package: a thin value
wrapper around ``bytes`` whose operations (take, drop, substring, chunks)
have hard preconditions instead of Python's clamping slice semantics.
Out-of-range requests raise :class:`RangeError` rather than silently
truncating, so algebraic properties stated about these operations hold
byte-for-byte.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .monoid import ChunkableOps


class RangeError(ValueError):
    """A slicing operation was asked for a window outside the value."""


@dataclass(frozen=True, slots=True)
class ByteText:
    """An immutable, freely shareable sequence of bytes.

    Matching is byte-exact: text constructors encode to bytes up front and
    all offsets are byte offsets, so chunk boundaries may fall inside
    multi-byte encoded characters without affecting correctness.
    """

    data: bytes = b""

    def __post_init__(self) -> None:
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))

    @classmethod
    def from_text(cls, text: str, encoding: str = "utf-8") -> "ByteText":
        return cls(text.encode(encoding))

    @classmethod
    def from_file(cls, path: str | os.PathLike) -> "ByteText":
        with open(path, "rb") as handle:
            return cls(handle.read())

    def __len__(self) -> int:
        return len(self.data)

    def __bytes__(self) -> bytes:
        return self.data

    def __bool__(self) -> bool:
        return bool(self.data)

    def __add__(self, other: "ByteText") -> "ByteText":
        if not isinstance(other, ByteText):
            return NotImplemented
        return ByteText(self.data + other.data)

    def __repr__(self) -> str:
        return f"ByteText({self.data!r})"

    def take(self, count: int) -> "ByteText":
        """First ``count`` bytes; ``count`` must not exceed the length."""
        if not 0 <= count <= len(self.data):
            raise RangeError(f"take {count} from length {len(self.data)}")
        return ByteText(self.data[:count])

    def drop(self, count: int) -> "ByteText":
        """Everything after the first ``count`` bytes."""
        if not 0 <= count <= len(self.data):
            raise RangeError(f"drop {count} from length {len(self.data)}")
        return ByteText(self.data[count:])

    def substring(self, offset: int, length: int) -> "ByteText":
        """``length`` bytes starting at ``offset``.

        Equivalent to ``take(length)`` after ``drop(offset)``; the window
        must lie entirely inside the value.
        """
        if offset < 0 or length < 0 or offset + length > len(self.data):
            raise RangeError(
                f"substring [{offset}, {offset + length}) of length {len(self.data)}"
            )
        return ByteText(self.data[offset : offset + length])

    def chunks(self, size: int) -> list["ByteText"]:
        """Split into pieces of ``size`` bytes (last one may be shorter).

        Concatenating the result reconstructs the value exactly.  A value
        no longer than ``size`` (including the empty value) yields a
        single-element list.
        """
        if size < 1:
            raise ValueError(f"chunk size must be >= 1, got {size}")
        rest = self
        parts: list[ByteText] = []
        while len(rest) > size:
            parts.append(rest.take(size))
            rest = rest.drop(size)
        parts.append(rest)
        return parts


EMPTY = ByteText()


def chunkable_ops() -> "ChunkableOps[ByteText]":
    """ByteText as a chunkable monoid (concatenation with empty identity)."""
    from .monoid import ChunkableOps

    return ChunkableOps(
        identity=ByteText,
        combine=ByteText.__add__,
        length=len,
        take=lambda count, text: text.take(count),
        drop=lambda count, text: text.drop(count),
    )
