"""Extended naturals, parameters and result values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidParameter


class Infinity:
    """The top element of the extended naturals.  Use the singleton :data:`INF`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("dpdom.INF")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __mul__(self, other):
        return self

    __rmul__ = __mul__

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ExtNat = Union[int, Infinity]


def ext_str(x: ExtNat) -> str:
    return "inf" if x is INF else str(x)


def ext_json(x: ExtNat) -> int | str:
    return "infinite" if x is INF else int(x)


def ext_from_json(x) -> ExtNat:
    if x == "infinite":
        return INF
    return int(x)


@dataclass(frozen=True)
class Params:
    d: int
    p: int

    def __post_init__(self):
        if self.d < 0 or self.p < 0:
            raise InvalidParameter(f"d and p must be nonnegative, got d={self.d}, p={self.p}")


@dataclass(frozen=True)
class Finite:
    k: int
    cert: frozenset[int]

    @property
    def value(self) -> int:
        return self.k


@dataclass(frozen=True)
class Infinite:
    @property
    def value(self) -> Infinity:
        return INF


@dataclass(frozen=True)
class Exhausted:
    nodes_explored: int

    @property
    def value(self) -> None:
        return None


GammaValue = Union[Finite, Infinite, Exhausted]
