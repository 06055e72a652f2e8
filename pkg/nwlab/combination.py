"""Immutable finite linear combinations with exact rational coefficients."""
# combination.py

from collections.abc import Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Generic, Optional, TypeVar, Union

K = TypeVar("K", bound=Hashable)
Scalar = Union[int, Fraction]


def as_fraction(value: Union[Scalar, Rational, str]) -> Fraction:
    """Coerce an integer, rational or `p/q` literal to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def format_fraction(value: Fraction) -> str:
    """Render a rational as the canonical `num/den` string."""
    return f"{value.numerator}/{value.denominator}"


class Combination(Mapping[K, Fraction], Generic[K]):
    """A finite map from basis keys to nonzero rationals.

    Zero coefficients are never stored, so equality is map equality and
    the empty combination is the zero vector.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[K, Scalar] | Iterable[tuple[K, Scalar]]] = None) -> None:
        accumulated: dict[K, Fraction] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in pairs:
                accumulated[key] = accumulated.get(key, Fraction(0)) + as_fraction(coeff)
        self._terms: dict[K, Fraction] = {k: c for k, c in accumulated.items() if c}
        self._hash: Optional[int] = None

    @classmethod
    def basis(cls, key: K) -> "Combination[K]":
        """The combination with a single unit coefficient."""
        return cls({key: 1})

    def __getitem__(self, key: K) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator[K]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Combination):
            return self._terms == other._terms
        return NotImplemented

    def coeff(self, key: K) -> Fraction:
        """Coefficient of `key`, zero when absent."""
        return self._terms.get(key, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _merge(self, other: "Combination[K]", sign: int) -> dict[K, Fraction]:
        merged = dict(self._terms)
        for key, coeff in other.items():
            merged[key] = merged.get(key, Fraction(0)) + sign * coeff
        return merged

    def __add__(self, other: "Combination[K]") -> "Combination[K]":
        if not isinstance(other, Combination):
            return NotImplemented
        return type(self)(self._merge(other, 1))

    def __sub__(self, other: "Combination[K]") -> "Combination[K]":
        if not isinstance(other, Combination):
            return NotImplemented
        return type(self)(self._merge(other, -1))

    def __neg__(self) -> "Combination[K]":
        return type(self)({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> "Combination[K]":
        if not isinstance(scalar, (int, Fraction)) or isinstance(scalar, bool):
            return NotImplemented
        return type(self)({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = " + ".join(f"{format_fraction(c)}*{k!r}" for k, c in self._terms.items())
        return f"{type(self).__name__}({body or '0'})"
