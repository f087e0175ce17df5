"""Finite linear combinations of hashable basis keys with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Iterable


class LinearCombination:
    """Immutable sparse vector ``{key: Fraction}`` without zero entries.

    Subclasses fix the key shape through :meth:`_normalize_key`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, coeff in items:
                key = self._normalize_key(key)
                acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @staticmethod
    def _normalize_key(key):
        return key

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, key) -> Fraction:
        return self._terms.get(self._normalize_key(key), Fraction(0))

    def sorted_items(self):
        """Terms ordered by the integer label, then partition in decreasing lex order."""
        by_partition = sorted(self._terms.items(), key=lambda kv: tuple(kv[0][1]), reverse=True)
        return sorted(by_partition, key=lambda kv: kv[0][0])

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._from_clean(out)

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (Rational, int)):
            return NotImplemented
        scalar = Fraction(scalar)
        if scalar == 0:
            return self._from_clean({})
        return self._from_clean({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def apply(self, basis_map: Callable[[tuple], Iterable[tuple[Fraction, tuple]]]):
        """Extend ``basis_map(key) -> [(coeff, key'), ...]`` linearly."""
        out: dict = {}
        for key, c in self._terms.items():
            for a, new_key in basis_map(key):
                s = out.get(new_key, 0) + a * c
                if s:
                    out[new_key] = s
                else:
                    out.pop(new_key, None)
        return self._from_clean(out)

    def __repr__(self):
        body = " + ".join(f"{c}*{k}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({body or '0'})"
