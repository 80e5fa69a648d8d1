"""Exact Laurent-polynomial arithmetic over the integers.

Two coefficient rings are used throughout the package:

  * ``LaurentA``  -- Z[A, A^-1], one variable.
  * ``LaurentVZ`` -- Z[v, v^-1, z, z^-1], two variables.

Values are immutable and hashable, so they are safe to share between
threads and to use as memoisation keys.  Terms are stored sparsely
(exponent -> nonzero integer coefficient); serialization orders terms by
exponent so equal values have identical canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class UnitFlag:
    """Result of unit detection: is the polynomial +-(single monomial)?"""

    is_unit: bool
    sign: int = 0
    exponents: Tuple[int, ...] = ()


def _clean(terms: Dict, pair) -> Dict:
    return {e: c for e, c in pair if c != 0}


class LaurentA:
    """A Laurent polynomial in A with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        t = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", t)
        object.__setattr__(self, "_hash", None)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentA":
        return LaurentA()

    @staticmethod
    def one() -> "LaurentA":
        return LaurentA({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentA":
        return LaurentA({exp: coeff})

    @staticmethod
    def from_int(n: int) -> "LaurentA":
        return LaurentA({0: n})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentA") -> "LaurentA":
        t = dict(self._terms)
        for e, c in other._terms.items():
            n = t.get(e, 0) + c
            if n:
                t[e] = n
            else:
                t.pop(e, None)
        return LaurentA(t)

    def __neg__(self) -> "LaurentA":
        return LaurentA({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentA") -> "LaurentA":
        return self + (-other)

    def __mul__(self, other) -> "LaurentA":
        if isinstance(other, int):
            return LaurentA({e: c * other for e, c in self._terms.items()})
        t: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                n = t.get(e, 0) + c1 * c2
                if n:
                    t[e] = n
                else:
                    t.pop(e, None)
        return LaurentA(t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentA":
        if k < 0:
            u = self.unit_flag()
            if not u.is_unit:
                raise ValueError("negative power of a non-unit")
            inv = LaurentA({-u.exponents[0]: u.sign})
            return inv ** (-k)
        r = LaurentA.one()
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentA) and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __setattr__(self, *a):  # immutable
        raise AttributeError("LaurentA is immutable")

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._terms.items())

    def unit_flag(self) -> UnitFlag:
        if len(self._terms) != 1:
            return UnitFlag(False)
        (e, c), = self._terms.items()
        if c not in (1, -1):
            return UnitFlag(False)
        return UnitFlag(True, c, (e,))

    def divide_by_unit(self, unit: "LaurentA") -> "LaurentA":
        u = unit.unit_flag()
        if not u.is_unit:
            raise ValueError("division only by units (+-A^k)")
        return self * LaurentA({-u.exponents[0]: u.sign})

    # -- serialization ---------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*A^{e}" for e, c in self.items()]
        return " + ".join(parts)

    def to_json(self) -> List[List[int]]:
        return [[e, c] for e, c in self.items()]

    @staticmethod
    def from_json(data: Iterable[Iterable[int]]) -> "LaurentA":
        t: Dict[int, int] = {}
        for e, c in data:
            t[int(e)] = t.get(int(e), 0) + int(c)
        return LaurentA(t)

    def __repr__(self):
        return f"LaurentA({self.text()})"


class LaurentVZ:
    """A Laurent polynomial in v and z with integer coefficients.

    Exponent keys are pairs (a, b) meaning v^a * z^b.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Dict[Tuple[int, int], int]] = None):
        t = {(int(a), int(b)): int(c) for (a, b), c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "_terms", t)
        object.__setattr__(self, "_hash", None)

    @staticmethod
    def zero() -> "LaurentVZ":
        return LaurentVZ()

    @staticmethod
    def one() -> "LaurentVZ":
        return LaurentVZ({(0, 0): 1})

    @staticmethod
    def monomial(va: int, zb: int, coeff: int = 1) -> "LaurentVZ":
        return LaurentVZ({(va, zb): coeff})

    def __add__(self, other: "LaurentVZ") -> "LaurentVZ":
        t = dict(self._terms)
        for e, c in other._terms.items():
            n = t.get(e, 0) + c
            if n:
                t[e] = n
            else:
                t.pop(e, None)
        return LaurentVZ(t)

    def __neg__(self) -> "LaurentVZ":
        return LaurentVZ({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentVZ") -> "LaurentVZ":
        return self + (-other)

    def __mul__(self, other) -> "LaurentVZ":
        if isinstance(other, int):
            return LaurentVZ({e: c * other for e, c in self._terms.items()})
        t: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                n = t.get(e, 0) + c1 * c2
                if n:
                    t[e] = n
                else:
                    t.pop(e, None)
        return LaurentVZ(t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentVZ":
        if k < 0:
            u = self.unit_flag()
            if not u.is_unit:
                raise ValueError("negative power of a non-unit")
            inv = LaurentVZ({(-u.exponents[0], -u.exponents[1]): u.sign})
            return inv ** (-k)
        r = LaurentVZ.one()
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentVZ) and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __setattr__(self, *a):
        raise AttributeError("LaurentVZ is immutable")

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._terms.items())

    def unit_flag(self) -> UnitFlag:
        if len(self._terms) != 1:
            return UnitFlag(False)
        ((a, b), c), = self._terms.items()
        if c not in (1, -1):
            return UnitFlag(False)
        return UnitFlag(True, c, (a, b))

    def divide_by_unit(self, unit: "LaurentVZ") -> "LaurentVZ":
        u = unit.unit_flag()
        if not u.is_unit:
            raise ValueError("division only by units (+-v^a z^b)")
        return self * LaurentVZ({(-u.exponents[0], -u.exponents[1]): u.sign})

    def is_v_monomial(self) -> bool:
        """True iff the value is +-v^a (a unit with no z part)."""
        u = self.unit_flag()
        return u.is_unit and u.exponents[1] == 0

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*v^{a}*z^{b}" for (a, b), c in self.items()]
        return " + ".join(parts)

    def to_json(self) -> List[List[int]]:
        return [[a, b, c] for (a, b), c in self.items()]

    @staticmethod
    def from_json(data: Iterable[Iterable[int]]) -> "LaurentVZ":
        t: Dict[Tuple[int, int], int] = {}
        for a, b, c in data:
            k = (int(a), int(b))
            t[k] = t.get(k, 0) + int(c)
        return LaurentVZ(t)

    def __repr__(self):
        return f"LaurentVZ({self.text()})"


# Frequently used constants.

A = LaurentA.monomial(1)
A_INV = LaurentA.monomial(-1)
ONE_A = LaurentA.one()
ZERO_A = LaurentA.zero()

#: Value of a split trivial circle in the Kauffman bracket calculus.
LOOP_A = LaurentA({2: -1, -2: -1})

ONE_VZ = LaurentVZ.one()
ZERO_VZ = LaurentVZ.zero()

#: Value of a split trivial circle in the oriented calculus: (v^-1 - v) z^-1.
LOOP_VZ = LaurentVZ({(-1, -1): 1, (1, -1): -1})


def monA(exp: int, coeff: int = 1) -> LaurentA:
    return LaurentA.monomial(exp, coeff)


def monVZ(va: int, zb: int, coeff: int = 1) -> LaurentVZ:
    return LaurentVZ.monomial(va, zb, coeff)
